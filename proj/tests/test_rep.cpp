#include <catch2/catch_amalgamated.hpp>

#include "indres/catalog.hpp"
#include "indres/homspace.hpp"
#include "indres/rep.hpp"

using namespace indres;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F2 = FieldDescriptor::prime(2);
const FieldDescriptor F3 = FieldDescriptor::prime(3);

Catalog& cat() {
  static Catalog c = builtin_catalog();
  return c;
}

Subgroup a3() {
  return cat().hom("sign_S3_C2").kernel;
}

Representation sign_rep(const GroupPtr&) {
  // 1-dim sign representation of S3 over Q, via the nontrivial C2 character
  Matrix m(1, 1, Q);
  m.at(0, 0) = -FieldScalar::one(Q);
  Representation sgn_c2 =
      make_representation(cat().group("C2"), Q, {Matrix::identity(Q, 1), m});
  return restrict_along(cat().hom("sign_S3_C2"), sgn_c2);
}

}  // namespace

TEST_CASE("constructors: trivial, regular, permutation") {
  const GroupPtr& s3 = cat().group("S3");
  Representation t = trivial_rep(s3, Q, 1);
  for (int g = 0; g < 6; ++g) CHECK(t.of(g).is_identity());

  Representation r = regular_rep(cat().group("C2"), F2);
  CHECK(r.dim == 2);
  CHECK(r.of(1).at(0, 1).is_one());
  CHECK(r.of(1).at(1, 0).is_one());
  CHECK(r.of(1).at(0, 0).is_zero());

  Representation p = permutation_rep(s3, Q, s3->perms);
  CHECK(p.dim == 3);
}

TEST_CASE("make_representation rejects non-representations") {
  const GroupPtr& c2 = cat().group("C2");
  // rho(1) not an involution
  Matrix bad(2, 2, Q);
  bad.at(0, 0) = FieldScalar::one(Q);
  bad.at(0, 1) = FieldScalar::one(Q);
  bad.at(1, 1) = FieldScalar::one(Q);
  CHECK_THROWS_WITH(make_representation(c2, Q, {Matrix::identity(Q, 2), bad}),
                    Catch::Matchers::ContainsSubstring("rho(g h)"));
  // identity must act as identity
  CHECK_THROWS(make_representation(c2, Q, {bad, bad}));
}

TEST_CASE("restrict_along: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation v = regular_rep(cat().group("C2"), Q);
  Representation id_res = restrict_along(identity_hom(cat().group("C2")), v);
  CHECK(id_res.mats == v.mats);

  Representation triv_res = restrict_along(trivial_hom(s3, cat().group("C2")), v);
  for (int g = 0; g < 6; ++g) CHECK(triv_res.of(g).is_identity());

  // Res along sign of regular QC2: A3 acts trivially, transpositions swap
  Representation res = restrict_along(cat().hom("sign_S3_C2"), v);
  CHECK(res.dim == 2);
  for (int g = 0; g < 6; ++g) {
    bool in_a3 = a3().contains(g);
    CHECK(res.of(g).is_identity() == in_a3);
  }
}

TEST_CASE("fixed_points: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation reg = regular_rep(s3, Q);
  CHECK(fixed_points(reg, trivial_subgroup(s3)).dim() == 6);
  CHECK(fixed_points(reg, a3()).dim() == 2);
  CHECK(fixed_points(trivial_rep(s3, Q, 3), full_subgroup(s3)).dim() == 3);
}

TEST_CASE("cofixed_quotient: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation reg = regular_rep(s3, Q);

  CofixedResult triv_k = cofixed_quotient(reg, trivial_subgroup(s3));
  CHECK(triv_k.rep.dim == 6);
  CHECK(triv_k.projection == Matrix::identity(Q, 6));

  CofixedResult c = cofixed_quotient(reg, a3());
  CHECK(c.rep.dim == 2);
  Representation reg_c2 = regular_rep(cat().group("C2"), Q);
  auto iso = iso_certificate(c.rep, reg_c2, 0, 64);
  CHECK(iso.status == IsoStatus::certified);

  // intertwining of the projection, checked against every element
  for (int g = 0; g < 6; ++g)
    CHECK(c.projection * reg.of(g) == c.rep.of(c.quotient.projection(g)) * c.projection);

  // trivial F2-rep of C2 mod C2: augmentation subspace is zero
  const GroupPtr& c2 = cat().group("C2");
  CofixedResult t = cofixed_quotient(trivial_rep(c2, F2, 1), full_subgroup(c2));
  CHECK(t.rep.dim == 1);

  // non-normal subgroup is rejected
  const GroupPtr& s3g = cat().group("S3");
  Subgroup t2 = subgroup_generated(s3g, {element_by_perm(s3g, parse_cycles("(0 1)", 3))});
  CHECK_THROWS(cofixed_quotient(reg, t2));
}

TEST_CASE("induce_classical: spec examples") {
  const GroupPtr& s3 = cat().group("S3");

  // h = g: the induced representation is v itself
  Representation reg = regular_rep(s3, Q);
  RealizedSubgroup full = realize(full_subgroup(s3));
  Representation reg_full = restrict_along(full.inclusion, reg);
  InductionResult same = induce_classical(full_subgroup(s3), reg_full);
  CHECK(same.rep.mats == reg.mats);
  CHECK(same.transversal == std::vector<int>{0});

  // h = {e}, v = field: the regular representation, matrix for matrix
  RealizedSubgroup triv = realize(trivial_subgroup(s3));
  InductionResult ind = induce_classical(trivial_subgroup(s3), trivial_rep(triv.group, Q, 1));
  CHECK(ind.rep.mats == regular_rep(s3, Q).mats);

  // A3 <= S3, trivial module: dim 2, isomorphic to trivial + sign
  RealizedSubgroup a3r = realize(a3());
  InductionResult perm = induce_classical(a3(), trivial_rep(a3r.group, Q, 1));
  CHECK(perm.rep.dim == 2);
  std::vector<Matrix> ts;
  for (int g = 0; g < 6; ++g) {
    Matrix m = Matrix::identity(Q, 2);
    if (!a3().contains(g)) m.at(1, 1) = -FieldScalar::one(Q);
    ts.push_back(m);
  }
  Representation triv_plus_sign = make_representation(s3, Q, ts);
  auto iso = iso_certificate(perm.rep, triv_plus_sign, 0, 64);
  REQUIRE(iso.status == IsoStatus::certified);
  CHECK(verify_certificate(perm.rep, triv_plus_sign, *iso.certificate));
}

TEST_CASE("induce_along: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation reg = regular_rep(s3, Q);

  InductionResult id_ind = induce_along(identity_hom(s3), reg);
  CHECK(id_ind.rep.mats == reg.mats);

  // inclusion reduces to classical induction
  Representation reg_c2 = regular_rep(cat().group("C2"), Q);
  InductionResult incl = induce_along(cat().hom("incl_C2_C4"), reg_c2);
  CHECK(incl.rep.dim == 4);
  auto iso = iso_certificate(incl.rep, regular_rep(cat().group("C4"), Q), 0, 64);
  CHECK(iso.status == IsoStatus::certified);

  // surjection: Ind along sign of regular QS3 is regular QC2
  InductionResult s = induce_along(cat().hom("sign_S3_C2"), reg);
  CHECK(s.rep.dim == 2);
  auto iso2 = iso_certificate(s.rep, reg_c2, 0, 64);
  CHECK(iso2.status == IsoStatus::certified);

  // non-injective non-surjective S3 -> C4 on the trivial module
  InductionResult t = induce_along(cat().hom("sign_S3_C4"), trivial_rep(s3, Q, 1));
  CHECK(t.rep.dim == 2);

  // dimension formula across catalog homs (regular modules over Q)
  for (const auto& name : cat().hom_order) {
    const GroupHom& h = cat().hom(name);
    Representation v = regular_rep(h.domain, Q);
    InductionResult ind = induce_along(h, v);
    int index = h.codomain->n / h.image.order();
    int cofix = cofixed_quotient(v, h.kernel).rep.dim;
    CHECK(ind.rep.dim == index * cofix);
    // unit map intertwines through the homomorphism
    for (int g = 0; g < h.domain->n; ++g)
      CHECK(ind.rep.of(h(g)) * ind.unit_map == ind.unit_map * v.of(g));
  }
}

TEST_CASE("tensor: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation reg = regular_rep(s3, Q);
  Representation t1 = trivial_rep(s3, Q, 1);
  CHECK(tensor(reg, t1).mats == reg.mats);

  Representation p = permutation_rep(s3, Q, s3->perms);
  Representation r2 = random2_rep(s3, Q, 5);
  CHECK(tensor(p, r2).dim == 6);

  Representation sgn = sign_rep(s3);
  Representation ss = tensor(sgn, sgn);
  CHECK(ss.mats == trivial_rep(s3, Q, 1).mats);

  CHECK_THROWS(tensor(reg, regular_rep(cat().group("C2"), Q)));
}

TEST_CASE("dual: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation t = trivial_rep(s3, Q, 2);
  CHECK(dual(t).mats == t.mats);

  Representation r2 = random2_rep(s3, Q, 9);
  CHECK(dual(dual(r2)).mats == r2.mats);

  Representation reg_c2 = regular_rep(cat().group("C2"), Q);
  auto iso = iso_certificate(dual(reg_c2), reg_c2, 0, 64);
  CHECK(iso.status == IsoStatus::certified);
}

TEST_CASE("direct_sum: spec examples") {
  const GroupPtr& s3 = cat().group("S3");
  Representation t = trivial_rep(s3, Q, 1);
  DirectSumResult single = direct_sum(s3, Q, {t});
  CHECK(single.rep.mats == t.mats);

  DirectSumResult empty = direct_sum(s3, Q, {});
  CHECK(empty.rep.dim == 0);

  Representation sgn = sign_rep(s3);
  DirectSumResult both = direct_sum(s3, Q, {t, sgn});
  CHECK(both.rep.dim == 2);
  CHECK(both.offsets == std::vector<int>{0, 1});
  int transposition = element_by_perm(s3, parse_cycles("(0 1)", 3));
  CHECK(both.rep.of(transposition).at(0, 0).is_one());
  CHECK(both.rep.of(transposition).at(1, 1) == -FieldScalar::one(Q));
}

TEST_CASE("relative 1-projectivity: spec examples") {
  const GroupPtr& c2 = cat().group("C2");
  const GroupPtr& s3 = cat().group("S3");

  // averaging path: char 0 or char not dividing |K|
  Representation reg_s3 = regular_rep(s3, Q);
  auto w = relative_one_projectivity_witness(reg_s3, full_subgroup(s3));
  REQUIRE(w);
  CHECK(w->at(0, 0).str() == "1/6");

  Representation reg_f3s3 = regular_rep(s3, F3);
  Subgroup t2 = subgroup_generated(s3, {element_by_perm(s3, parse_cycles("(0 1)", 3))});
  auto w2 = relative_one_projectivity_witness(reg_f3s3, t2);  // char 3, |K| = 2
  CHECK(w2);

  // regular F2 C2 restricted to C2 is free: witness exists and re-verifies
  auto w3 = relative_one_projectivity_witness(regular_rep(c2, F2), full_subgroup(c2));
  REQUIRE(w3);
  CHECK(verify_projectivity_witness(regular_rep(c2, F2), full_subgroup(c2), *w3));

  // trivial F2-rep of C2: the Higman equation 2*theta = 1 has no solution
  CHECK_FALSE(relative_one_projectivity_witness(trivial_rep(c2, F2, 1), full_subgroup(c2)));

  // char-3 obstruction over A3 on the trivial module; regular is fine
  CHECK_FALSE(relative_one_projectivity_witness(trivial_rep(s3, F3, 1), a3()));
  CHECK(relative_one_projectivity_witness(reg_f3s3, a3()));
}

TEST_CASE("semisimplicity over Q: fixed dim equals cofixed dim for normal subgroups") {
  for (const auto& gname : {"C4", "S3", "D4", "Q8", "A4"}) {
    const GroupPtr& g = cat().group(gname);
    Representation reg = regular_rep(g, Q);
    Representation r2 = random2_rep(g, Q, fnv1a(gname));
    for (const Subgroup& k : all_subgroups(g)) {
      if (!k.is_normal()) continue;
      CHECK(fixed_points(reg, k).dim() == cofixed_quotient(reg, k).rep.dim);
      CHECK(fixed_points(r2, k).dim() == cofixed_quotient(r2, k).rep.dim);
    }
  }
}

TEST_CASE("fixed-cofixed lemma part 1: norm map is bijective under the witness") {
  // when a Higman witness exists for (v, G), the map "class of v |-> sum g v"
  // from cofixed points to V^G has full rank
  for (const auto& gname : {"C2", "S3", "C6"}) {
    const GroupPtr& g = cat().group(gname);
    for (const auto& f : {Q, F2, F3}) {
      Representation v = regular_rep(g, f);
      Subgroup full = full_subgroup(g);
      auto witness = relative_one_projectivity_witness(v, full);
      CofixedResult c = cofixed_quotient(v, full);
      SubspaceBasis fx = fixed_points(v, full);
      Matrix map = norm_map(v, full) * c.section;
      if (witness) {
        CHECK(c.rep.dim == fx.dim());
        CHECK(rank(map) == c.rep.dim);
      } else {
        CHECK(rank(map) <= std::min(c.rep.dim, fx.dim()));
      }
    }
  }
  // trivial F2C2: no witness, and the norm map collapses
  const GroupPtr& c2 = cat().group("C2");
  Representation t = trivial_rep(c2, F2, 1);
  CofixedResult c = cofixed_quotient(t, full_subgroup(c2));
  CHECK(rank(norm_map(t, full_subgroup(c2)) * c.section) == 0);
}

TEST_CASE("fixed-cofixed lemma part 3: fixed and cofixed are isomorphic under the witness") {
  for (const auto& [gname, f] : {std::pair<const char*, FieldDescriptor>{"S3", Q},
                                 {"C2", F2},
                                 {"C6", F3}}) {
    const GroupPtr& g = cat().group(gname);
    Representation v = regular_rep(g, f);
    for (const Subgroup& k : all_subgroups(g)) {
      if (!k.is_normal()) continue;
      if (!relative_one_projectivity_witness(v, k)) continue;
      FixedPointRep fr = fixed_points_rep(v, k);
      CofixedResult c = cofixed_quotient(v, k);
      auto iso = iso_certificate(fr.rep, c.rep, 0, 128);
      CHECK(iso.status == IsoStatus::certified);
    }
  }
}

TEST_CASE("rep_from_generator_matrices: extension and validation") {
  const GroupPtr& c4 = cat().group("C4");
  Matrix rot(2, 2, Q);
  rot.at(0, 1) = -FieldScalar::one(Q);
  rot.at(1, 0) = FieldScalar::one(Q);
  Representation r = rep_from_generator_matrices(c4, Q, {1}, {rot});
  CHECK(r.dim == 2);
  CHECK(r.of(2) == rot * rot);

  // a matrix whose order does not match the generator's order
  Matrix bad = Matrix::identity(Q, 2);
  bad.at(0, 1) = FieldScalar::one(Q);
  CHECK_THROWS(rep_from_generator_matrices(c4, Q, {1}, {bad}));
}

TEST_CASE("random2 is a valid 2-dimensional representation everywhere") {
  for (const auto& gname : cat().group_order)
    for (const auto& f : {Q, F2, F3}) {
      Representation r = random2_rep(cat().group(gname), f, fnv1a(gname, 42));
      CHECK(r.dim == 2);  // construction validates the axioms
    }
}
