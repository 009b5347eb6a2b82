// One executable check per theorem/lemma: each constructs both sides of
// the asserted isomorphism from its inputs and reports dimensions,
// hypothesis status, and a re-verifiable certificate.
//
// Hypothesis gates are computed, never assumed: gated checks run the
// Higman projectivity test themselves and record the obstruction when it
// fails, in which case the check asserts nothing (SkippedHypothesis) but
// still records both dimensions for diagnostics.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indres/homspace.hpp"
#include "indres/rep.hpp"

namespace indres {

enum class Hypothesis { satisfied, violated, not_applicable };
enum class Verdict { pass, dim_mismatch, no_certificate_found, skipped_hypothesis };

struct CheckReport {
  std::string name;
  std::string inputs;
  Hypothesis hypothesis = Hypothesis::satisfied;
  std::string hypothesis_reason;
  int lhs_dim = -1, rhs_dim = -1;
  Verdict verdict = Verdict::skipped_hypothesis;
  std::optional<IsoCertificate> certificate;
  std::uint64_t seed = 0;
  int trials = 0;
  double elapsed_ms = 0.0;  // informational; excluded from determinism contract
};

struct CheckOptions {
  std::uint64_t seed = 0;
  int max_trials = 256;
};

namespace detail {

inline CheckReport certified_report(std::string name, std::string inputs,
                                    const Representation& lhs, const Representation& rhs,
                                    const CheckOptions& opt) {
  CheckReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.seed = opt.seed;
  r.lhs_dim = lhs.dim;
  r.rhs_dim = rhs.dim;
  IsoResult iso = iso_certificate(lhs, rhs, opt.seed, opt.max_trials);
  r.trials = iso.trials;
  switch (iso.status) {
    case IsoStatus::certified:
      r.verdict = Verdict::pass;
      r.certificate = std::move(iso.certificate);
      break;
    case IsoStatus::dimension_mismatch:
      r.verdict = Verdict::dim_mismatch;
      break;
    case IsoStatus::no_certificate_found:
      r.verdict = Verdict::no_certificate_found;
      break;
  }
  return r;
}

// For sides that must be literally equal matrix families.
inline CheckReport equality_report(std::string name, std::string inputs,
                                   const Representation& lhs, const Representation& rhs,
                                   const CheckOptions& opt) {
  if (lhs.dim == rhs.dim && lhs.mats == rhs.mats) {
    CheckReport r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.seed = opt.seed;
    r.lhs_dim = lhs.dim;
    r.rhs_dim = rhs.dim;
    r.verdict = Verdict::pass;
    Matrix id = Matrix::identity(lhs.field, lhs.dim);
    r.certificate = IsoCertificate{id, id};
    return r;
  }
  return certified_report(std::move(name), std::move(inputs), lhs, rhs, opt);
}

inline CheckReport skipped(std::string name, std::string inputs, Hypothesis h,
                           std::string reason, const CheckOptions& opt) {
  CheckReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.hypothesis = h;
  r.hypothesis_reason = std::move(reason);
  r.verdict = Verdict::skipped_hypothesis;
  r.seed = opt.seed;
  return r;
}

}  // namespace detail

// Transitivity: Res_phi Res_psi W = Res_{psi phi} W (literal equality) and
// Ind_psi Ind_phi U ~= Ind_{psi phi} U.
inline std::pair<CheckReport, CheckReport> check_transitivity(const GroupHom& phi,
                                                              const GroupHom& psi,
                                                              const Representation& u,
                                                              const Representation& w,
                                                              std::string inputs,
                                                              const CheckOptions& opt) {
  if (!same_group(phi.codomain, psi.domain)) fail("transitivity: homomorphisms do not compose");
  if (!same_group(u.group, phi.domain)) fail("transitivity: u is not over the first domain");
  if (!same_group(w.group, psi.codomain)) fail("transitivity: w is not over the last codomain");
  GroupHom comp = compose(psi, phi);
  CheckReport res = detail::equality_report(
      "transitivity.res", inputs, restrict_along(phi, restrict_along(psi, w)),
      restrict_along(comp, w), opt);
  CheckReport ind = detail::certified_report(
      "transitivity.ind", inputs, induce_along(psi, induce_along(phi, u).rep).rep,
      induce_along(comp, u).rep, opt);
  return {std::move(res), std::move(ind)};
}

// Ind_phi V (x) V1 ~= Ind_phi (V (x) Res_phi V1), certified by building
// the two explicit maps
//   (g1 (x) v) (x) v1 |-> g1 (x) (v (x) g1^-1 v1)
//   g1 (x) (v (x) v1) |-> (g1 (x) v) (x) g1 v1
// in coordinates and checking intertwining and mutual inversion exactly.
inline CheckReport check_ind_tensor(const GroupHom& phi, const Representation& v,
                                    const Representation& v1, std::string inputs,
                                    const CheckOptions& opt) {
  if (!same_group(v.group, phi.domain)) fail("ind_tensor: v is not over the domain");
  if (!same_group(v1.group, phi.codomain)) fail("ind_tensor: v1 is not over the codomain");
  if (v.field != v1.field) fail("ind_tensor: field mismatch");
  const FieldDescriptor& f = v.field;
  const GroupPtr& g1 = phi.codomain;

  InductionResult ind_v = induce_along(phi, v);
  Representation lhs = tensor(ind_v.rep, v1);
  Representation inner = tensor(v, restrict_along(phi, v1));
  InductionResult ind_t = induce_along(phi, inner);
  const Representation& rhs = ind_t.rep;

  CheckReport r;
  r.name = "ind_tensor";
  r.inputs = std::move(inputs);
  r.seed = opt.seed;
  r.lhs_dim = lhs.dim;
  r.rhs_dim = rhs.dim;

  if (ind_v.transversal != ind_t.transversal) fail("ind_tensor: transversal mismatch");
  const int m = int(ind_v.transversal.size());
  const int c = ind_v.cofixed_projection.rows();   // block dim of Ind_phi V
  const int c2 = ind_t.cofixed_projection.rows();  // block dim of Ind_phi (V (x) Res V1)
  const int d1 = v1.dim;
  if (c * d1 != c2 || lhs.dim != rhs.dim) {
    r.verdict = Verdict::dim_mismatch;
    return r;
  }

  Matrix fwd(rhs.dim, lhs.dim, f), bwd(lhs.dim, rhs.dim, f);
  for (int i = 0; i < m; ++i) {
    int t = ind_v.transversal[std::size_t(i)];
    Matrix fblock = ind_t.cofixed_projection *
                    Matrix::kronecker(ind_v.cofixed_section, v1.of(g1->inverse(t)));
    Matrix bblock = Matrix::kronecker(ind_v.cofixed_projection, v1.of(t)) *
                    ind_t.cofixed_section;
    for (int a = 0; a < c2; ++a)
      for (int b = 0; b < c * d1; ++b) {
        fwd.at(i * c2 + a, i * c * d1 + b) = fblock.at(a, b);
        bwd.at(i * c * d1 + b, i * c2 + a) = bblock.at(b, a);
      }
  }

  bool ok = fwd * bwd == Matrix::identity(f, rhs.dim) &&
            bwd * fwd == Matrix::identity(f, lhs.dim) && is_intertwiner(lhs, rhs, fwd) &&
            is_intertwiner(rhs, lhs, bwd);
  if (ok) {
    r.verdict = Verdict::pass;
    r.certificate = IsoCertificate{std::move(fwd), std::move(bwd)};
  } else {
    r.verdict = Verdict::no_certificate_found;
  }
  return r;
}

// (Res_phi V1)* = Res_phi (V1*): the two matrix families coincide.
inline CheckReport check_dual_res(const GroupHom& phi, const Representation& v1,
                                  std::string inputs, const CheckOptions& opt) {
  if (!same_group(v1.group, phi.codomain)) fail("dual_res: v1 is not over the codomain");
  return detail::equality_report("dual_res", std::move(inputs),
                                 dual(restrict_along(phi, v1)),
                                 restrict_along(phi, dual(v1)), opt);
}

// (Ind_phi V)* ~= Ind_phi (V*), gated on Res_K V relatively 1-projective.
inline CheckReport check_dual_ind(const GroupHom& phi, const Representation& v,
                                  std::string inputs, const CheckOptions& opt) {
  if (!same_group(v.group, phi.domain)) fail("dual_ind: v is not over the domain");
  Representation lhs = dual(induce_along(phi, v).rep);
  Representation rhs = induce_along(phi, dual(v)).rep;
  auto witness = relative_one_projectivity_witness(v, phi.kernel);
  if (!witness) {
    CheckReport r = detail::skipped("dual_ind", std::move(inputs), Hypothesis::violated,
                                    "Res_K v is not relatively 1-projective (no Higman witness)",
                                    opt);
    r.lhs_dim = lhs.dim;
    r.rhs_dim = rhs.dim;
    return r;
  }
  return detail::certified_report("dual_ind", std::move(inputs), lhs, rhs, opt);
}

// Hom_RG(RG1, V) as an RG1-module (g1 acting by right-translation
// precomposition), certified against Ind_phi V. Gated like dual_ind.
inline CheckReport check_hom_equals_ind(const GroupHom& phi, const Representation& v,
                                        std::string inputs, const CheckOptions& opt) {
  if (!same_group(v.group, phi.domain)) fail("hom_equals_ind: v is not over the domain");
  const GroupPtr& g1 = phi.codomain;
  const FieldDescriptor& f = v.field;
  Representation rg1_as_g = restrict_along(phi, regular_rep(g1, f));
  HomBasis hb = hom_basis(rg1_as_g, v);
  const int r = hb.dim();

  // coordinates of X_i . R(g1) in the basis {X_j}
  Matrix basis_cols(v.dim * g1->n, r, f);
  for (int i = 0; i < r; ++i) {
    Matrix vi = hb.basis[std::size_t(i)].vec();
    for (int a = 0; a < vi.rows(); ++a) basis_cols.at(a, i) = vi.at(a, 0);
  }
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(g1->n));
  for (int x = 0; x < g1->n; ++x) {
    Matrix rt(g1->n, g1->n, f);  // right translation e_h |-> e_{h x}
    for (int h = 0; h < g1->n; ++h) rt.at(g1->mul(h, x), h) = FieldScalar::one(f);
    Matrix images(v.dim * g1->n, r, f);
    for (int i = 0; i < r; ++i) {
      Matrix yi = (hb.basis[std::size_t(i)] * rt).vec();
      for (int a = 0; a < yi.rows(); ++a) images.at(a, i) = yi.at(a, 0);
    }
    auto sol = solve_linear(basis_cols, images);
    if (!sol) fail("hom_equals_ind: hom space is not closed under the right action");
    mats.push_back(std::move(*sol));
  }
  Representation lhs = make_representation(g1, f, std::move(mats));
  Representation rhs = induce_along(phi, v).rep;

  auto witness = relative_one_projectivity_witness(v, phi.kernel);
  if (!witness) {
    CheckReport rep = detail::skipped("hom_equals_ind", std::move(inputs), Hypothesis::violated,
                                      "Res_K v is not relatively 1-projective (no Higman witness)",
                                      opt);
    rep.lhs_dim = lhs.dim;
    rep.rhs_dim = rhs.dim;
    return rep;
  }
  return detail::certified_report("hom_equals_ind", std::move(inputs), lhs, rhs, opt);
}

// Frobenius reciprocity. Part 1 is unconditional and certified by the
// explicit adjunction alpha |-> alpha . unit expressed in the canonical
// hom bases; part 2 is the gated dimension equality.
inline std::pair<CheckReport, CheckReport> check_frobenius(const GroupHom& phi,
                                                           const Representation& v,
                                                           const Representation& v1,
                                                           std::string inputs,
                                                           const CheckOptions& opt) {
  if (!same_group(v.group, phi.domain)) fail("frobenius: v is not over the domain");
  if (!same_group(v1.group, phi.codomain)) fail("frobenius: v1 is not over the codomain");
  if (v.field != v1.field) fail("frobenius: field mismatch");
  const FieldDescriptor& f = v.field;
  InductionResult ind = induce_along(phi, v);
  Representation res1 = restrict_along(phi, v1);

  CheckReport r1;
  r1.name = "frobenius.1";
  r1.inputs = inputs;
  r1.seed = opt.seed;
  {
    HomBasis a = hom_basis(ind.rep, v1);
    HomBasis b = hom_basis(v, res1);
    r1.lhs_dim = a.dim();
    r1.rhs_dim = b.dim();
    if (a.dim() != b.dim()) {
      r1.verdict = Verdict::dim_mismatch;
    } else if (a.dim() == 0) {
      r1.verdict = Verdict::pass;
      r1.certificate = IsoCertificate{Matrix(0, 0, f), Matrix(0, 0, f)};
    } else {
      const int n = a.dim();
      Matrix bcols(v1.dim * v.dim, n, f), acols(v1.dim * v.dim, n, f);
      for (int i = 0; i < n; ++i) {
        Matrix bv = b.basis[std::size_t(i)].vec();
        Matrix av = (a.basis[std::size_t(i)] * ind.unit_map).vec();
        for (int k = 0; k < bv.rows(); ++k) {
          bcols.at(k, i) = bv.at(k, 0);
          acols.at(k, i) = av.at(k, 0);
        }
      }
      auto m = solve_linear(bcols, acols);
      auto minv = m ? inverse(*m) : std::nullopt;
      if (m && minv) {
        r1.verdict = Verdict::pass;
        r1.certificate = IsoCertificate{std::move(*m), std::move(*minv)};
      } else {
        r1.verdict = Verdict::no_certificate_found;
      }
    }
  }

  CheckReport r2;
  r2.name = "frobenius.2";
  r2.inputs = inputs;
  r2.seed = opt.seed;
  r2.lhs_dim = dim_hom(v1, ind.rep);
  r2.rhs_dim = dim_hom(res1, v);
  auto witness = relative_one_projectivity_witness(v, phi.kernel);
  if (!witness) {
    r2.hypothesis = Hypothesis::violated;
    r2.hypothesis_reason = "Res_K v is not relatively 1-projective (no Higman witness)";
    r2.verdict = Verdict::skipped_hypothesis;
  } else if (r2.lhs_dim == r2.rhs_dim) {
    r2.verdict = Verdict::pass;
    Matrix id = Matrix::identity(f, r2.lhs_dim);
    r2.certificate = IsoCertificate{id, id};
  } else {
    r2.verdict = Verdict::dim_mismatch;
  }
  return {std::move(r1), std::move(r2)};
}

// Shared scaffolding for the Mackey lemmas.
struct Mackey1Setup {
  Subgroup g0, h0;
  RealizedSubgroup g0r, h0r;
  GroupHom alpha0;  // g0 group ->> h0 group
};

inline Mackey1Setup mackey1_setup(const GroupHom& alpha, const Subgroup& g0) {
  if (!same_group(g0.parent, alpha.domain)) fail("mackey_1: g0 is not a subgroup of the domain");
  std::vector<int> h0_elems;
  for (int g : g0.elements) h0_elems.push_back(alpha(g));
  Subgroup h0 = subgroup_from_elements(alpha.codomain, std::move(h0_elems));
  RealizedSubgroup g0r = realize(g0), h0r = realize(h0);
  GroupHom alpha0 = restrict_hom_to(alpha, g0, h0, g0r, h0r);
  return {g0, std::move(h0), std::move(g0r), std::move(h0r), std::move(alpha0)};
}

// Lemma: for surjective alpha and Ker alpha <= G0, with H0 = alpha(G0),
//   (1) Res^H_H0 Ind_alpha V ~= Ind_alpha0 Res^G_G0 V
//   (2) Res_alpha Ind_H0^H U ~= Ind_G0^G Res_alpha0 U
// u must be a module over the realized H0 (see mackey1_setup).
inline std::pair<CheckReport, CheckReport> check_lemma_mackey_1(
    const GroupHom& alpha, const Subgroup& g0, const Representation& v,
    const Representation& u, std::string inputs, const CheckOptions& opt) {
  std::string why;
  if (!alpha.is_surjective())
    why = "alpha is not surjective";
  else if (!subgroup_contains(g0, alpha.kernel))
    why = "Ker alpha is not contained in G0";
  if (!why.empty()) {
    return {detail::skipped("mackey_1.1", inputs, Hypothesis::not_applicable, why, opt),
            detail::skipped("mackey_1.2", inputs, Hypothesis::not_applicable, why, opt)};
  }
  Mackey1Setup s = mackey1_setup(alpha, g0);
  if (!same_group(v.group, alpha.domain)) fail("mackey_1: v is not over the domain");
  if (!same_group(u.group, s.h0r.group)) fail("mackey_1: u is not over the realized H0");

  CheckReport p1 = detail::certified_report(
      "mackey_1.1", inputs,
      restrict_along(s.h0r.inclusion, induce_along(alpha, v).rep),
      induce_along(s.alpha0, restrict_along(s.g0r.inclusion, v)).rep, opt);
  CheckReport p2 = detail::certified_report(
      "mackey_1.2", inputs, restrict_along(alpha, induce_classical(s.h0, u).rep),
      induce_classical(s.g0, restrict_along(s.alpha0, u)).rep, opt);
  return {std::move(p1), std::move(p2)};
}

namespace detail {

// Ker big = Ker small x K0 as an internal direct product, K0 acting
// trivially on u. Returns a reason string when invalid, empty when valid.
inline std::string validate_k0(const Subgroup& ker_big, const Subgroup& ker_small,
                               const Subgroup& k0, const Representation& u) {
  if (!subgroup_contains(ker_big, k0)) return "K0 is not contained in the kernel";
  for (int a : k0.elements)
    if (a != 0 && ker_small.contains(a)) return "K0 meets Ker gamma nontrivially";
  if (k0.order() * ker_small.order() != ker_big.order())
    return "|Ker gamma| * |K0| != |Ker alpha|";
  // normality of both factors inside the big kernel
  for (int x : ker_big.elements)
    for (int a : k0.elements)
      if (!k0.contains(ker_big.parent->conjugate(x, a))) return "K0 is not normal in the kernel";
  for (int x : ker_big.elements)
    for (int a : ker_small.elements)
      if (!ker_small.contains(ker_big.parent->conjugate(x, a)))
        return "Ker gamma is not normal in the kernel";
  for (int a : k0.elements)
    if (!u.of(a).is_identity()) return "K0 does not act trivially on u";
  return "";
}

inline std::optional<Subgroup> find_k0(const Subgroup& ker_big, const Subgroup& ker_small,
                                       const Representation& u) {
  RealizedSubgroup kr = realize(ker_big);
  for (const Subgroup& cand : all_subgroups(kr.group)) {
    std::vector<int> parent_elems;
    for (int e : cand.elements) parent_elems.push_back(kr.to_parent[std::size_t(e)]);
    Subgroup k0 = subgroup_from_elements(ker_big.parent, std::move(parent_elems));
    if (validate_k0(ker_big, ker_small, k0, u).empty()) return k0;
  }
  return std::nullopt;
}

}  // namespace detail

// Lemma: for surjections gamma: B ->> A, beta: A ->> C with alpha = beta gamma,
//   (1) Ind_beta V ~= Ind_alpha Res_gamma V
//   (2) Ind_gamma U ~= Res_beta Ind_alpha U  when Ker alpha = Ker gamma x K0
//       with K0 acting trivially on U.
// Pass k0 explicitly or leave empty to search for a valid decomposition.
inline std::pair<CheckReport, CheckReport> check_lemma_mackey_2(
    const GroupHom& beta, const GroupHom& gamma, const Representation& v,
    const Representation& u, std::optional<Subgroup> k0, std::string inputs,
    const CheckOptions& opt) {
  std::string why;
  if (!same_group(gamma.codomain, beta.domain))
    why = "gamma and beta do not compose";
  else if (!gamma.is_surjective())
    why = "gamma is not surjective";
  else if (!beta.is_surjective())
    why = "beta is not surjective";
  if (!why.empty())
    return {detail::skipped("mackey_2.1", inputs, Hypothesis::not_applicable, why, opt),
            detail::skipped("mackey_2.2", inputs, Hypothesis::not_applicable, why, opt)};
  if (!same_group(v.group, beta.domain)) fail("mackey_2: v is not over the middle group");
  if (!same_group(u.group, gamma.domain)) fail("mackey_2: u is not over the bottom group");
  GroupHom alpha = compose(beta, gamma);

  CheckReport p1 = detail::certified_report(
      "mackey_2.1", inputs, induce_along(beta, v).rep,
      induce_along(alpha, restrict_along(gamma, v)).rep, opt);

  CheckReport p2;
  if (k0) {
    std::string bad = detail::validate_k0(alpha.kernel, gamma.kernel, *k0, u);
    if (!bad.empty()) {
      p2 = detail::skipped("mackey_2.2", inputs, Hypothesis::not_applicable, bad, opt);
      return {std::move(p1), std::move(p2)};
    }
  } else {
    k0 = detail::find_k0(alpha.kernel, gamma.kernel, u);
    if (!k0) {
      p2 = detail::skipped("mackey_2.2", inputs, Hypothesis::not_applicable,
                           "no K0 with Ker alpha = Ker gamma x K0 acting trivially on u", opt);
      return {std::move(p1), std::move(p2)};
    }
  }
  p2 = detail::certified_report("mackey_2.2", inputs, induce_along(gamma, u).rep,
                                restrict_along(beta, induce_along(alpha, u).rep), opt);
  return {std::move(p1), std::move(p2)};
}

// Lemma: commuting square  gamma: B -> H, alpha: H ->> L (surjective),
// epsilon: B ->> C (surjective), i: C -> L (injective), Ker alpha <= Im gamma:
//   (1) Res_i Ind_alpha V ~= Ind_epsilon Res_gamma V
//   (2) Ind_gamma U ~= Res_alpha Ind_i Ind_epsilon U  when
//       Ker epsilon = Ker gamma x K0 with K0 acting trivially on U.
inline std::pair<CheckReport, CheckReport> check_lemma_mackey_3(
    const GroupHom& alpha, const GroupHom& i, const GroupHom& gamma, const GroupHom& epsilon,
    const Representation& v, const Representation& u, std::optional<Subgroup> k0,
    std::string inputs, const CheckOptions& opt) {
  std::string why;
  if (!same_group(gamma.codomain, alpha.domain) || !same_group(epsilon.domain, gamma.domain) ||
      !same_group(i.domain, epsilon.codomain) || !same_group(i.codomain, alpha.codomain))
    why = "square does not type-check";
  else if (!alpha.is_surjective())
    why = "alpha is not surjective";
  else if (!epsilon.is_surjective())
    why = "epsilon is not surjective";
  else if (!i.is_injective())
    why = "i is not injective";
  if (why.empty())
    for (int b = 0; b < gamma.domain->n && why.empty(); ++b)
      if (alpha(gamma(b)) != i(epsilon(b))) why = "square does not commute";
  if (why.empty() && !subgroup_contains(gamma.image, alpha.kernel))
    why = "Ker alpha is not contained in Im gamma";
  if (!why.empty())
    return {detail::skipped("mackey_3.1", inputs, Hypothesis::not_applicable, why, opt),
            detail::skipped("mackey_3.2", inputs, Hypothesis::not_applicable, why, opt)};
  if (!same_group(v.group, alpha.domain)) fail("mackey_3: v is not over the top-left group");
  if (!same_group(u.group, gamma.domain)) fail("mackey_3: u is not over the bottom-left group");

  // the proof's factorization gamma = iota gamma_0 with epsilon-bar:
  // Im gamma ->> C; exercising it validates the square's inner diagram
  Factorization fac = factorize(gamma);
  {
    std::vector<int> ebar(std::size_t(fac.image.group->n), -1);
    for (int b = 0; b < gamma.domain->n; ++b) {
      int y = fac.onto(b);
      if (ebar[std::size_t(y)] < 0)
        ebar[std::size_t(y)] = epsilon(b);
      else if (ebar[std::size_t(y)] != epsilon(b))
        fail("mackey_3: epsilon does not factor through Im gamma");
    }
    GroupHom ebar_hom = hom_from_map(fac.image.group, epsilon.codomain, ebar);
    if (!ebar_hom.is_surjective()) fail("mackey_3: epsilon-bar is not surjective");
    for (int y = 0; y < fac.image.group->n; ++y)
      if (alpha(fac.inclusion(y)) != i(ebar_hom(y)))
        fail("mackey_3: alpha iota != i epsilon-bar");
  }

  CheckReport p1 = detail::certified_report(
      "mackey_3.1", inputs, restrict_along(i, induce_along(alpha, v).rep),
      induce_along(epsilon, restrict_along(gamma, v)).rep, opt);

  CheckReport p2;
  if (k0) {
    std::string bad = detail::validate_k0(epsilon.kernel, gamma.kernel, *k0, u);
    if (!bad.empty()) {
      p2 = detail::skipped("mackey_3.2", inputs, Hypothesis::not_applicable, bad, opt);
      return {std::move(p1), std::move(p2)};
    }
  } else {
    k0 = detail::find_k0(epsilon.kernel, gamma.kernel, u);
    if (!k0) {
      p2 = detail::skipped("mackey_3.2", inputs, Hypothesis::not_applicable,
                           "no K0 with Ker epsilon = Ker gamma x K0 acting trivially on u", opt);
      return {std::move(p1), std::move(p2)};
    }
  }
  p2 = detail::certified_report(
      "mackey_3.2", inputs, induce_along(gamma, u).rep,
      restrict_along(alpha, induce_along(i, induce_along(epsilon, u).rep).rep), opt);
  return {std::move(p1), std::move(p2)};
}

// The right-hand side of Mackey's formula: for each double coset
// representative x of beta(H)\G/alpha(K), the summand
// Ind_{delta_x} Res_{gamma_x} V over the pullback B_x of (x-conjugated
// alpha, beta). The proof-internal kernel conditions are validated.
struct MackeySummand {
  int x = 0;
  GroupPtr pullback_group;
  Representation summand;  // over H
};

struct MackeyRhs {
  DoubleCosetDecomposition cosets;
  std::vector<MackeySummand> summands;
  DirectSumResult sum;  // over H
};

inline MackeyRhs build_mackey_rhs(const GroupHom& alpha, const GroupHom& beta,
                                  const Representation& v) {
  if (!same_group(alpha.codomain, beta.codomain)) fail("mackey: codomain mismatch");
  if (!same_group(v.group, alpha.domain)) fail("mackey: v is not over the domain of alpha");
  DoubleCosetDecomposition dc = double_cosets(alpha.codomain, beta.image, alpha.image);
  std::vector<MackeySummand> summands;
  std::vector<Representation> parts;
  for (int x : dc.representatives) {
    GroupHom xalpha = conjugate_hom(alpha, x);
    Pullback pb = pullback(xalpha, beta);
    // proof-internal conditions: Ker xalpha <= Im gamma_x, Ker beta <= Im delta_x,
    // and Ker epsilon_x = Ker delta_x x Ker gamma_x
    if (!subgroup_contains(pb.p_f.image, xalpha.kernel))
      fail("mackey: Ker x-alpha not contained in Im gamma_x");
    if (!subgroup_contains(pb.p_g.image, beta.kernel))
      fail("mackey: Ker beta not contained in Im delta_x");
    {
      std::vector<int> eps_kernel;
      for (int b = 0; b < pb.group->n; ++b)
        if (xalpha(pb.p_f(b)) == 0) eps_kernel.push_back(b);
      Subgroup ker_eps = subgroup_from_elements(pb.group, std::move(eps_kernel));
      int prod = pb.p_f.kernel.order() * pb.p_g.kernel.order();
      bool direct = prod == ker_eps.order();
      for (int a : pb.p_f.kernel.elements)
        if (a != 0 && pb.p_g.kernel.contains(a)) direct = false;
      if (!direct) fail("mackey: Ker epsilon_x is not Ker delta_x x Ker gamma_x");
    }
    Representation summand = induce_along(pb.p_g, restrict_along(pb.p_f, v)).rep;
    summands.push_back({x, pb.group, summand});
    parts.push_back(std::move(summand));
  }
  DirectSumResult sum = direct_sum(beta.domain, v.field, parts);
  return {std::move(dc), std::move(summands), std::move(sum)};
}

// Mackey's formula: Res_beta Ind_alpha V ~= direct sum over double cosets.
inline CheckReport check_mackey(const GroupHom& alpha, const GroupHom& beta,
                                const Representation& v, std::string inputs,
                                const CheckOptions& opt) {
  Representation lhs = restrict_along(beta, induce_along(alpha, v).rep);
  MackeyRhs rhs = build_mackey_rhs(alpha, beta, v);
  CheckReport r = detail::certified_report("mackey", std::move(inputs), lhs, rhs.sum.rep, opt);
  return r;
}

}  // namespace indres
