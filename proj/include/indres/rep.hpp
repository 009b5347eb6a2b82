// Modules over group algebras and the functors on them: restriction and
// induction along arbitrary homomorphisms, fixed and cofixed points,
// tensor, dual, direct sum, and Higman's relative-projectivity test.
//
// A representation stores one invertible matrix per group element and is
// validated exhaustively at construction (every pair, not just generators).
//
// Basis conventions are fixed so induced matrices are reproducible:
//  - induction blocks are ordered by the left-coset transversal, identity
//    coset first;
//  - cofixed quotients use the non-pivot coordinates of the rref basis of
//    the augmentation subspace;
//  - tensor bases are lexicographic, e_i (x) f_j at i*dim_w + j.

#pragma once

#include <optional>
#include <vector>

#include "indres/group.hpp"
#include "indres/matrix.hpp"

namespace indres {

struct Representation {
  GroupPtr group;
  FieldDescriptor field;
  int dim = 0;
  std::vector<Matrix> mats;

  const Matrix& of(int g) const { return mats[std::size_t(g)]; }
};

inline Representation make_representation(GroupPtr group, const FieldDescriptor& field,
                                          std::vector<Matrix> mats) {
  const int n = group->n;
  if (int(mats.size()) != n) fail("rep: need one matrix per group element");
  const int d = mats.empty() ? 0 : mats[0].rows();
  for (const Matrix& m : mats)
    if (m.rows() != d || m.cols() != d || m.field() != field)
      fail("rep: matrices must be square, same size, same field");
  if (!mats[0].is_identity()) fail("rep: identity element must act as the identity matrix");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(mats[std::size_t(group->mul(a, b))] == mats[std::size_t(a)] * mats[std::size_t(b)]))
        fail("rep: rho(g h) != rho(g) rho(h) at (" + group->label(a) + ", " + group->label(b) + ")");
  return Representation{std::move(group), field, d, std::move(mats)};
}

inline Representation trivial_rep(GroupPtr g, const FieldDescriptor& f, int dim = 1) {
  std::vector<Matrix> mats(std::size_t(g->n), Matrix::identity(f, dim));
  return make_representation(std::move(g), f, std::move(mats));
}

// Left translation: rho(g) e_h = e_{gh}.
inline Representation regular_rep(GroupPtr g, const FieldDescriptor& f) {
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(g->n));
  for (int x = 0; x < g->n; ++x) {
    Matrix m(g->n, g->n, f);
    for (int h = 0; h < g->n; ++h) m.at(g->mul(x, h), h) = FieldScalar::one(f);
    mats.push_back(std::move(m));
  }
  return make_representation(std::move(g), f, std::move(mats));
}

// rho(g) e_j = e_{action[g][j]}.
inline Representation permutation_rep(GroupPtr g, const FieldDescriptor& f,
                                      const std::vector<std::vector<int>>& action) {
  if (int(action.size()) != g->n) fail("rep: need one permutation per element");
  const int d = action.empty() ? 0 : int(action[0].size());
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(g->n));
  for (int x = 0; x < g->n; ++x) {
    if (int(action[std::size_t(x)].size()) != d) fail("rep: permutation degree mismatch");
    Matrix m(d, d, f);
    for (int j = 0; j < d; ++j) m.at(action[std::size_t(x)][std::size_t(j)], j) = FieldScalar::one(f);
    mats.push_back(std::move(m));
  }
  return make_representation(std::move(g), f, std::move(mats));
}

// Extend generator matrices to the whole group by breadth-first words,
// then validate like any other representation.
inline Representation rep_from_generator_matrices(GroupPtr g, const FieldDescriptor& f,
                                                  const std::vector<int>& gens,
                                                  const std::vector<Matrix>& gen_mats) {
  if (gens.size() != gen_mats.size()) fail("rep: generator/matrix count mismatch");
  if (subgroup_generated(g, gens).order() != g->n)
    fail("rep: generators do not generate the group");
  const int d = gen_mats.empty() ? 1 : gen_mats[0].rows();
  std::vector<std::optional<Matrix>> mats(std::size_t(g->n));
  mats[0] = Matrix::identity(f, d);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = g->mul(x, gens[k]);
        Matrix m = *mats[std::size_t(x)] * gen_mats[k];
        if (!mats[std::size_t(y)]) {
          mats[std::size_t(y)] = std::move(m);
          next.push_back(y);
        } else if (!(*mats[std::size_t(y)] == m)) {
          fail("rep: generator matrices are inconsistent (relations violated)");
        }
      }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  out.reserve(std::size_t(g->n));
  for (auto& m : mats) {
    if (!m) fail("rep: generators do not generate the group");
    out.push_back(std::move(*m));
  }
  return make_representation(std::move(g), f, std::move(out));
}

// Res_f: g acts through f(g).
inline Representation restrict_along(const GroupHom& f, const Representation& v) {
  if (!same_group(v.group, f.codomain)) fail("restrict: representation is not over the codomain");
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(f.domain->n));
  for (int g = 0; g < f.domain->n; ++g) mats.push_back(v.of(f(g)));
  return make_representation(f.domain, v.field, std::move(mats));
}

// Basis of V^K = intersection of ker(rho(s) - id).
inline SubspaceBasis fixed_points(const Representation& v, const Subgroup& k) {
  if (!same_group(v.group, k.parent)) fail("fixed points: subgroup of a different group");
  Matrix stack(0, v.dim, v.field);
  for (int s : k.elements) {
    if (s == 0) continue;
    stack = Matrix::vstack(stack, v.of(s) - Matrix::identity(v.field, v.dim));
  }
  if (stack.rows() == 0) return row_space(Matrix::identity(v.field, v.dim));
  return nullspace_basis(stack);
}

// Sum of rho(s) over the subgroup (the norm/trace map of K on V).
inline Matrix norm_map(const Representation& v, const Subgroup& k) {
  Matrix n = Matrix::zero(v.field, v.dim, v.dim);
  for (int s : k.elements) n = n + v.of(s);
  return n;
}

// V / I(RK)V as a representation of G/K, with the projection that
// intertwines rho_V(g) with rho_out(gK).
struct CofixedResult {
  Representation rep;          // over the quotient group
  Matrix projection;           // v.dim -> rep.dim
  Matrix section;              // rep.dim -> v.dim
  QuotientGroup quotient;
  SubspaceBasis augmentation;  // I(RK)V as a subspace of V
};

inline CofixedResult cofixed_quotient(const Representation& v, const Subgroup& k) {
  if (!same_group(v.group, k.parent)) fail("cofixed: subgroup of a different group");
  if (!k.is_normal()) fail("cofixed: subgroup is not normal");
  // span of (rho(s) - id) e_i over every s in K, every basis vector
  Matrix stack(0, v.dim, v.field);
  for (int s : k.elements) {
    if (s == 0) continue;
    stack = Matrix::vstack(stack, (v.of(s) - Matrix::identity(v.field, v.dim)).transpose());
  }
  SubspaceBasis w = stack.rows() == 0 ? SubspaceBasis{v.dim, Matrix(0, v.dim, v.field)}
                                      : row_space(stack);
  QuotientMap qm = quotient_map(v.dim, w);
  QuotientGroup q = quotient_group(v.group, k);
  std::vector<Matrix> mats;
  mats.reserve(q.representatives.size());
  for (int r : q.representatives) mats.push_back(qm.projection * v.of(r) * qm.section);
  Representation rep = make_representation(q.group, v.field, std::move(mats));
  for (int g = 0; g < v.group->n; ++g)
    if (!(qm.projection * v.of(g) == rep.of(q.projection(g)) * qm.projection))
      fail("cofixed: projection fails to intertwine at " + v.group->label(g));
  return {std::move(rep), std::move(qm.projection), std::move(qm.section), std::move(q),
          std::move(w)};
}

// Result of inducing a module up to a bigger group. The unit map realizes
// v |-> class of 1 (x) v and intertwines through the homomorphism.
// For classical induction the cofixed projection/section are identities.
struct InductionResult {
  Representation rep;
  Matrix unit_map;               // v.dim -> rep.dim
  std::vector<int> transversal;  // left-coset representatives in rep.group
  Matrix cofixed_projection;     // v.dim -> block dim
  Matrix cofixed_section;        // block dim -> v.dim
};

// Block induction over a left transversal: x . (t_i (x) w) = t_j (x) rho(h') w
// where x t_i = t_j h'.
inline InductionResult induce_classical(const Subgroup& h, const Representation& v) {
  RealizedSubgroup hr = realize(h);
  if (!same_group(v.group, hr.group))
    fail("induce: representation is not over the realized subgroup");
  const GroupPtr& parent = h.parent;
  std::vector<int> t = left_coset_transversal(parent, h);
  const int m = int(t.size()), d = v.dim;
  std::vector<int> coset_of(std::size_t(parent->n), -1);
  for (int j = 0; j < m; ++j)
    for (int s : h.elements) coset_of[std::size_t(parent->mul(t[std::size_t(j)], s))] = j;
  std::vector<int> pos(std::size_t(parent->n), -1);
  for (int i = 0; i < hr.group->n; ++i) pos[std::size_t(hr.to_parent[std::size_t(i)])] = i;

  std::vector<Matrix> mats;
  mats.reserve(std::size_t(parent->n));
  for (int x = 0; x < parent->n; ++x) {
    Matrix big(m * d, m * d, v.field);
    for (int i = 0; i < m; ++i) {
      int y = parent->mul(x, t[std::size_t(i)]);
      int j = coset_of[std::size_t(y)];
      int hp = parent->mul(parent->inverse(t[std::size_t(j)]), y);
      const Matrix& blk = v.of(pos[std::size_t(hp)]);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) big.at(j * d + r, i * d + c) = blk.at(r, c);
    }
    mats.push_back(std::move(big));
  }
  Representation rep = make_representation(parent, v.field, std::move(mats));
  Matrix unit(m * d, d, v.field);
  for (int r = 0; r < d; ++r) unit.at(r, r) = FieldScalar::one(v.field);
  for (int s = 0; s < hr.group->n; ++s)
    if (!(rep.of(hr.inclusion(s)) * unit == unit * v.of(s)))
      fail("induce: unit map fails to intertwine");
  return {std::move(rep), std::move(unit), std::move(t), Matrix::identity(v.field, d),
          Matrix::identity(v.field, d)};
}

// Ind_f V for an arbitrary homomorphism f : G -> G1, computed as the
// cofixed quotient along Ker f followed by classical induction from the
// image subgroup: Ind_f V = Ind_{f(G)}^{G1} Ind_{f_0} V.
inline InductionResult induce_along(const GroupHom& f, const Representation& v) {
  if (!same_group(v.group, f.domain)) fail("induce: representation is not over the domain");
  CofixedResult cof = cofixed_quotient(v, f.kernel);
  Factorization fac = factorize(f);

  // identify G/Ker f with the image group: image element |-> its coset
  std::vector<int> first_preimage(std::size_t(f.codomain->n), -1);
  for (int g = 0; g < f.domain->n; ++g)
    if (first_preimage[std::size_t(f(g))] < 0) first_preimage[std::size_t(f(g))] = g;
  std::vector<int> lam(static_cast<std::size_t>(fac.image.group->n));
  for (int i = 0; i < fac.image.group->n; ++i)
    lam[std::size_t(i)] = cof.quotient.projection(first_preimage[std::size_t(fac.image.to_parent[std::size_t(i)])]);
  GroupHom lambda_inv = hom_from_map(fac.image.group, cof.quotient.group, std::move(lam));

  Representation image_rep = restrict_along(lambda_inv, cof.rep);
  InductionResult cls = induce_classical(f.image, image_rep);
  Matrix unit = cls.unit_map * cof.projection;
  for (int g = 0; g < f.domain->n; ++g)
    if (!(cls.rep.of(f(g)) * unit == unit * v.of(g)))
      fail("induce: unit map fails to intertwine along the homomorphism");
  return {std::move(cls.rep), std::move(unit), std::move(cls.transversal),
          std::move(cof.projection), std::move(cof.section)};
}

inline Representation tensor(const Representation& v, const Representation& w) {
  if (!same_group(v.group, w.group) || v.field != w.field)
    fail("tensor: representations over different groups or fields");
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(v.group->n));
  for (int g = 0; g < v.group->n; ++g) mats.push_back(Matrix::kronecker(v.of(g), w.of(g)));
  return make_representation(v.group, v.field, std::move(mats));
}

// rho*(g) = rho(g^-1)^T
inline Representation dual(const Representation& v) {
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(v.group->n));
  for (int g = 0; g < v.group->n; ++g) mats.push_back(v.of(v.group->inverse(g)).transpose());
  return make_representation(v.group, v.field, std::move(mats));
}

struct DirectSumResult {
  Representation rep;
  std::vector<int> offsets;  // starting coordinate of each summand
};

inline DirectSumResult direct_sum(const GroupPtr& g, const FieldDescriptor& f,
                                  const std::vector<Representation>& parts) {
  int total = 0;
  std::vector<int> offsets;
  for (const auto& p : parts) {
    if (!same_group(p.group, g) || p.field != f) fail("direct sum: group or field mismatch");
    offsets.push_back(total);
    total += p.dim;
  }
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(g->n));
  for (int x = 0; x < g->n; ++x) {
    Matrix m(total, total, f);
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
      const Matrix& blk = parts[pi].of(x);
      int off = offsets[pi];
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) m.at(off + r, off + c) = blk.at(r, c);
    }
    mats.push_back(std::move(m));
  }
  return {make_representation(g, f, std::move(mats)), std::move(offsets)};
}

// Higman's criterion: Res_K V is relatively 1-projective iff some theta
// satisfies sum_{s in K} rho(s) theta rho(s)^-1 = id. Averaging gives the
// witness whenever char does not divide |K|; otherwise one linear solve
// in dim^2 unknowns decides it.
inline bool verify_projectivity_witness(const Representation& v, const Subgroup& k,
                                        const Matrix& theta) {
  Matrix sum = Matrix::zero(v.field, v.dim, v.dim);
  for (int s : k.elements) sum = sum + v.of(s) * theta * v.of(k.parent->inverse(s));
  return sum.is_identity();
}

inline std::optional<Matrix> relative_one_projectivity_witness(const Representation& v,
                                                               const Subgroup& k) {
  if (!same_group(v.group, k.parent)) fail("projectivity: subgroup of a different group");
  const FieldDescriptor& f = v.field;
  const std::uint64_t order = std::uint64_t(k.order());
  if (f.is_rationals() || order % f.characteristic != 0) {
    Matrix theta = FieldScalar::from_int(f, long(order)).inv() * Matrix::identity(f, v.dim);
    if (!verify_projectivity_witness(v, k, theta)) fail("projectivity: averaging witness failed");
    return theta;
  }
  const int d = v.dim;
  Matrix a = Matrix::zero(f, d * d, d * d);
  for (int s : k.elements)
    a = a + Matrix::kronecker(v.of(s), v.of(k.parent->inverse(s)).transpose());
  auto x = solve_linear(a, Matrix::identity(f, d).vec());
  if (!x) return std::nullopt;
  Matrix theta = Matrix::unvec(*x, d, d);
  if (!verify_projectivity_witness(v, k, theta)) fail("projectivity: solved witness failed re-check");
  return theta;
}

// V^K as a representation of G/K (K normal), with the basis used.
struct FixedPointRep {
  Representation rep;
  Matrix basis;  // rows span V^K inside V
};

inline FixedPointRep fixed_points_rep(const Representation& v, const Subgroup& k) {
  if (!k.is_normal()) fail("fixed rep: subgroup is not normal");
  SubspaceBasis fp = fixed_points(v, k);
  QuotientGroup q = quotient_group(v.group, k);
  Matrix bt = fp.vectors.transpose();  // d x f
  std::vector<Matrix> mats;
  mats.reserve(q.representatives.size());
  for (int r : q.representatives) {
    auto sol = solve_linear(bt, v.of(r) * bt);
    if (!sol) fail("fixed rep: fixed space is not invariant");
    mats.push_back(std::move(*sol));
  }
  return {make_representation(q.group, v.field, std::move(mats)), fp.vectors};
}

}  // namespace indres
