// Intertwiner spaces Hom_RG(U, V) and isomorphism certificates.
//
// A certificate is an explicit invertible intertwiner plus its inverse,
// re-checkable independently of how it was found. A failed search is
// never reported as "not isomorphic" -- the result carries the trial
// count and the caller decides what it means.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "indres/rep.hpp"

namespace indres {

struct HomBasis {
  int source_dim = 0, target_dim = 0;
  std::vector<Matrix> basis;  // target_dim x source_dim intertwiners

  int dim() const { return int(basis.size()); }
};

inline bool is_intertwiner(const Representation& u, const Representation& v, const Matrix& x) {
  if (x.rows() != v.dim || x.cols() != u.dim) return false;
  for (int g = 0; g < u.group->n; ++g)
    if (!(v.of(g) * x == x * u.of(g))) return false;
  return true;
}

// Nullspace of the stacked generator constraints rho_V(g) X = X rho_U(g)
// on vec(X), re-verified against every group element afterwards.
inline HomBasis hom_basis(const Representation& u, const Representation& v) {
  if (!same_group(u.group, v.group)) fail("hom basis: different groups");
  if (u.field != v.field) fail("hom basis: different fields");
  const int du = u.dim, dv = v.dim;
  const int nvars = du * dv;
  const FieldDescriptor& f = u.field;
  Matrix stack(0, nvars, f);
  for (int g : u.group->gens) {
    Matrix c = Matrix::kronecker(v.of(g), Matrix::identity(f, du)) -
               Matrix::kronecker(Matrix::identity(f, dv), u.of(g).transpose());
    stack = Matrix::vstack(stack, c);
  }
  SubspaceBasis null = stack.rows() == 0 ? row_space(Matrix::identity(f, nvars))
                                         : nullspace_basis(stack);
  HomBasis hb{du, dv, {}};
  hb.basis.reserve(std::size_t(null.dim()));
  for (int i = 0; i < null.dim(); ++i) {
    Matrix x = Matrix::unvec(null.vectors.row(i).transpose(), dv, du);
    if (!is_intertwiner(u, v, x))
      fail("hom basis: generator solution fails on a non-generator element");
    hb.basis.push_back(std::move(x));
  }
  return hb;
}

inline int dim_hom(const Representation& u, const Representation& v) {
  return hom_basis(u, v).dim();
}

struct IsoCertificate {
  Matrix intertwiner;  // u.dim -> v.dim
  Matrix inverse;
};

// Independent re-check: shape, invertibility, intertwining over all
// elements. Never looks at how the certificate was produced.
inline bool verify_certificate(const Representation& u, const Representation& v,
                               const IsoCertificate& c) {
  if (c.intertwiner.rows() != v.dim || c.intertwiner.cols() != u.dim) return false;
  if (c.inverse.rows() != u.dim || c.inverse.cols() != v.dim) return false;
  if (!(c.intertwiner * c.inverse == Matrix::identity(v.field, v.dim))) return false;
  if (!(c.inverse * c.intertwiner == Matrix::identity(u.field, u.dim))) return false;
  return is_intertwiner(u, v, c.intertwiner) && is_intertwiner(v, u, c.inverse);
}

enum class IsoStatus { certified, dimension_mismatch, no_certificate_found };

struct IsoResult {
  IsoStatus status = IsoStatus::no_certificate_found;
  std::optional<IsoCertificate> certificate;
  int trials = 0;
};

namespace detail {

inline std::optional<IsoCertificate> try_candidate(const Representation& u,
                                                   const Representation& v, const Matrix& x) {
  auto inv = inverse(x);
  if (!inv) return std::nullopt;
  IsoCertificate c{x, std::move(*inv)};
  if (!verify_certificate(u, v, c)) fail("iso: invertible candidate failed verification");
  return c;
}

inline Matrix combine(const HomBasis& hb, const std::vector<FieldScalar>& coeffs,
                      const FieldDescriptor& f) {
  Matrix x = Matrix::zero(f, hb.target_dim, hb.source_dim);
  for (std::size_t i = 0; i < hb.basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    x = x + coeffs[i] * hb.basis[i];
  }
  return x;
}

}  // namespace detail

// Search the span of hom_basis(u, v) for an invertible element:
// deterministic passes (identity when the reps are equal, single basis
// elements, the all-ones sum, pairwise sums and differences, exhaustive
// enumeration over small prime fields), then seeded random combinations.
inline IsoResult iso_certificate(const Representation& u, const Representation& v,
                                 std::uint64_t seed, int max_trials) {
  if (!same_group(u.group, v.group) || u.field != v.field)
    fail("iso: representations over different groups or fields");
  if (u.dim != v.dim) return {IsoStatus::dimension_mismatch, std::nullopt, 0};
  const FieldDescriptor& f = u.field;
  if (u.dim == 0)
    return {IsoStatus::certified, IsoCertificate{Matrix(0, 0, f), Matrix(0, 0, f)}, 0};
  if (u.mats == v.mats) {
    Matrix id = Matrix::identity(f, u.dim);
    return {IsoStatus::certified, IsoCertificate{id, id}, 0};
  }
  HomBasis hb = hom_basis(u, v);
  const int r = hb.dim();
  if (r == 0) return {IsoStatus::no_certificate_found, std::nullopt, 0};

  for (const Matrix& x : hb.basis)
    if (auto c = detail::try_candidate(u, v, x)) return {IsoStatus::certified, c, 0};

  {
    Matrix sum = Matrix::zero(f, hb.target_dim, hb.source_dim);
    for (const Matrix& x : hb.basis) sum = sum + x;
    if (auto c = detail::try_candidate(u, v, sum)) return {IsoStatus::certified, c, 0};
  }

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (auto c = detail::try_candidate(u, v, hb.basis[std::size_t(i)] + hb.basis[std::size_t(j)]))
        return {IsoStatus::certified, c, 0};
      if (auto c = detail::try_candidate(u, v, hb.basis[std::size_t(i)] - hb.basis[std::size_t(j)]))
        return {IsoStatus::certified, c, 0};
    }

  // exhaustive over small prime fields keeps the desk-scale suite
  // deterministic: all coefficient vectors when p^r is small
  if (!f.is_rationals()) {
    const std::uint64_t p = f.characteristic;
    std::uint64_t count = 1;
    bool overflow = false;
    for (int i = 0; i < r; ++i) {
      count *= p;
      if (count > 65536) {
        overflow = true;
        break;
      }
    }
    if (!overflow && (r <= 4 || count <= 4096)) {
      std::vector<std::uint64_t> digits(std::size_t(r), 0);
      std::vector<FieldScalar> coeffs(std::size_t(r), FieldScalar::zero(f));
      for (std::uint64_t it = 1; it < count; ++it) {
        int pos = 0;
        while (true) {
          digits[std::size_t(pos)] += 1;
          if (digits[std::size_t(pos)] < p) break;
          digits[std::size_t(pos)] = 0;
          ++pos;
        }
        for (int i = 0; i < r; ++i)
          coeffs[std::size_t(i)] = FieldScalar::from_int(f, long(digits[std::size_t(i)]));
        Matrix x = detail::combine(hb, coeffs, f);
        if (auto c = detail::try_candidate(u, v, x)) return {IsoStatus::certified, c, 0};
      }
      return {IsoStatus::no_certificate_found, std::nullopt, int(count - 1)};
    }
  }

  std::mt19937_64 rng(seed);
  for (int trial = 1; trial <= max_trials; ++trial) {
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(std::size_t(r));
    bool all_zero = true;
    for (int i = 0; i < r; ++i) {
      long c;
      if (f.is_rationals()) {
        c = long(rng() % 7) - 3;  // small integers keep certificates readable
      } else {
        c = long(rng() % f.characteristic);
      }
      if (c != 0) all_zero = false;
      coeffs.push_back(FieldScalar::from_int(f, c));
    }
    if (all_zero) continue;
    Matrix x = detail::combine(hb, coeffs, f);
    if (auto c = detail::try_candidate(u, v, x)) return {IsoStatus::certified, c, trial};
  }
  return {IsoStatus::no_certificate_found, std::nullopt, max_trials};
}

}  // namespace indres
