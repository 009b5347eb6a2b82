#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indres/matrix.hpp"

using namespace indres;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F2 = FieldDescriptor::prime(2);
const FieldDescriptor F3 = FieldDescriptor::prime(3);
const FieldDescriptor F5 = FieldDescriptor::prime(5);

Matrix from_ints(const FieldDescriptor& f, int rows, int cols, std::vector<long> vals) {
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = FieldScalar::from_int(f, vals[std::size_t(i * cols + j)]);
  return m;
}

Matrix random_matrix(const FieldDescriptor& f, int rows, int cols, std::mt19937_64& rng) {
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long v = f.is_rationals() ? long(rng() % 11) - 5 : long(rng() % f.characteristic);
      m.at(i, j) = FieldScalar::from_int(f, v);
    }
  return m;
}

}  // namespace

TEST_CASE("field scalars: exact arithmetic and literals") {
  FieldScalar half = FieldScalar::parse(Q, "1/2");
  FieldScalar third = FieldScalar::rational(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(FieldScalar::parse(Q, "-4/6").str() == "-2/3");
  CHECK(FieldScalar::parse(Q, "7").str() == "7");
  CHECK(half.inv().str() == "2");

  FieldScalar a = FieldScalar::parse(F5, "7");
  CHECK(a.str() == "2");
  CHECK((a * a).str() == "4");
  CHECK(a.inv().str() == "3");  // 2*3 = 6 = 1 mod 5
  CHECK((-a).str() == "3");

  CHECK_THROWS(FieldScalar::parse(Q, "1/0"));
  CHECK_THROWS(FieldScalar::parse(Q, "1.5"));
  CHECK_THROWS(FieldScalar::parse(Q, "2/3x"));
  CHECK_THROWS(FieldScalar::parse(F5, "1/2"));
  CHECK_THROWS(FieldScalar::zero(Q) + FieldScalar::zero(F5));
  CHECK_THROWS(FieldScalar::zero(F5).inv());
  CHECK_THROWS(FieldDescriptor::prime(6));
  CHECK(FieldDescriptor::parse("F17").characteristic == 17);
}

TEST_CASE("rref: spec examples") {
  // identity 3x3 over Q
  RrefResult r = rref(Matrix::identity(Q, 3));
  CHECK(r.reduced == Matrix::identity(Q, 3));
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
  CHECK(r.rank == 3);

  // zero 2x2 over F3
  r = rref(Matrix::zero(F3, 2, 2));
  CHECK(r.reduced == Matrix::zero(F3, 2, 2));
  CHECK(r.pivots.empty());
  CHECK(r.rank == 0);

  // [[1,2],[2,4]] over Q -> [[1,2],[0,0]]
  r = rref(from_ints(Q, 2, 2, {1, 2, 2, 4}));
  CHECK(r.reduced == from_ints(Q, 2, 2, {1, 2, 0, 0}));
  CHECK(r.rank == 1);
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(7);
  for (const auto& f : {Q, F2, F3, F5})
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(f, 4, 6, rng);
      RrefResult r1 = rref(m);
      RrefResult r2 = rref(r1.reduced);
      CHECK(r1.reduced == r2.reduced);
      CHECK(r1.pivots == r2.pivots);
    }
}

TEST_CASE("nullspace: spec examples and rank-nullity") {
  CHECK(nullspace_basis(Matrix::identity(Q, 4)).dim() == 0);
  CHECK(nullspace_basis(Matrix::zero(Q, 1, 3)).dim() == 3);

  Matrix m(1, 2, F2);
  m.at(0, 0) = FieldScalar::one(F2);
  m.at(0, 1) = FieldScalar::one(F2);
  SubspaceBasis n = nullspace_basis(m);
  REQUIRE(n.dim() == 1);
  CHECK(n.vectors == from_ints(F2, 1, 2, {1, 1}));

  std::mt19937_64 rng(11);
  for (const auto& f : {Q, F3, F5})
    for (int trial = 0; trial < 20; ++trial) {
      Matrix a = random_matrix(f, 3, 5, rng);
      CHECK(nullspace_basis(a).dim() + rank(a) == a.cols());
      // every basis vector really solves a x = 0
      SubspaceBasis nb = nullspace_basis(a);
      for (int i = 0; i < nb.dim(); ++i)
        CHECK((a * nb.vectors.row(i).transpose()).is_zero());
    }
}

TEST_CASE("solve_linear: spec examples and substitution check") {
  Matrix b = from_ints(Q, 3, 1, {4, 5, 6});
  auto x = solve_linear(Matrix::identity(Q, 3), b);
  REQUIRE(x);
  CHECK(*x == b);

  CHECK_FALSE(solve_linear(Matrix::zero(Q, 2, 2), from_ints(Q, 2, 1, {1, 0})));

  auto s = solve_linear(from_ints(Q, 1, 1, {2}), from_ints(Q, 1, 1, {1}));
  REQUIRE(s);
  CHECK(s->at(0, 0).str() == "1/2");

  CHECK_THROWS(solve_linear(Matrix::identity(Q, 2), from_ints(Q, 3, 1, {1, 2, 3})));

  std::mt19937_64 rng(13);
  for (const auto& f : {Q, F2, F5})
    for (int trial = 0; trial < 25; ++trial) {
      Matrix a = random_matrix(f, 4, 3, rng);
      Matrix rhs = random_matrix(f, 4, 1, rng);
      auto sol = solve_linear(a, rhs);
      if (sol) CHECK(a * *sol == rhs);
    }
}

TEST_CASE("inverse") {
  Matrix m = from_ints(Q, 2, 2, {1, 1, 1, -1});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(Q, 2));
  CHECK(*inv * m == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(from_ints(Q, 2, 2, {1, 2, 2, 4})));
  CHECK(is_invertible(Matrix(0, 0, Q)));
}

TEST_CASE("quotient_map: spec examples") {
  // empty w in dim 2 -> identity projection
  QuotientMap qm = quotient_map(2, SubspaceBasis{2, Matrix(0, 2, Q)});
  CHECK(qm.projection == Matrix::identity(Q, 2));

  // w = whole space -> 0 rows
  qm = quotient_map(2, row_space(Matrix::identity(Q, 2)));
  CHECK(qm.projection.rows() == 0);

  // dim 2, w = span{(1,1)}
  SubspaceBasis w = row_space(from_ints(Q, 1, 2, {1, 1}));
  qm = quotient_map(2, w);
  REQUIRE(qm.projection.rows() == 1);
  CHECK((qm.projection * from_ints(Q, 2, 1, {1, 1})).is_zero());
  CHECK(qm.projection * qm.section == Matrix::identity(Q, 1));
}

TEST_CASE("quotient_map kills exactly the subspace (random)") {
  std::mt19937_64 rng(17);
  for (const auto& f : {Q, F3}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix span = random_matrix(f, 2, 5, rng);
      SubspaceBasis w = row_space(span);
      QuotientMap qm = quotient_map(5, w);
      CHECK(qm.projection.rows() == 5 - w.dim());
      // v and v + (combination of w) project identically
      Matrix v = random_matrix(f, 5, 1, rng);
      Matrix coeffs = random_matrix(f, 1, w.dim(), rng);
      Matrix shifted = v + (coeffs * w.vectors).transpose();
      CHECK(qm.projection * v == qm.projection * shifted);
      CHECK(qm.projection * qm.section == Matrix::identity(f, qm.projection.rows()));
      // the kernel of the projection is exactly span(w), as canonical bases
      SubspaceBasis ker = nullspace_basis(qm.projection);
      CHECK(ker.vectors == w.vectors);
    }
  }
}

TEST_CASE("kronecker and stacking") {
  Matrix a = from_ints(Q, 2, 2, {1, 2, 3, 4});
  Matrix i2 = Matrix::identity(Q, 2);
  Matrix k = Matrix::kronecker(a, i2);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 0).str() == "1");
  CHECK(k.at(0, 2).str() == "2");
  CHECK(k.at(1, 3).str() == "2");
  CHECK(Matrix::vstack(a, a).rows() == 4);
  CHECK(Matrix::hstack(a, a).cols() == 4);
  CHECK(Matrix::unvec(a.vec(), 2, 2) == a);
}
