// Dense exact matrices over Q or F_p, with the row-reduction toolkit the
// rest of the library is built on: rref, nullspace, solve, quotient maps.
//
// Conventions are deterministic everywhere: pivots are chosen leftmost
// column, first nonzero row; quotient coordinates are the non-pivot
// coordinates of the rref basis of the killed subspace.

#pragma once

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "indres/field.hpp"

namespace indres {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(FieldDescriptor::rationals()) {}

  Matrix(int rows, int cols, const FieldDescriptor& field)
      : rows_(rows), cols_(cols), field_(field),
        e_(std::size_t(rows) * std::size_t(cols), FieldScalar::zero(field)) {
    if (rows < 0 || cols < 0) fail("matrix: negative dimension");
  }

  static Matrix zero(const FieldDescriptor& f, int r, int c) { return Matrix(r, c, f); }

  static Matrix identity(const FieldDescriptor& f, int n) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(f);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  FieldScalar& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
  const FieldScalar& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.match_shape(b, "add");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.match_shape(b, "subtract");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
      fail("matrix: product shape mismatch " + a.shape_str() + " * " + b.shape_str());
    Matrix c(a.rows_, b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const FieldScalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const FieldScalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend Matrix operator*(const FieldScalar& s, Matrix m) {
    for (auto& x : m.e_) x *= s;
    return m;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
  }

  // Kronecker product, lexicographic basis e_i (x) f_j at index i*b.cols + j.
  static Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) fail("matrix: kronecker field mismatch");
    Matrix k(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        const FieldScalar& aij = a.at(i, j);
        if (aij.is_zero()) continue;
        for (int p = 0; p < b.rows_; ++p)
          for (int q = 0; q < b.cols_; ++q) {
            if (b.at(p, q).is_zero()) continue;
            k.at(i * b.rows_ + p, j * b.cols_ + q) = aij * b.at(p, q);
          }
      }
    return k;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || a.field_ != b.field_) fail("matrix: vstack mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.field_ != b.field_) fail("matrix: hstack mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
  }

  Matrix column(int j) const {
    Matrix c(rows_, 1, field_);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

  Matrix row(int i) const {
    Matrix r(1, cols_, field_);
    for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
    return r;
  }

  // Row-major flattening of this matrix into a single column.
  Matrix vec() const {
    Matrix v(rows_ * cols_, 1, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) v.at(i * cols_ + j, 0) = at(i, j);
    return v;
  }

  static Matrix unvec(const Matrix& column, int rows, int cols) {
    if (column.cols() != 1 || column.rows() != rows * cols) fail("matrix: unvec shape");
    Matrix m(rows, cols, column.field());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = column.at(i * cols + j, 0);
    return m;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << ":";
    for (int i = 0; i < rows_; ++i) {
      if (i) os << " ;";
      for (int j = 0; j < cols_; ++j) os << " " << at(i, j).str();
    }
    return os.str();
  }

 private:
  int rows_, cols_;
  FieldDescriptor field_;
  std::vector<FieldScalar> e_;

  void match_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
      fail(std::string("matrix: ") + what + " mismatch " + shape_str() + " vs " + o.shape_str());
  }
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;
  int rank = 0;
};

inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    FieldScalar s = m.at(r, c).inv();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= s;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldScalar t = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= t * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

inline int rank(const Matrix& m) { return rref(m).rank; }

// A subspace of a coordinate space, stored as an rref basis (no zero rows).
struct SubspaceBasis {
  int ambient_dim = 0;
  Matrix vectors;  // dim x ambient_dim, rows in rref

  int dim() const { return vectors.rows(); }

  bool contains(const Matrix& row_vector) const;
};

// Canonical basis of the row space of m.
inline SubspaceBasis row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix b(r.rank, m.cols(), m.field());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) b.at(i, j) = r.reduced.at(i, j);
  return {m.cols(), std::move(b)};
}

inline bool SubspaceBasis::contains(const Matrix& row_vector) const {
  if (row_vector.rows() != 1 || row_vector.cols() != ambient_dim) fail("subspace: bad vector shape");
  SubspaceBasis joined = row_space(Matrix::vstack(vectors, row_vector));
  return joined.dim() == dim();
}

// Basis of {x : m x = 0}, canonicalized by a final rref.
inline SubspaceBasis nullspace_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const int n = m.cols();
  std::vector<char> is_pivot(std::size_t(n), 0);
  for (int p : r.pivots) is_pivot[std::size_t(p)] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[std::size_t(j)]) free_cols.push_back(j);
  Matrix basis(int(free_cols.size()), n, m.field());
  for (int k = 0; k < int(free_cols.size()); ++k) {
    int fc = free_cols[std::size_t(k)];
    basis.at(k, fc) = FieldScalar::one(m.field());
    for (int i = 0; i < r.rank; ++i)
      basis.at(k, r.pivots[std::size_t(i)]) = -r.reduced.at(i, fc);
  }
  return row_space(basis);
}

// Solve a x = b for each column of b; absent if inconsistent.
inline std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail("solve: row mismatch " + a.shape_str() + " vs " + b.shape_str());
  if (a.field() != b.field()) fail("solve: field mismatch");
  RrefResult r = rref(Matrix::hstack(a, b));
  // any pivot in the b-block means an inconsistent row
  for (int p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols(), a.field());
  for (int i = 0; i < int(r.pivots.size()); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(r.pivots[std::size_t(i)], j) = r.reduced.at(i, a.cols() + j);
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult r = rref(m);
  if (r.rank != m.rows()) return std::nullopt;
  auto x = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  return x;
}

inline bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// Projection/section pair realizing ambient -> ambient/span(w).
// Quotient coordinates are the non-pivot coordinates of w's rref basis.
struct QuotientMap {
  Matrix projection;        // (ambient - dim w) x ambient
  Matrix section;           // ambient x (ambient - dim w)
  std::vector<int> coords;  // which ambient coordinates survive
};

inline QuotientMap quotient_map(int ambient_dim, const SubspaceBasis& w) {
  if (w.ambient_dim != ambient_dim) fail("quotient: ambient dim mismatch");
  RrefResult r = rref(w.vectors);
  if (r.rank != w.dim()) fail("quotient: basis rows not independent");
  std::vector<char> is_pivot(std::size_t(ambient_dim), 0);
  for (int p : r.pivots) is_pivot[std::size_t(p)] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[std::size_t(j)]) free_cols.push_back(j);
  const FieldDescriptor f = w.vectors.field();
  Matrix proj(int(free_cols.size()), ambient_dim, f);
  Matrix sect(ambient_dim, int(free_cols.size()), f);
  for (int k = 0; k < int(free_cols.size()); ++k) {
    proj.at(k, free_cols[std::size_t(k)]) = FieldScalar::one(f);
    for (int i = 0; i < r.rank; ++i)
      proj.at(k, r.pivots[std::size_t(i)]) = -r.reduced.at(i, free_cols[std::size_t(k)]);
    sect.at(free_cols[std::size_t(k)], k) = FieldScalar::one(f);
  }
  return {std::move(proj), std::move(sect), std::move(free_cols)};
}

}  // namespace indres
