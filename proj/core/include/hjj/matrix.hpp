#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hjj/rational.hpp"

namespace hjj {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
void axpy(Vec& acc, const Rational& c, const Vec& v);  // acc += c*v
Vec basis_vector(std::size_t dim, std::size_t i);

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;                 // matrix * column vector
  Matrix pow(long k) const;                      // negative k inverts; throws SingularTwist
  std::optional<Matrix> try_inverse() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& m);
  friend Matrix operator-(const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

Matrix stack_rows(const Matrix& top, const Matrix& bottom);

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

// Reduced row echelon form: leading entries 1, pivot columns cleared,
// zero rows sunk to the bottom. Fully deterministic.
RrefResult rref(Matrix m);

// A linear subspace in canonical form: the basis matrix is the RREF of any
// spanning set, rows ordered by pivot column, no zero rows. Two Subspace
// values are equal iff they are the same subspace.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span_of_rows(const Matrix& rows, std::size_t ambient_dim);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  // Subtracts the projection onto each pivot coordinate; the result is zero
  // exactly when v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);  // right kernel {v : m v = 0}
Subspace image(const Matrix& m);      // column span

// Representatives of z/b: the basis vectors of z reduced modulo b (and modulo
// the representatives already chosen), skipping the ones that fall into b.
// Throws NotASubspace unless b ⊆ z.
std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b);

}  // namespace hjj
