#include "hjj/matrix.hpp"

#include <utility>

namespace hjj {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void axpy(Vec& acc, const Rational& c, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector sizes differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::pow(long k) const {
  if (rows_ != cols_) throw DimensionMismatch("power of non-square matrix");
  Matrix base = *this;
  if (k < 0) {
    auto inv = try_inverse();
    if (!inv) throw SingularTwist("negative power of a singular matrix");
    base = *inv;
    k = -k;
  }
  Matrix acc = Matrix::identity(rows_);
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.rank != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (rr.pivots[r] != r) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.m(r, n + c);
  return inv;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sizes differ");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sizes differ");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

Matrix operator-(const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = -m.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stacked widths differ");
  Matrix r(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) r(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) r(top.rows() + i, j) = bottom(i, j);
  return r;
}

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(lead, j), m(pivot, j));
    Rational inv = m(lead, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t j = col; j < cols; ++j) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim), {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span_of_rows(Matrix::identity(ambient_dim), ambient_dim);
}

Subspace Subspace::span_of_rows(const Matrix& rows, std::size_t ambient_dim) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw DimensionMismatch("spanning rows have wrong width");
  RrefResult rr = rref(rows);
  Matrix basis(rr.rank, ambient_dim);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(r, c) = rr.m(r, c);
  return Subspace(ambient_dim, std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return zero(ambient_dim);
  return span_of_rows(Matrix::from_rows(vectors), ambient_dim);
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational& coef = v[pivots_[r]];
    if (coef.is_zero()) continue;
    Rational f = coef;  // pivot entries are 1, so the multiplier is the coordinate itself
    for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * basis_(r, c);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return hjj::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

Subspace nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.m(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, cols);
}

Subspace image(const Matrix& m) { return Subspace::span_of_rows(m.transpose(), m.rows()); }

std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("different ambient spaces");
  if (!z.contains(b)) throw NotASubspace("quotient by a non-subspace");
  Subspace work = b;
  std::vector<Vec> reps;
  for (std::size_t r = 0; r < z.dim(); ++r) {
    Vec reduced = work.reduce(z.basis_row(r));
    if (is_zero(reduced)) continue;
    // normalize the leading coordinate to 1 for a stable representative
    for (const auto& x : reduced)
      if (!x.is_zero()) {
        reduced = x.inverse() * reduced;
        break;
      }
    reps.push_back(reduced);
    Matrix next = stack_rows(work.basis(), Matrix::from_rows({reps.back()}));
    work = Subspace::span_of_rows(next, z.ambient_dim());
  }
  return reps;
}

}  // namespace hjj
