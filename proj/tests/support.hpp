#pragma once

// Shared fixtures and random-instance generators for the test binaries.
//
// The four named algebras double as ground truth: every dimension and
// witness asserted against them was worked out by hand from the structure
// constants, independently of the library code.

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hjj/algebra.hpp"
#include "hjj/matrix.hpp"
#include "hjj/rational.hpp"

namespace testsupport {

using namespace hjj;

inline std::string fixture_path(const std::string& name) {
  return std::string(HJJ_FIXTURES_DIR) + "/" + name;
}

// --------------------------------------------------------------- fixtures

// dim 2, e1*e1 = e2, alpha(e1) = e1 + e2, alpha(e2) = e2.  Passes all axioms.
inline HomAlgebra alg2() {
  Matrix alpha(2, 2);
  alpha(0, 0) = Rational(1);
  alpha(1, 0) = Rational(1);
  alpha(1, 1) = Rational(1);
  Vec e2(2, Rational(0));
  e2[1] = Rational(1);
  return HomAlgebra::from_products({"e1", "e2"}, alpha, {{0, 0, e2}});
}

// dim 1, zero product, identity twist.
inline HomAlgebra abel1() {
  return HomAlgebra::zero_products({"e1"}, Matrix::identity(1));
}

// dim 3, alpha = diag(1,2,2), e2*e2 = e3, e2*e3 = 2e1, e3*e3 = 2e3.
// Fails multiplicativity first at (e2,e2) and the twisted Jacobi identity
// first at (e2,e2,e2); the cyclic sum at (e2,e2,e3) is 4e3.
inline HomAlgebra alg3() {
  Matrix alpha(3, 3);
  alpha(0, 0) = Rational(1);
  alpha(1, 1) = Rational(2);
  alpha(2, 2) = Rational(2);
  Vec e3(3, Rational(0)), two_e1(3, Rational(0)), two_e3(3, Rational(0));
  e3[2] = Rational(1);
  two_e1[0] = Rational(2);
  two_e3[2] = Rational(2);
  return HomAlgebra::from_products({"e1", "e2", "e3"}, alpha,
                                   {{1, 1, e3}, {1, 2, two_e1}, {2, 2, two_e3}});
}

// dim 5, identity twist: e1*e1 = e2, e1*e3 = e4, e1*e4 = -e5, e2*e3 = 2e5.
// Passes all axioms; its adjoint action is not vacuous in degree 2, which
// makes it the fixture of choice for sign-sensitive module checks.
inline HomAlgebra jj5() {
  auto unit = [](std::size_t i, const Rational& c) {
    Vec v(5, Rational(0));
    v[i] = c;
    return v;
  };
  return HomAlgebra::from_products({"e1", "e2", "e3", "e4", "e5"}, Matrix::identity(5),
                                   {{0, 0, unit(1, Rational(1))},
                                    {0, 2, unit(3, Rational(1))},
                                    {0, 3, unit(4, Rational(-1))},
                                    {1, 2, unit(4, Rational(2))}});
}

// dim 1, zero product, zero twist: a valid algebra whose twist is singular.
inline HomAlgebra singular1() {
  return HomAlgebra::zero_products({"e1"}, Matrix(1, 1));
}

// ------------------------------------------------------------ random data

inline std::mt19937& rng() {
  static std::mt19937 gen(20260819u);
  return gen;
}

inline Rational rand_rational(int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(rng()));
}

inline Matrix rand_matrix(std::size_t rows, std::size_t cols, int lo = -2, int hi = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_rational(lo, hi);
  return m;
}

inline Matrix rand_invertible(std::size_t n) {
  for (;;) {
    Matrix m = rand_matrix(n, n);
    if (m.try_inverse()) return m;
  }
}

// Transport the whole structure along an invertible g: the product becomes
// g^{-1}(g(x)*g(y)) and the twist g^{-1} alpha g.  Every axiom is preserved
// verbatim, which makes this the workhorse for randomized valid instances.
inline HomAlgebra conjugate_algebra(const HomAlgebra& a, const Matrix& g) {
  const std::size_t d = a.dim();
  Matrix gi = g.pow(-1);
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = gi.apply(a.product(g.col(i), g.col(j)));
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = prod[k];
    }
  return HomAlgebra(a.labels(), gi * a.alpha() * g, std::move(c));
}

inline HomAlgebra rand_conjugate(const HomAlgebra& a) {
  return conjugate_algebra(a, rand_invertible(a.dim()));
}

// Truncated polynomials K[x]/(x^m) twisted along x -> c x: the twisted
// product of x^i and x^j is c^{i+j} x^{i+j} (zero past the truncation) and
// the twist scales x^i by c^i.  With c = 1 this is the plain associative
// algebra; any c gives a commutative multiplicative Hom-associative factor.
inline HomAssocAlgebra truncated_poly_factor(std::size_t m, const Rational& c) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i + 1));
  Matrix beta(m, m);
  Rational p(1);
  for (std::size_t i = 0; i < m; ++i) {
    beta(i, i) = p;
    p *= c;
  }
  std::vector<Rational> structure(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i + j >= m) continue;
      Rational coeff(1);
      for (std::size_t t = 0; t < i + j; ++t) coeff *= c;
      structure[(i * m + j) * m + (i + j)] = coeff;
    }
  return HomAssocAlgebra(labels, beta, std::move(structure));
}

// Random symmetric bilinear form with small integer entries.
inline BilinearForm rand_symmetric_form(std::size_t d) {
  BilinearForm theta(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = rand_rational();
      theta.at(i, j) = v;
      theta.at(j, i) = v;
    }
  return theta;
}

// All symmetric forms theta that are twist-invariant and cyclically closed:
//   theta(alpha x, alpha y) = theta(x, y)
//   theta(x*y, alpha z) + theta(y*z, alpha x) + theta(z*x, alpha y) = 0.
// Solved directly from the structure constants as a linear system in the
// d*d entries of theta; used as an independent oracle for extensions.
inline Subspace central_cocycle_forms(const HomAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t vars = d * d;  // theta[p*d + q]
  std::vector<Vec> rows;
  auto row = [&]() { return Vec(vars, Rational(0)); };
  auto pair_into = [&](Vec& r, const Vec& x, const Vec& y, const Rational& scale) {
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) r[p * d + q] += scale * x[p] * y[q];
  };
  // Symmetry and invariance, one row per entry pair.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i < j) {
        Vec r = row();
        r[i * d + j] = Rational(1);
        r[j * d + i] -= Rational(1);
        rows.push_back(r);
      }
      Vec r = row();
      pair_into(r, a.alpha().col(i), a.alpha().col(j), Rational(1));
      r[i * d + j] -= Rational(1);
      rows.push_back(r);
    }
  // Cyclic closure on basis triples.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = j; k < d; ++k) {
        Vec r = row();
        pair_into(r, a.product_of_basis(i, j), a.alpha().col(k), Rational(1));
        pair_into(r, a.product_of_basis(j, k), a.alpha().col(i), Rational(1));
        pair_into(r, a.product_of_basis(k, i), a.alpha().col(j), Rational(1));
        rows.push_back(r);
      }
  Matrix system(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) system(r, c) = rows[r][c];
  return nullspace(system);
}

inline BilinearForm form_from_flat(const Vec& flat, std::size_t d) {
  BilinearForm theta(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) theta.at(i, j) = flat[i * d + j];
  return theta;
}

// Random element of a subspace, as a small integer combination of its basis.
inline Vec rand_element(const Subspace& s) {
  Vec v(s.ambient_dim(), Rational(0));
  for (std::size_t i = 0; i < s.dim(); ++i) axpy(v, rand_rational(), s.basis_row(i));
  return v;
}

}  // namespace testsupport
