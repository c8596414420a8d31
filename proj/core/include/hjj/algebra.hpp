#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hjj/matrix.hpp"

namespace hjj {

// A finite-dimensional commutative algebra with a twist map, described by its
// structure constants c[i][j][k] (e_i * e_j = sum_k c[i][j][k] e_k, with
// c[i][j] = c[j][i] enforced structurally) and the twist matrix alpha in
// column convention: alpha(e_j) = sum_i alpha[i][j] e_i.
//
// Nothing here assumes the twisted Jacobi identity holds; verify_algebra
// reports on it, and every computation runs on violating inputs as well.
class HomAlgebra {
 public:
  struct ProductEntry {
    std::size_t left, right;
    Vec value;
  };

  HomAlgebra(std::vector<std::string> labels, Matrix alpha, std::vector<Rational> structure);
  static HomAlgebra from_products(std::vector<std::string> labels, Matrix alpha,
                                  const std::vector<ProductEntry>& products);
  static HomAlgebra zero_products(std::vector<std::string> labels, Matrix alpha);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& alpha() const { return alpha_; }

  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  Vec product_of_basis(std::size_t i, std::size_t j) const;
  Vec product(const Vec& x, const Vec& y) const;
  Vec twist(const Vec& x) const { return alpha_.apply(x); }
  Matrix left_mult(std::size_t i) const;       // matrix of e_i * (-)
  Matrix left_mult_of(const Vec& x) const;     // matrix of x * (-)

  // Pretty label for reports; falls back to "e{i+1}" on out-of-range.
  const std::string& label(std::size_t i) const { return labels_[i]; }

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
    return a.labels_ == b.labels_ && a.alpha_ == b.alpha_ && a.c_ == b.c_;
  }
  friend bool operator!=(const HomAlgebra& a, const HomAlgebra& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  Matrix alpha_;
  std::vector<Rational> c_;  // c[(i*dim + j)*dim + k]
};

struct AxiomReport {
  bool commutative = true;  // structural: the constructor rejects asymmetric tables
  bool multiplicative = true;
  bool hom_jacobi = true;
  std::optional<std::pair<std::size_t, std::size_t>> multiplicativity_witness;
  std::optional<std::array<std::size_t, 3>> jacobi_witness;
  Vec jacobi_residual;  // value of the cyclic sum at the witness triple

  bool all() const { return commutative && multiplicative && hom_jacobi; }
};

// Checks multiplicativity of the twist and the twisted Jacobi identity on
// basis tuples (pairs i<=j, triples i<=j<=k; both sides are symmetric).
// Witnesses are the first failing tuple in lexicographic order.
AxiomReport verify_algebra(const HomAlgebra& a);

// The cyclic sum (x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y).
Vec hom_jacobian(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

// {b : alpha(b) = b and x*b = 0 for all x}, as a canonical subspace of A.
Subspace hom_annihilator(const HomAlgebra& a);

// Is s closed under the twist and under multiplication by A?
bool check_hom_ideal(const HomAlgebra& a, const Subspace& s);

// A commutative (Hom-)associative factor for tensor constructions: structure
// constants plus a twist beta (identity for a plain associative algebra).
class HomAssocAlgebra {
 public:
  HomAssocAlgebra(std::vector<std::string> labels, Matrix beta, std::vector<Rational> structure);
  static HomAssocAlgebra from_products(std::vector<std::string> labels, Matrix beta,
                                       const std::vector<HomAlgebra::ProductEntry>& products);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& beta() const { return beta_; }
  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  Vec product_of_basis(std::size_t i, std::size_t j) const;
  Vec product(const Vec& x, const Vec& y) const;

  bool is_commutative() const;
  bool is_multiplicative() const;      // beta(a.b) = beta(a).beta(b)
  bool is_hom_associative() const;     // (a.b).beta(c) = beta(a).(b.c)

 private:
  std::vector<std::string> labels_;
  Matrix beta_;
  std::vector<Rational> c_;
};

// L tensor A with product (x⊗a)(y⊗b) = (x*y)⊗(a.b) and twist alpha⊗Id.
// The factor must be commutative and associative with identity twist.
HomAlgebra current_algebra(const HomAlgebra& l, const HomAssocAlgebra& factor);

// Same construction with twist alpha⊗beta over a commutative multiplicative
// Hom-associative factor.
HomAlgebra tensor_hom_algebra(const HomAlgebra& l, const HomAssocAlgebra& factor);

// Scalar-valued bilinear form on A, theta[i][j].
class BilinearForm {
 public:
  explicit BilinearForm(std::size_t dim) : dim_(dim), t_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& at(std::size_t i, std::size_t j) { return t_[i * dim_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * dim_ + j]; }
  Rational eval(const Vec& x, const Vec& y) const;
  bool symmetric() const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.dim_ == b.dim_ && a.t_ == b.t_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> t_;
};

// Vector-valued bilinear map, c[i][j][k] in the same layout as algebra
// structure constants. Used for deformation cochains and induced products.
class BilinearMap {
 public:
  BilinearMap(std::size_t dim_in, std::size_t dim_out)
      : dim_in_(dim_in), dim_out_(dim_out), c_(dim_in * dim_in * dim_out) {}
  static BilinearMap product_of(const HomAlgebra& a);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_in_ + j) * dim_out_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_in_ + j) * dim_out_ + k];
  }
  Vec eval_basis(std::size_t i, std::size_t j) const;
  Vec eval(const Vec& x, const Vec& y) const;
  bool symmetric() const;
  bool is_zero() const;

  // Flat 2-cochain coordinates: index = out*dim_in^2 + i + j*dim_in,
  // matching the cohomology module's coordinate order.
  Vec cochain_coords() const;
  static BilinearMap from_cochain_coords(const Vec& coords, std::size_t dim_in,
                                         std::size_t dim_out);

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.dim_in_ == b.dim_in_ && a.dim_out_ == b.dim_out_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BilinearMap& a, const BilinearMap& b) { return !(a == b); }
  friend BilinearMap operator-(const BilinearMap& a, const BilinearMap& b);

 private:
  std::size_t dim_in_, dim_out_;
  std::vector<Rational> c_;
};

struct ExtensionResult {
  HomAlgebra algebra;
  bool valid;
  std::string detail;  // which condition failed, empty when valid
};

// One-dimensional central extension by a symmetric form: on A ⊕ Kw the
// product is x*y + theta(x,y)w and the twist fixes w. valid means theta is
// invariant under alpha⊗alpha and closed for the scalar coefficient complex,
// which is exactly when the result passes verify_algebra over a valid base.
ExtensionResult central_extension(const HomAlgebra& a, const BilinearForm& theta);

// Extension A ⊕ KD with (u + mD)(v + nD) = u*v + mD(v) + nD(u) and the twist
// fixing D. valid means D is an antiderivation weighted by one power of the
// twist and D^2 = 0.
ExtensionResult d_extension(const HomAlgebra& a, const Matrix& d);

}  // namespace hjj
