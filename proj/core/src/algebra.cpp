#include "hjj/algebra.hpp"

#include <utility>

#include "hjj/errors.hpp"

namespace hjj {

namespace {

void check_labels_distinct(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ParseError("empty basis label");
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw ParseError("duplicate basis label '" + labels[i] + "'");
  }
}

void check_square(const Matrix& m, std::size_t dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
}

// Shared by both algebra kinds: validate a dense table and symmetrize sparse
// product entries. Missing pairs are zero; a pair given twice with different
// values, or given on both sides of the diagonal inconsistently, is an error.
std::vector<Rational> table_from_products(std::size_t dim,
                                          const std::vector<HomAlgebra::ProductEntry>& products,
                                          bool symmetrize) {
  std::vector<Rational> c(dim * dim * dim);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& p : products) {
    if (p.left >= dim || p.right >= dim)
      throw DimensionMismatch("product entry index out of range");
    if (p.value.size() != dim)
      throw DimensionMismatch("product value has wrong dimension");
    auto put = [&](std::size_t i, std::size_t j) {
      std::size_t base = (i * dim + j) * dim;
      if (seen[i * dim + j]) {
        for (std::size_t k = 0; k < dim; ++k)
          if (c[base + k] != p.value[k])
            throw ConflictingProduct("conflicting values for basis pair (" + std::to_string(i + 1) +
                                     "," + std::to_string(j + 1) + ")");
        return;
      }
      seen[i * dim + j] = true;
      for (std::size_t k = 0; k < dim; ++k) c[base + k] = p.value[k];
    };
    put(p.left, p.right);
    if (symmetrize) put(p.right, p.left);
  }
  return c;
}

}  // namespace

HomAlgebra::HomAlgebra(std::vector<std::string> labels, Matrix alpha,
                       std::vector<Rational> structure)
    : labels_(std::move(labels)), alpha_(std::move(alpha)), c_(std::move(structure)) {
  check_labels_distinct(labels_);
  std::size_t d = dim();
  check_square(alpha_, d, "twist matrix");
  if (c_.size() != d * d * d)
    throw DimensionMismatch("structure constants: expected " + std::to_string(d * d * d) +
                            " entries, got " + std::to_string(c_.size()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c_[(i * d + j) * d + k] != c_[(j * d + i) * d + k])
          throw ConflictingProduct("structure constants not symmetric at pair (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

HomAlgebra HomAlgebra::from_products(std::vector<std::string> labels, Matrix alpha,
                                     const std::vector<ProductEntry>& products) {
  std::size_t d = labels.size();
  return HomAlgebra(std::move(labels), std::move(alpha),
                    table_from_products(d, products, /*symmetrize=*/true));
}

HomAlgebra HomAlgebra::zero_products(std::vector<std::string> labels, Matrix alpha) {
  std::size_t d = labels.size();
  return HomAlgebra(std::move(labels), std::move(alpha), std::vector<Rational>(d * d * d));
}

Vec HomAlgebra::product_of_basis(std::size_t i, std::size_t j) const {
  std::size_t d = dim();
  Vec out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = c_[(i * d + j) * d + k];
  return out;
}

Vec HomAlgebra::product(const Vec& x, const Vec& y) const {
  std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw DimensionMismatch("product: vector dimension");
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rational coef = x[i] * y[j];
      std::size_t base = (i * d + j) * d;
      for (std::size_t k = 0; k < d; ++k) out[k] += coef * c_[base + k];
    }
  }
  return out;
}

Matrix HomAlgebra::left_mult(std::size_t i) const {
  std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) m(k, j) = c_[(i * d + j) * d + k];
  return m;
}

Matrix HomAlgebra::left_mult_of(const Vec& x) const {
  std::size_t d = dim();
  if (x.size() != d) throw DimensionMismatch("left_mult_of: vector dimension");
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m(k, j) += x[i] * c_[(i * d + j) * d + k];
  }
  return m;
}

AxiomReport verify_algebra(const HomAlgebra& a) {
  AxiomReport report;
  std::size_t d = a.dim();

  // alpha(e_i * e_j) = alpha(e_i) * alpha(e_j), first failing pair wins.
  for (std::size_t i = 0; i < d && report.multiplicative; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Vec lhs = a.twist(a.product_of_basis(i, j));
      Vec rhs = a.product(a.alpha().col(i), a.alpha().col(j));
      if (lhs != rhs) {
        report.multiplicative = false;
        report.multiplicativity_witness = {i, j};
        break;
      }
    }
  }

  // The cyclic identity is symmetric in all three slots for a commutative
  // product, so ordered triples i<=j<=k cover everything.
  for (std::size_t i = 0; i < d && report.hom_jacobi; ++i) {
    for (std::size_t j = i; j < d && report.hom_jacobi; ++j) {
      for (std::size_t k = j; k < d; ++k) {
        Vec r = hom_jacobian(a, basis_vector(d, i), basis_vector(d, j), basis_vector(d, k));
        if (!is_zero(r)) {
          report.hom_jacobi = false;
          report.jacobi_witness = {{i, j, k}};
          report.jacobi_residual = std::move(r);
          break;
        }
      }
    }
  }
  return report;
}

Vec hom_jacobian(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = a.product(a.product(x, y), a.twist(z));
  out += a.product(a.product(y, z), a.twist(x));
  out += a.product(a.product(z, x), a.twist(y));
  return out;
}

Subspace hom_annihilator(const HomAlgebra& a) {
  std::size_t d = a.dim();
  // Stack (alpha - I) over every left multiplication; the common kernel is
  // the set of twist-fixed elements killing the whole algebra.
  Matrix stacked(0, d);
  Matrix shifted = a.alpha();
  for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Rational(1);
  stacked = stack_rows(stacked, shifted);
  for (std::size_t i = 0; i < d; ++i) stacked = stack_rows(stacked, a.left_mult(i));
  return nullspace(stacked);
}

bool check_hom_ideal(const HomAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim())
    throw DimensionMismatch("check_hom_ideal: subspace lives in the wrong space");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec b = s.basis_row(r);
    if (!s.contains(a.twist(b))) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.product(basis_vector(a.dim(), i), b))) return false;
  }
  return true;
}

HomAssocAlgebra::HomAssocAlgebra(std::vector<std::string> labels, Matrix beta,
                                 std::vector<Rational> structure)
    : labels_(std::move(labels)), beta_(std::move(beta)), c_(std::move(structure)) {
  check_labels_distinct(labels_);
  std::size_t d = dim();
  check_square(beta_, d, "factor twist");
  if (c_.size() != d * d * d) throw DimensionMismatch("factor structure constants size");
}

HomAssocAlgebra HomAssocAlgebra::from_products(std::vector<std::string> labels, Matrix beta,
                                               const std::vector<HomAlgebra::ProductEntry>& products) {
  std::size_t d = labels.size();
  // Associative factors are entered in full (no symmetrization) so that
  // is_commutative is a real check, not a construction artifact.
  return HomAssocAlgebra(std::move(labels), std::move(beta),
                         table_from_products(d, products, /*symmetrize=*/false));
}

Vec HomAssocAlgebra::product_of_basis(std::size_t i, std::size_t j) const {
  std::size_t d = dim();
  Vec out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = c_[(i * d + j) * d + k];
  return out;
}

Vec HomAssocAlgebra::product(const Vec& x, const Vec& y) const {
  std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw DimensionMismatch("factor product: vector dimension");
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rational coef = x[i] * y[j];
      std::size_t base = (i * d + j) * d;
      for (std::size_t k = 0; k < d; ++k) out[k] += coef * c_[base + k];
    }
  }
  return out;
}

bool HomAssocAlgebra::is_commutative() const {
  std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (product_of_basis(i, j) != product_of_basis(j, i)) return false;
  return true;
}

bool HomAssocAlgebra::is_multiplicative() const {
  std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (beta_.apply(product_of_basis(i, j)) != product(beta_.col(i), beta_.col(j))) return false;
  return true;
}

bool HomAssocAlgebra::is_hom_associative() const {
  std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = product(product_of_basis(i, j), beta_.col(k));
        Vec rhs = product(beta_.col(i), product_of_basis(j, k));
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

// Product and twist of L⊗F with twist alpha⊗beta. Basis order is
// e_i⊗u_p at flat index i*dim_f + p.
HomAlgebra tensor_build(const HomAlgebra& l, const HomAssocAlgebra& f) {
  std::size_t dl = l.dim(), df = f.dim(), d = dl * df;
  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t p = 0; p < df; ++p) labels.push_back(l.label(i) + "⊗" + f.labels()[p]);

  Matrix alpha(d, d);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t r = 0; r < dl; ++r)
      for (std::size_t p = 0; p < df; ++p)
        for (std::size_t s = 0; s < df; ++s)
          alpha(r * df + s, i * df + p) = l.alpha()(r, i) * f.beta()(s, p);

  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t p = 0; p < df; ++p)
      for (std::size_t j = 0; j < dl; ++j)
        for (std::size_t q = 0; q < df; ++q) {
          Vec prod_l = l.product_of_basis(i, j);
          Vec prod_f = f.product_of_basis(p, q);
          std::size_t row = (i * df + p) * d + (j * df + q);
          for (std::size_t r = 0; r < dl; ++r)
            for (std::size_t s = 0; s < df; ++s)
              c[row * d + r * df + s] = prod_l[r] * prod_f[s];
        }
  return HomAlgebra(std::move(labels), std::move(alpha), std::move(c));
}

}  // namespace

HomAlgebra current_algebra(const HomAlgebra& l, const HomAssocAlgebra& factor) {
  Matrix id = Matrix::identity(factor.dim());
  if (!(factor.beta() == id)) throw InvalidFactor("current algebra factor must have identity twist");
  if (!factor.is_commutative()) throw InvalidFactor("current algebra factor is not commutative");
  if (!factor.is_hom_associative())  // with identity twist this is plain associativity
    throw InvalidFactor("current algebra factor is not associative");
  if (!verify_algebra(l).all()) throw InvalidFactor("base algebra fails verification");
  return tensor_build(l, factor);
}

HomAlgebra tensor_hom_algebra(const HomAlgebra& l, const HomAssocAlgebra& factor) {
  if (!factor.is_commutative()) throw InvalidFactor("tensor factor is not commutative");
  if (!factor.is_multiplicative()) throw InvalidFactor("tensor factor twist is not multiplicative");
  if (!factor.is_hom_associative()) throw InvalidFactor("tensor factor is not Hom-associative");
  if (!verify_algebra(l).all()) throw InvalidFactor("base algebra fails verification");
  return tensor_build(l, factor);
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("form eval: vector dimension");
  Rational out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) out += x[i] * y[j] * t_[i * dim_ + j];
  }
  return out;
}

bool BilinearForm::symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (t_[i * dim_ + j] != t_[j * dim_ + i]) return false;
  return true;
}

BilinearMap BilinearMap::product_of(const HomAlgebra& a) {
  std::size_t d = a.dim();
  BilinearMap m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m.at(i, j, k) = a.structure(i, j, k);
  return m;
}

Vec BilinearMap::eval_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_out_);
  for (std::size_t k = 0; k < dim_out_; ++k) out[k] = c_[(i * dim_in_ + j) * dim_out_ + k];
  return out;
}

Vec BilinearMap::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim_in_ || y.size() != dim_in_)
    throw DimensionMismatch("bilinear map eval: vector dimension");
  Vec out(dim_out_);
  for (std::size_t i = 0; i < dim_in_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_in_; ++j) {
      if (y[j].is_zero()) continue;
      Rational coef = x[i] * y[j];
      std::size_t base = (i * dim_in_ + j) * dim_out_;
      for (std::size_t k = 0; k < dim_out_; ++k) out[k] += coef * c_[base + k];
    }
  }
  return out;
}

bool BilinearMap::symmetric() const {
  for (std::size_t i = 0; i < dim_in_; ++i)
    for (std::size_t j = i + 1; j < dim_in_; ++j)
      if (eval_basis(i, j) != eval_basis(j, i)) return false;
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

Vec BilinearMap::cochain_coords() const {
  Vec out(dim_out_ * dim_in_ * dim_in_);
  for (std::size_t k = 0; k < dim_out_; ++k)
    for (std::size_t i = 0; i < dim_in_; ++i)
      for (std::size_t j = 0; j < dim_in_; ++j)
        out[k * dim_in_ * dim_in_ + i + j * dim_in_] = at(i, j, k);
  return out;
}

BilinearMap BilinearMap::from_cochain_coords(const Vec& coords, std::size_t dim_in,
                                             std::size_t dim_out) {
  if (coords.size() != dim_out * dim_in * dim_in)
    throw DimensionMismatch("2-cochain coordinates have wrong length");
  BilinearMap m(dim_in, dim_out);
  for (std::size_t k = 0; k < dim_out; ++k)
    for (std::size_t i = 0; i < dim_in; ++i)
      for (std::size_t j = 0; j < dim_in; ++j)
        m.at(i, j, k) = coords[k * dim_in * dim_in + i + j * dim_in];
  return m;
}

BilinearMap operator-(const BilinearMap& a, const BilinearMap& b) {
  if (a.dim_in_ != b.dim_in_ || a.dim_out_ != b.dim_out_)
    throw DimensionMismatch("bilinear map difference: shape mismatch");
  BilinearMap out(a.dim_in_, a.dim_out_);
  for (std::size_t n = 0; n < a.c_.size(); ++n) out.c_[n] = a.c_[n] - b.c_[n];
  return out;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, std::string candidate) {
  auto used = [&](const std::string& s) {
    for (const auto& t : taken)
      if (t == s) return true;
    return false;
  };
  while (used(candidate)) candidate += "'";
  return candidate;
}

// A ⊕ K·extra with the twist fixing the extra generator; the caller fills in
// the products that touch the new slot.
std::pair<std::vector<std::string>, Matrix> extend_frame(const HomAlgebra& a,
                                                         const std::string& extra) {
  std::vector<std::string> labels = a.labels();
  labels.push_back(fresh_label(labels, extra));
  std::size_t d = a.dim();
  Matrix alpha(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) alpha(i, j) = a.alpha()(i, j);
  alpha(d, d) = Rational(1);
  return {std::move(labels), std::move(alpha)};
}

}  // namespace

ExtensionResult central_extension(const HomAlgebra& a, const BilinearForm& theta) {
  std::size_t d = a.dim();
  if (theta.dim() != d) throw DimensionMismatch("central extension: form dimension");
  if (!theta.symmetric()) throw PreconditionFailed("central extension needs a symmetric form");

  auto [labels, alpha] = extend_frame(a, "w");
  std::size_t e = d + 1;
  std::vector<Rational> c(e * e * e);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) c[(i * e + j) * e + k] = a.structure(i, j, k);
      c[(i * e + j) * e + d] = theta.at(i, j);
    }
  HomAlgebra ext(std::move(labels), std::move(alpha), std::move(c));

  std::string detail;
  // Invariance: theta(alpha(x), alpha(y)) = theta(x, y) on basis pairs.
  for (std::size_t i = 0; i < d && detail.empty(); ++i)
    for (std::size_t j = i; j < d; ++j)
      if (theta.eval(a.alpha().col(i), a.alpha().col(j)) != theta.at(i, j)) {
        detail = "form is not twist-invariant at (" + a.label(i) + "," + a.label(j) + ")";
        break;
      }
  // Closedness: cyclic theta(x*y, alpha(z)) = 0 on basis triples.
  for (std::size_t i = 0; i < d && detail.empty(); ++i)
    for (std::size_t j = i; j < d && detail.empty(); ++j)
      for (std::size_t k = j; k < d; ++k) {
        Rational cyc = theta.eval(a.product_of_basis(i, j), a.alpha().col(k)) +
                       theta.eval(a.product_of_basis(j, k), a.alpha().col(i)) +
                       theta.eval(a.product_of_basis(k, i), a.alpha().col(j));
        if (!cyc.is_zero()) {
          detail = "form is not closed at (" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
          break;
        }
      }
  return {std::move(ext), detail.empty(), std::move(detail)};
}

ExtensionResult d_extension(const HomAlgebra& a, const Matrix& dmap) {
  std::size_t d = a.dim();
  if (dmap.rows() != d || dmap.cols() != d) throw DimensionMismatch("extension map shape");

  auto [labels, alpha] = extend_frame(a, "D");
  std::size_t e = d + 1;
  std::vector<Rational> c(e * e * e);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c[(i * e + j) * e + k] = a.structure(i, j, k);
    for (std::size_t k = 0; k < d; ++k) {
      c[(i * e + d) * e + k] = dmap(k, i);  // e_i * D = D(e_i)
      c[(d * e + i) * e + k] = dmap(k, i);
    }
  }
  HomAlgebra ext(std::move(labels), std::move(alpha), std::move(c));

  std::string detail;
  if (!(dmap * a.alpha() == a.alpha() * dmap)) {
    detail = "map does not commute with the twist";
  } else if (!(dmap * dmap).is_zero()) {
    detail = "map does not square to zero";
  } else {
    // Twisted anti-Leibniz rule with one power of the twist on the arguments.
    for (std::size_t i = 0; i < d && detail.empty(); ++i)
      for (std::size_t j = i; j < d; ++j) {
        Vec lhs = dmap.apply(a.product_of_basis(i, j));
        Vec rhs = a.product(a.twist(basis_vector(d, i)), dmap.col(j));
        rhs += a.product(a.twist(basis_vector(d, j)), dmap.col(i));
        if (lhs != Rational(-1) * rhs) {
          detail = "map is not a twisted antiderivation at (" + a.label(i) + "," + a.label(j) + ")";
          break;
        }
      }
  }
  return {std::move(ext), detail.empty(), std::move(detail)};
}

}  // namespace hjj
