#include "hjj/representation.hpp"

#include <utility>

#include "hjj/errors.hpp"

namespace hjj {

Representation::Representation(HomAlgebra algebra, std::vector<Matrix> rho, Matrix phi)
    : algebra_(std::move(algebra)), rho_(std::move(rho)), phi_(std::move(phi)) {
  if (rho_.size() != algebra_.dim())
    throw DimensionMismatch("representation needs one action matrix per basis element");
  if (phi_.rows() != phi_.cols()) throw DimensionMismatch("module twist must be square");
  for (const auto& m : rho_)
    if (m.rows() != phi_.rows() || m.cols() != phi_.cols())
      throw DimensionMismatch("action matrix shape does not match the module twist");
}

Matrix Representation::rho_of(const Vec& x) const {
  if (x.size() != algebra_.dim()) throw DimensionMismatch("rho_of: vector dimension");
  Matrix out(dim_v(), dim_v());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + x[i] * rho_[i];
  return out;
}

RepReport verify_representation(const Representation& r) {
  RepReport report;
  const HomAlgebra& a = r.algebra();
  std::size_t d = a.dim();

  for (std::size_t i = 0; i < d; ++i) {
    if (!(r.phi() * r.rho(i) == r.rho_of(a.alpha().col(i)) * r.phi())) {
      report.twist_compatible = false;
      report.twist_witness = i;
      break;
    }
  }

  // Both sides are symmetric in (x, y), so ordered pairs suffice.
  for (std::size_t i = 0; i < d && report.action_identity; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Matrix lhs = r.rho_of(a.product_of_basis(i, j)) * r.phi();
      Matrix rhs = r.rho_of(a.alpha().col(i)) * r.rho(j) + r.rho_of(a.alpha().col(j)) * r.rho(i);
      if (!(lhs == -rhs)) {
        report.action_identity = false;
        report.action_witness = {i, j};
        break;
      }
    }
  return report;
}

Representation adjoint_rep(const HomAlgebra& a, long s) {
  Matrix shift = a.alpha().pow(s);  // throws SingularTwist when s < 0 and alpha is singular
  std::vector<Matrix> rho;
  rho.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rho.push_back(a.left_mult_of(shift.col(i)));
  return Representation(a, std::move(rho), a.alpha());
}

Representation trivial_rep(const HomAlgebra& a) {
  std::vector<Matrix> rho(a.dim(), Matrix(1, 1));
  return Representation(a, std::move(rho), Matrix::identity(1));
}

Representation direct_sum_rep(const Representation& r1, const Representation& r2) {
  if (!(r1.algebra() == r2.algebra()))
    throw AlgebraMismatch("direct sum needs modules over the same algebra");
  std::size_t n1 = r1.dim_v(), n2 = r2.dim_v();
  auto block = [&](const Matrix& a, const Matrix& b) {
    Matrix m(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n2; ++j) m(n1 + i, n1 + j) = b(i, j);
    return m;
  };
  std::vector<Matrix> rho;
  rho.reserve(r1.algebra().dim());
  for (std::size_t i = 0; i < r1.algebra().dim(); ++i)
    rho.push_back(block(r1.rho(i), r2.rho(i)));
  return Representation(r1.algebra(), std::move(rho), block(r1.phi(), r2.phi()));
}

}  // namespace hjj
