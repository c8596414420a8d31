#include "hjj/deformation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hjj/errors.hpp"

namespace hjj {

namespace {

// Flattened column-major coordinates of a linear map, matching the degree-1
// cochain layout (out*dim_in + in).
Vec flatten_map(const Matrix& m) {
  Vec out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = m(r, c);
  return out;
}

}  // namespace

FormalProductSeries::FormalProductSeries(HomAlgebra algebra, std::vector<BilinearMap> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidSeries("a product series needs at least its constant term");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].dim_in() != algebra_.dim() || coeffs_[i].dim_out() != algebra_.dim())
      throw DimensionMismatch("series coefficient " + std::to_string(i) +
                              " does not match the algebra dimension");
    if (!coeffs_[i].symmetric())
      throw InvalidSeries("series coefficient " + std::to_string(i) + " is not symmetric");
  }
  if (coeffs_[0] != BilinearMap::product_of(algebra_))
    throw InvalidSeries("the constant term must be the algebra's own product");
}

BilinearMap FormalProductSeries::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return BilinearMap(algebra_.dim(), algebra_.dim());
}

Matrix FormalMapSeries::coeff(std::size_t i) const {
  if (i < coeffs.size()) return coeffs[i];
  if (coeffs.empty()) return Matrix();
  return Matrix(coeffs.front().rows(), coeffs.front().cols());
}

LinearDeformationReport linear_mult_deformation_check(const HomAlgebra& a,
                                                      const BilinearMap& psi) {
  if (psi.dim_in() != a.dim() || psi.dim_out() != a.dim())
    throw DimensionMismatch("deformation direction does not match the algebra dimension");
  // The closedness cross-check below runs in the inverse-twisted adjoint
  // complex, so fail early when there is no inverse.
  Representation back = adjoint_rep(a, -1);

  LinearDeformationReport report;
  std::size_t d = a.dim();

  for (std::size_t i = 0; i < d && report.twist_compatible; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (a.twist(psi.eval_basis(i, j)) != psi.eval(a.alpha().col(i), a.alpha().col(j))) {
        report.twist_compatible = false;
        report.twist_witness = {i, j};
        break;
      }

  for (std::size_t i = 0; i < d && report.symmetric; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (psi.eval_basis(i, j) != psi.eval_basis(j, i)) {
        report.symmetric = false;
        report.symmetry_witness = {i, j};
        break;
      }

  // Both cubic conditions on every basis triple; the flags keep the first
  // lexicographic witness each.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec self = psi.eval(psi.eval_basis(i, j), a.alpha().col(k));
        self += psi.eval(psi.eval_basis(j, k), a.alpha().col(i));
        self += psi.eval(psi.eval_basis(k, i), a.alpha().col(j));
        if (!is_zero(self) && report.self_jacobi) {
          report.self_jacobi = false;
          report.self_witness = {i, j, k};
        }

        Vec mixed = a.product(psi.eval_basis(i, j), a.alpha().col(k));
        mixed += a.product(psi.eval_basis(j, k), a.alpha().col(i));
        mixed += a.product(psi.eval_basis(k, i), a.alpha().col(j));
        mixed += psi.eval(a.product_of_basis(i, j), a.alpha().col(k));
        mixed += psi.eval(a.product_of_basis(j, k), a.alpha().col(i));
        mixed += psi.eval(a.product_of_basis(k, i), a.alpha().col(j));
        if (!is_zero(mixed) && report.mixed_closed) {
          report.mixed_closed = false;
          report.mixed_witness = {i, j, k};
        }
      }

  // For symmetric directions the mixed cyclic identity is the same equation
  // as closedness under the assembled degree-2 coboundary; disagreement
  // would mean one of the two assemblies is wrong.
  if (report.symmetric) {
    bool closed = is_zero(coboundary_d_full(back, 2).apply(psi.cochain_coords()));
    if (closed != report.mixed_closed)
      throw Error("internal: mixed cyclic identity disagrees with the assembled coboundary");
  }
  return report;
}

DeformationReport formal_deformation_check(const FormalProductSeries& s) {
  const HomAlgebra& a = s.algebra();
  std::size_t d = a.dim(), k = s.order();

  DeformationReport report;
  for (std::size_t order = 0; order <= 2 * k; ++order) {
    OrderCheck check;
    check.order = order;
    // Every coefficient is symmetric and the cyclic sum symmetrizes the rest,
    // so ordered triples are enough.
    for (std::size_t i = 0; i < d && check.ok; ++i)
      for (std::size_t j = i; j < d && check.ok; ++j)
        for (std::size_t l = j; l < d && check.ok; ++l) {
          Vec residual(d);
          for (std::size_t m = 0; m <= order; ++m) {
            const BilinearMap outer = s.coeff(m);
            const BilinearMap inner = s.coeff(order - m);
            residual += outer.eval(inner.eval_basis(i, j), a.alpha().col(l));
            residual += outer.eval(inner.eval_basis(j, l), a.alpha().col(i));
            residual += outer.eval(inner.eval_basis(l, i), a.alpha().col(j));
          }
          if (!is_zero(residual)) {
            check.ok = false;
            check.witness = {i, j, l};
            check.residual = std::move(residual);
          }
        }
    if (!check.ok && !report.first_failure) report.first_failure = order;
    report.orders.push_back(std::move(check));
  }

  // The order-1 equation is closedness of the first coefficient in the
  // inverse-twisted adjoint complex; confirm the two routes agree whenever
  // that complex exists.
  if (k >= 1) {
    auto inverse = a.alpha().try_inverse();
    if (inverse) {
      bool closed =
          is_zero(coboundary_d_full(adjoint_rep(a, -1), 2).apply(s.coeff(1).cochain_coords()));
      if (closed != report.orders[1].ok)
        throw Error("internal: order-1 residuals disagree with the assembled coboundary");
      report.cocycle_checked = true;
    }
  }
  return report;
}

EquivalenceReport equivalence_check(const FormalProductSeries& from, const FormalProductSeries& to,
                                    const FormalMapSeries& phi) {
  if (from.algebra() != to.algebra())
    throw AlgebraMismatch("equivalence relates deformations of one algebra");
  const HomAlgebra& a = from.algebra();
  std::size_t d = a.dim();

  if (phi.coeffs.empty()) throw InvalidSeries("an equivalence needs at least its constant term");
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
    if (phi.coeffs[i].rows() != d || phi.coeffs[i].cols() != d)
      throw DimensionMismatch("equivalence coefficient " + std::to_string(i) +
                              " does not match the algebra dimension");
  if (phi.coeffs.front() != Matrix::identity(d))
    throw InvalidSeries("the constant term of an equivalence must be the identity");

  EquivalenceReport report;
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
    if (!(phi.coeffs[i] * a.alpha() == a.alpha() * phi.coeffs[i])) {
      report.twist_compatible = false;
      report.twist_witness = i;
      break;
    }

  std::size_t kp = phi.order();
  std::size_t top = std::max(kp + from.order(), 2 * kp + to.order());
  for (std::size_t order = 0; order <= top; ++order) {
    OrderCheck check;
    check.order = order;
    // Symmetric coefficients on both sides make the residual symmetric.
    for (std::size_t u = 0; u < d && check.ok; ++u)
      for (std::size_t v = u; v < d && check.ok; ++v) {
        Vec residual(d);
        for (std::size_t i = 0; i <= order; ++i)
          residual += phi.coeff(i).apply(from.coeff(order - i).eval_basis(u, v));
        for (std::size_t i = 0; i <= order; ++i)
          for (std::size_t j = 0; i + j <= order; ++j) {
            const BilinearMap target = to.coeff(j);
            residual = residual - target.eval(phi.coeff(i).col(u), phi.coeff(order - i - j).col(v));
          }
        if (!is_zero(residual)) {
          check.ok = false;
          check.witness = {u, v};
          check.residual = std::move(residual);
        }
      }
    if (!check.ok && !report.first_failure) report.first_failure = order;
    report.orders.push_back(std::move(check));
  }

  // Order 1 rearranges to: the difference of first coefficients is the
  // delta-coboundary of phi_1 in the inverse-twisted adjoint complex.
  if (top >= 1 && a.alpha().try_inverse()) {
    Vec difference = (from.coeff(1) - to.coeff(1)).cochain_coords();
    Vec image = coboundary_delta_full(adjoint_rep(a, -1), 1).apply(flatten_map(phi.coeff(1)));
    if ((difference == image) != report.orders[1].ok)
      throw Error("internal: order-1 residuals disagree with the coboundary identity");
    report.cochain_bridge_checked = true;
  }
  return report;
}

RigidityReport rigidity_probe(const HomAlgebra& a, std::size_t cap) {
  if (!a.alpha().try_inverse())
    throw SingularTwist("the rigidity probe needs an invertible twist");
  RigidityReport report{adjoint_cohomology(a, -1, 2, cap), false};
  report.rigid_sufficient = report.h2.dim_h.has_value() && *report.h2.dim_h == 0;
  return report;
}

RBDeformationReport rb_formal_deformation_check(const RBOperator& op, const FormalMapSeries& ts) {
  if (!verify_rb(op).all())
    throw NotRotaBaxter("operator deformations start from a verified operator");
  const Representation& r = op.rep();
  const HomAlgebra& a = r.algebra();
  std::size_t dv = r.dim_v();

  if (ts.coeffs.empty()) throw InvalidSeries("an operator series needs at least its base term");
  for (std::size_t i = 0; i < ts.coeffs.size(); ++i)
    if (ts.coeffs[i].rows() != a.dim() || ts.coeffs[i].cols() != dv)
      throw DimensionMismatch("operator coefficient " + std::to_string(i) +
                              " does not have the operator's shape");
  if (ts.coeffs.front() != op.t())
    throw InvalidSeries("the base term of an operator series must be the operator itself");

  RBDeformationReport report;
  for (std::size_t i = 0; i < ts.coeffs.size(); ++i)
    if (!(ts.coeffs[i] * r.phi() == a.alpha() * ts.coeffs[i])) {
      report.twist_compatible = false;
      report.twist_witness = i;
      break;
    }

  std::size_t k = ts.order();
  for (std::size_t order = 0; order <= 2 * k; ++order) {
    OrderCheck check;
    check.order = order;
    for (std::size_t u = 0; u < dv && check.ok; ++u)
      for (std::size_t v = u; v < dv && check.ok; ++v) {
        Vec residual(a.dim());
        for (std::size_t i = 0; i <= order; ++i) {
          Matrix ti = ts.coeff(i), tj = ts.coeff(order - i);
          residual += a.product(ti.col(u), tj.col(v));
          Vec action = r.rho_of(tj.col(u)).col(v) + r.rho_of(tj.col(v)).col(u);
          residual = residual - ti.apply(action);
        }
        if (!is_zero(residual)) {
          check.ok = false;
          check.witness = {u, v};
          check.residual = std::move(residual);
        }
      }
    if (!check.ok && !report.first_failure) report.first_failure = order;
    report.orders.push_back(std::move(check));
  }

  // The order-1 equation is the mixed identity of the generator check for
  // the first coefficient; the generator report also carries its reading as
  // a weight-0 derivation into the induced module.
  if (k >= 1) {
    GeneratorReport bridge = linear_deformation_generator_check(op, ts.coeffs[1]);
    if (bridge.mixed_identity != report.orders[1].ok)
      throw Error("internal: order-1 residuals disagree with the generator check");
    report.derivation_bridge_checked = true;
  }
  return report;
}

FormalProductSeries induced_formal_deformation(const RBOperator& op, const FormalMapSeries& ts) {
  RBDeformationReport gate = rb_formal_deformation_check(op, ts);
  if (!gate.ok())
    throw InvalidSeries("only an accepted operator series induces a product series");

  const Representation& r = op.rep();
  std::size_t dv = r.dim_v();
  std::vector<BilinearMap> coeffs;
  coeffs.reserve(ts.coeffs.size());
  for (const Matrix& t : ts.coeffs) {
    BilinearMap mu(dv, dv);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t v = 0; v < dv; ++v) {
        Vec value = r.rho_of(t.col(u)).col(v) + r.rho_of(t.col(v)).col(u);
        for (std::size_t out = 0; out < dv; ++out) mu.at(u, v, out) = value[out];
      }
    coeffs.push_back(std::move(mu));
  }
  return FormalProductSeries(induced_algebra(op), std::move(coeffs));
}

}  // namespace hjj
