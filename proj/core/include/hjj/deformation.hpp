#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hjj/cohomology.hpp"
#include "hjj/rota_baxter.hpp"

namespace hjj {

// A truncated product series mu_0 + mu_1 t + ... + mu_k t^k. The constant
// term is always the algebra's own product and every coefficient must be
// symmetric (InvalidSeries otherwise); coefficients beyond k read as zero.
class FormalProductSeries {
 public:
  FormalProductSeries(HomAlgebra algebra, std::vector<BilinearMap> coeffs);

  const HomAlgebra& algebra() const { return algebra_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<BilinearMap>& coeffs() const { return coeffs_; }
  // Coefficient i, with the zero map beyond the truncation order.
  BilinearMap coeff(std::size_t i) const;

 private:
  HomAlgebra algebra_;
  std::vector<BilinearMap> coeffs_;
};

// A truncated series of linear maps; used both for equivalences (first
// coefficient the identity) and for operator deformations (first coefficient
// the base operator). Which constraint applies is checked by the consumer.
struct FormalMapSeries {
  std::vector<Matrix> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  // Coefficient i, zero-shaped like the leading coefficient beyond the end.
  Matrix coeff(std::size_t i) const;
};

// One order of a power-series identity: the residual of the first failing
// basis tuple, in lexicographic order, when the order fails.
struct OrderCheck {
  std::size_t order = 0;
  bool ok = true;
  std::vector<std::size_t> witness;
  Vec residual;
};

// The first-order ("linear") deformation conditions for mu + t*psi: psi
// commutes with the twist, is symmetric, satisfies the twisted Jacobi
// identity by itself, and the mixed cyclic identity coupling it to the
// product. The mixed identity is cross-checked against the assembled
// degree-2 coboundary of the inverse-twisted self-action whenever psi is
// symmetric, which is why the twist must be invertible here.
struct LinearDeformationReport {
  bool twist_compatible = true;
  bool symmetric = true;
  bool self_jacobi = true;
  bool mixed_closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> twist_witness;
  std::optional<std::pair<std::size_t, std::size_t>> symmetry_witness;
  std::optional<std::array<std::size_t, 3>> self_witness;
  std::optional<std::array<std::size_t, 3>> mixed_witness;

  bool generates() const { return twist_compatible && symmetric && self_jacobi && mixed_closed; }
};

LinearDeformationReport linear_mult_deformation_check(const HomAlgebra& a, const BilinearMap& psi);

// Per-order residuals of the deformation equation
//   sum_i cyclic( mu_i(mu_{s-i}(x,y), alpha(z)) ) = 0,  0 <= s <= 2k.
// When order 1 passes and the twist is invertible, the first coefficient is
// independently confirmed closed in the inverse-twisted adjoint complex.
struct DeformationReport {
  std::vector<OrderCheck> orders;
  std::optional<std::size_t> first_failure;
  bool cocycle_checked = false;

  bool ok() const { return !first_failure.has_value(); }
};

DeformationReport formal_deformation_check(const FormalProductSeries& s);

// Per-order morphism identity for phi_t from the series `from` to the series
// `to` over the same algebra:
//   sum_i phi_i(from_{s-i}(x,y)) = sum_{i+j+l=s} to_j(phi_i(x), phi_l(y)).
// Orders run to max(k_phi + k_from, 2 k_phi + k_to), past which both sides
// are identically zero. phi_0 must be the identity (InvalidSeries); every
// coefficient must commute with the twist, reported as a flag. When order 1
// passes and the twist is invertible, from_1 - to_1 is confirmed to be the
// degree-1 delta-coboundary of phi_1 in the inverse-twisted adjoint complex.
struct EquivalenceReport {
  bool twist_compatible = true;
  std::optional<std::size_t> twist_witness;  // index of the first bad coefficient
  std::vector<OrderCheck> orders;
  std::optional<std::size_t> first_failure;
  bool cochain_bridge_checked = false;

  bool ok() const { return twist_compatible && !first_failure.has_value(); }
};

EquivalenceReport equivalence_check(const FormalProductSeries& from, const FormalProductSeries& to,
                                    const FormalMapSeries& phi);

// Sufficiency probe for rigidity: the degree-2 cohomology of the
// inverse-twisted adjoint action. A zero quotient means every formal
// deformation is equivalent to the trivial one; a nonzero quotient decides
// nothing. Requires an invertible twist.
struct RigidityReport {
  CohomologyReport h2;
  bool rigid_sufficient = false;
};

RigidityReport rigidity_probe(const HomAlgebra& a, std::size_t cap = kDefaultDegreeCap);

// Per-order residuals for a deformed operator T_t = T_0 + T_1 t + ...:
// every coefficient must intertwine the twists (reported with the first bad
// index), and for 0 <= s <= 2k
//   sum_i [ T_i(u) * T_{s-i}(v) - T_i(rho(T_{s-i}u)v + rho(T_{s-i}v)u) ] = 0.
// The base coefficient must be the operator itself (InvalidSeries) and the
// operator must verify (NotRotaBaxter). When order 1 passes, T_1 is
// confirmed to be a deformation generator's mixed-identity solution, i.e. a
// weight-0 derivation into the induced module.
struct RBDeformationReport {
  bool twist_compatible = true;
  std::optional<std::size_t> twist_witness;
  std::vector<OrderCheck> orders;
  std::optional<std::size_t> first_failure;
  bool derivation_bridge_checked = false;

  bool ok() const { return twist_compatible && !first_failure.has_value(); }
};

RBDeformationReport rb_formal_deformation_check(const RBOperator& op, const FormalMapSeries& ts);

// The product series mu_i(u,v) = rho(T_iu)v + rho(T_iv)u over the induced
// algebra; defined only for series accepted by rb_formal_deformation_check
// (InvalidSeries otherwise). The result passes formal_deformation_check.
FormalProductSeries induced_formal_deformation(const RBOperator& op, const FormalMapSeries& ts);

}  // namespace hjj
