#pragma once

#include <optional>
#include <utility>

#include "hjj/cohomology.hpp"
#include "hjj/representation.hpp"

namespace hjj {

// A linear operator T : V -> A relative to a module (V, rho, phi), stored as
// a dim(A) x dim(V) matrix over the module's basis.
class RBOperator {
 public:
  RBOperator(Representation rep, Matrix t);

  const Representation& rep() const { return rep_; }
  const HomAlgebra& algebra() const { return rep_.algebra(); }
  const Matrix& t() const { return t_; }
  Vec apply(const Vec& v) const { return t_.apply(v); }

 private:
  Representation rep_;
  Matrix t_;
};

struct RBReport {
  bool twist_compatible = true;  // T phi = alpha T
  bool identity = true;          // T(u)*T(v) = T(rho(Tu)v + rho(Tv)u)
  std::optional<std::size_t> twist_witness;                           // V basis index
  std::optional<std::pair<std::size_t, std::size_t>> identity_witness;  // V basis pair

  bool all() const { return twist_compatible && identity; }
};

RBReport verify_rb(const RBOperator& op);

// The product u . v = rho(Tu)v + rho(Tv)u makes V an algebra twisted by phi;
// both constructions require the operator identities (NotRotaBaxter).
HomAlgebra induced_algebra(const RBOperator& op);

// A as a module over the induced algebra: the action of u sends x to
// T(u)*x - T(rho(x)u), twisted by alpha.
Representation induced_rep(const RBOperator& op);

// Cohomology of the operator = cohomology of the induced module.
CohomologyReport rb_cohomology(const RBOperator& op, std::size_t n,
                               std::size_t cap = kDefaultDegreeCap);

// Direct evaluation of the degree-1 coboundary of f : V -> A in the induced
// complex at the basis pair (i, j); the tests pin this against the assembled
// operator.
Vec rb_cocycle1_residual(const RBOperator& op, const Matrix& f, std::size_t i, std::size_t j);

// A perturbation direction Z with the same shape as T. The three conditions
// say T + tZ stays in the operator variety to first order for every t:
// Z commutes with the twists, Z satisfies the operator identity by itself,
// and the mixed terms cancel. Over a valid operator the mixed condition is
// the same as Z being a weight-0 derivation from the induced algebra into
// the induced module, which is reported alongside for cross-checking.
struct GeneratorReport {
  bool twist_compatible = false;
  bool self_identity = false;
  bool mixed_identity = false;
  bool derivation_equivalent = false;

  bool is_generator() const { return twist_compatible && self_identity && mixed_identity; }
};

GeneratorReport linear_deformation_generator_check(const RBOperator& op, const Matrix& z);

// The induced first-order term psi(u, v) = rho(Zu)v + rho(Zv)u on the
// induced algebra (NotAGenerator when the report above fails).
BilinearMap induced_linear_deformation(const RBOperator& op, const Matrix& z);

// An operator N : A -> A is Nijenhuis when N(u)*N(v) = N(u.v) for the
// deformed product u.v = N(u)*v + u*N(v) - N(u*v). The deformed product is
// returned; when the twist is invertible it is also recomputed through the
// assembled degree-1 coboundary as a consistency route.
struct NijenhuisReport {
  bool twist_compatible = false;
  bool identity = true;
  std::optional<std::pair<std::size_t, std::size_t>> identity_witness;
  BilinearMap deformed;
  bool delta_route_checked = false;

  bool is_nijenhuis() const { return twist_compatible && identity; }
};

NijenhuisReport nijenhuis_check(const HomAlgebra& a, const Matrix& n);

// A pair of linear maps relating two operators: phi_a on the algebras,
// phi_v on the modules.
struct RBMorphism {
  Matrix phi_a, phi_v;
};

struct MorphismReport {
  bool product_preserved = true;
  bool algebra_twist = true;      // phi_a alpha = alpha phi_a
  bool module_twist = true;       // phi_v phi = phi phi_v
  bool intertwines_operator = true;  // T_to phi_v = phi_a T_from
  bool action_compatible = true;  // phi_v rho(x) = rho(phi_a x) phi_v

  // Filled only when both maps are invertible: whether the inverse pair is a
  // morphism in the opposite direction, and whether phi_v carries the product
  // induced by the source operator to the one induced by the target.
  std::optional<bool> inverse_pair;
  std::optional<bool> induced_algebra_morphism;

  bool all() const {
    return product_preserved && algebra_twist && module_twist && intertwines_operator &&
           action_compatible;
  }
};

// Both operators must live over one and the same representation
// (RepresentationMismatch otherwise).
MorphismReport rb_morphism_check(const RBOperator& from, const RBOperator& to,
                                 const RBMorphism& m);

// Transport of a valid operator along an invertible compatible pair:
// T' = phi_a^{-1} T phi_v over the same module. The preconditions (both maps
// invertible, phi_a an algebra automorphism commuting with the twist, phi_v
// compatible with the module twist and action) raise PreconditionFailed.
RBOperator conjugate_rb(const RBOperator& op, const RBMorphism& m);

}  // namespace hjj
