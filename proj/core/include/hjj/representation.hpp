#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hjj/algebra.hpp"

namespace hjj {

// A module (V, rho, phi) over a twisted algebra: rho sends basis elements of
// A to endomorphisms of V and phi twists V. Validity is a separate report,
// not an invariant — representation-shaped data that fails the two module
// identities is still useful for diagnosis.
class Representation {
 public:
  Representation(HomAlgebra algebra, std::vector<Matrix> rho, Matrix phi);

  const HomAlgebra& algebra() const { return algebra_; }
  std::size_t dim_v() const { return phi_.rows(); }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  Matrix rho_of(const Vec& x) const;  // linear in x
  const Matrix& phi() const { return phi_; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.rho_ == b.rho_ && a.phi_ == b.phi_;
  }
  friend bool operator!=(const Representation& a, const Representation& b) { return !(a == b); }

 private:
  HomAlgebra algebra_;
  std::vector<Matrix> rho_;
  Matrix phi_;
};

struct RepReport {
  bool twist_compatible = true;   // phi rho(x) = rho(alpha(x)) phi
  bool action_identity = true;    // rho(x*y) phi = -rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)
  std::optional<std::size_t> twist_witness;                       // basis index
  std::optional<std::pair<std::size_t, std::size_t>> action_witness;  // basis pair

  bool all() const { return twist_compatible && action_identity; }
};

RepReport verify_representation(const Representation& r);

// A acting on itself by x . y = alpha^s(x) * y, twisted by alpha. Negative s
// requires an invertible twist (SingularTwist otherwise).
Representation adjoint_rep(const HomAlgebra& a, long s = 0);

// The one-dimensional module with zero action and identity twist.
Representation trivial_rep(const HomAlgebra& a);

// Block-diagonal sum of two modules over the same algebra.
Representation direct_sum_rep(const Representation& r1, const Representation& r2);

}  // namespace hjj
