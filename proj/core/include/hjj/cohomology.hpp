#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hjj/representation.hpp"

namespace hjj {

// Cochain degrees are capped to keep the d^(n+1)-sized assemblies honest;
// the HJJ_MAX_DEGREE environment variable overrides the default.
inline constexpr std::size_t kDefaultDegreeCap = 4;
std::size_t degree_cap_from_env();

// Flat coordinates for f : A^(tensor n) -> V. The component f(e_args)[out]
// lives at out*d^n + sum_m args[m]*d^m (first argument least significant).
std::size_t cochain_space_dim(std::size_t dim_a, std::size_t dim_v, std::size_t n);
std::size_t cochain_index(std::size_t out, const std::vector<std::size_t>& args, std::size_t dim_a);

// A concrete n-cochain; eval expands multilinearly, so it serves as an
// independent oracle for the assembled operators.
struct Cochain {
  std::size_t degree, dim_a, dim_v;
  Vec coords;

  Vec eval(const std::vector<Vec>& args) const;
};

// C^n: cochains with phi(f(x_1..x_n)) = f(alpha x_1, .., alpha x_n); at
// degree 0 this is the phi-fixed part of V.
Subspace hom_cochain_space(const Representation& r, std::size_t n,
                           std::size_t cap = kDefaultDegreeCap);

// A^n: equivariant cochains that are alpha-skew in every argument pair,
//   f(.., x_i, .., alpha(x_j), ..) = -f(.., x_j, .., alpha(x_i), ..).
// Degrees 0 and 1 have no pairs, so A^n = C^n there.
Subspace alpha_skew_subspace(const Representation& r, std::size_t n,
                             std::size_t cap = kDefaultDegreeCap);

// Equivariant cochains symmetric under every argument transposition.
Subspace symmetric_subspace(const Representation& r, std::size_t n,
                            std::size_t cap = kDefaultDegreeCap);

// The two coboundary maps on full coordinate space (no equivariance assumed),
// as matrices from degree-n coordinates to degree-(n+1) coordinates:
//   (d^n f)(x_1..x_{n+1}) = sum_i rho(alpha^n(x_i)) f(..x_i hat..)
//                          + sum_{i<j} f(x_i*x_j, alpha(others))
// and delta^n with a minus sign on the product sum. They agree at degree 0.
Matrix coboundary_d_full(const Representation& r, std::size_t n);
Matrix coboundary_delta_full(const Representation& r, std::size_t n);

// d^n restricted to C^n: columns are the full degree-(n+1) coordinates of the
// images of the canonical C^n basis. When the algebra and module identities
// hold, each image is checked to land back in C^(n+1); a miss means the
// operator assembly is inconsistent and raises ZigzagViolation.
Matrix coboundary_d(const Representation& r, std::size_t n,
                    std::size_t cap = kDefaultDegreeCap);

// delta^n restricted to A^n, columns over the canonical A^n basis. On
// verified inputs each image is checked to be equivariant and to be killed
// by d^(n+1) (the zigzag identity d∘delta = 0), raising ZigzagViolation
// otherwise.
Matrix coboundary_delta(const Representation& r, std::size_t n,
                        std::size_t cap = kDefaultDegreeCap);

struct CohomologyReport {
  std::size_t degree = 0;
  bool inputs_verified = false;  // algebra and module identities both hold
  std::size_t dim_cochain = 0;   // dim C^n
  std::size_t dim_skew = 0;      // dim A^n
  Subspace cocycles;             // Z^n = C^n intersected with ker d^n
  Subspace coboundaries;         // B^n = delta^(n-1) A^(n-1), zero at degree 0
  std::optional<std::size_t> dim_h;
  std::vector<Vec> representatives;  // canonical coset representatives
  std::vector<std::string> warnings;

  std::size_t dim_z() const { return cocycles.dim(); }
  std::size_t dim_b() const { return coboundaries.dim(); }
};

// The degree-n cohomology of the zigzag pair (delta into degree n, d out of
// it). On verified inputs the composite d∘delta vanishing and the
// equivariance of both maps are asserted (ZigzagViolation on a miss); on
// unverified inputs everything is still computed, with a warning, and when
// the coboundaries fail to be cocycles the quotient is left unset.
CohomologyReport cohomology(const Representation& r, std::size_t n,
                            std::size_t cap = kDefaultDegreeCap);

CohomologyReport adjoint_cohomology(const HomAlgebra& a, long shift, std::size_t n,
                                    std::size_t cap = kDefaultDegreeCap);
CohomologyReport trivial_cohomology(const HomAlgebra& a, std::size_t n,
                                    std::size_t cap = kDefaultDegreeCap);

}  // namespace hjj
