#pragma once

#include <optional>

#include "hjj/representation.hpp"

namespace hjj {

// A twisted (anti)derivation valued in a module: a linear D : A -> V with
// D(alpha(x)) = phi(D(x)) and
//   D(x*y) = +/- [ rho(alpha^k(x)) D(y) + rho(alpha^k(y)) D(x) ],
// sign + for derivations, - for antiderivations. Algebra-valued operators
// are the special case rep = adjoint action with shift 0.
struct DerivationQuery {
  HomAlgebra algebra;
  std::optional<Representation> rep;  // default: adjoint with shift 0
  long weight = 0;                    // the power k of the twist
  bool anti = false;
};

// Solves the twist-compatibility and Leibniz constraints exactly; the result
// is a canonical subspace of Hom(A, V) in row-major coordinates
// (index = out * dim(A) + in). Negative weight needs invertible twists.
Subspace derivation_space(const DerivationQuery& q);

// Residual check of the same two conditions for a single candidate matrix.
bool satisfies_derivation(const DerivationQuery& q, const Matrix& d);

// span{ v -> rho(alpha^k(v)) u : phi(u) = u }, always antiderivations of
// weight k+1 over a valid algebra/module pair.
Subspace inner_antiderivation_space(const Representation& r, long weight);

// How the commutator and anticommutator of two algebra-valued twisted
// (anti)derivations sit inside the weight-(k1+k2) spaces, together with the
// two pair conditions that decide membership:
//   cross_vanishes:   X(u, v) = 0 for all basis pairs, where
//     X(u,v) = (a^k2 d1)(u) * (a^k1 d2)(v) + (a^k1 d2)(u) * (a^k2 d1)(v);
//   anticommutator_matches_cross: {d1,d2}(u*v) = X(u,v) for all basis pairs.
struct BracketReport {
  Matrix commutator, anticommutator;
  bool commutator_is_derivation = false;
  bool commutator_is_antiderivation = false;
  bool anticommutator_is_derivation = false;
  bool anticommutator_is_antiderivation = false;
  bool cross_vanishes = false;
  bool anticommutator_matches_cross = false;
};

// Both inputs must actually lie in their declared spaces (NotAMember).
BracketReport bracket_classify(const HomAlgebra& a, const Matrix& d1, long k1, bool anti1,
                               const Matrix& d2, long k2, bool anti2);

}  // namespace hjj
