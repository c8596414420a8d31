#include <doctest.h>

#include "hjj/errors.hpp"
#include "hjj/representation.hpp"
#include "support.hpp"

using namespace hjj;
using namespace testsupport;

TEST_CASE("adjoint and trivial modules of valid algebras verify") {
  for (const HomAlgebra& a : {alg2(), abel1(), jj5()}) {
    RepReport ad = verify_representation(adjoint_rep(a, 0));
    CHECK(ad.all());
    RepReport tr = verify_representation(trivial_rep(a));
    CHECK(tr.all());
  }
}

TEST_CASE("adjoint action is left multiplication twisted by the shift") {
  HomAlgebra a = alg2();
  Representation r0 = adjoint_rep(a, 0);
  CHECK(r0.dim_v() == 2);
  CHECK(r0.phi() == a.alpha());
  CHECK(r0.rho(0) == a.left_mult(0));

  Representation r1 = adjoint_rep(a, 1);
  CHECK(r1.rho(0) == a.left_mult_of(a.alpha().col(0)));
  CHECK(verify_representation(r1).all());

  // negative shifts need the inverse twist
  Representation rm = adjoint_rep(a, -1);
  CHECK(verify_representation(rm).all());
  CHECK_THROWS_AS(adjoint_rep(singular1(), -1), SingularTwist);
}

TEST_CASE("rho_of is linear in the algebra argument") {
  HomAlgebra a = jj5();
  Representation r = adjoint_rep(a, 0);
  Vec x(5, Rational(0));
  x[0] = Rational(2);
  x[1] = Rational(-3);
  CHECK(r.rho_of(x) == Rational(2) * Matrix(r.rho(0)) + Rational(-3) * Matrix(r.rho(1)));
}

TEST_CASE("the sign of the action identity matters on the five-dimensional fixture") {
  HomAlgebra a = jj5();
  Representation good = adjoint_rep(a, 0);
  RepReport ok = verify_representation(good);
  CHECK(ok.all());

  // negating the action breaks the defining identity: with L1 = rho(e1),
  // rho(e1*e1)phi(e3) = L2(e3) = 2e5 while -2*L1(L1(e3)) = -2*L1(e4) = 2e5
  // only with the minus sign present; flipping rho turns the right side
  // around and (e1,e1) becomes the first failing pair.
  std::vector<Matrix> flipped;
  for (std::size_t i = 0; i < a.dim(); ++i) flipped.push_back(-Matrix(good.rho(i)));
  Representation bad(a, flipped, good.phi());
  RepReport rr = verify_representation(bad);
  CHECK(rr.twist_compatible);
  CHECK(!rr.action_identity);
  REQUIRE(rr.action_witness);
  CHECK(*rr.action_witness == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("trivial module is one dimensional with zero action") {
  HomAlgebra a = alg3();
  Representation t = trivial_rep(a);
  CHECK(t.dim_v() == 1);
  CHECK(t.phi() == Matrix::identity(1));
  for (std::size_t i = 0; i < a.dim(); ++i) CHECK(t.rho(i).is_zero());
  // zero action satisfies both module identities even over a broken algebra
  CHECK(verify_representation(t).all());
}

TEST_CASE("direct sums verify componentwise") {
  HomAlgebra a = alg2();
  Representation s = direct_sum_rep(adjoint_rep(a, 0), trivial_rep(a));
  CHECK(s.dim_v() == 3);
  CHECK(verify_representation(s).all());
  CHECK(s.rho(0)(1, 0) == Rational(1));  // adjoint block: e1*e1 = e2
  CHECK(s.rho(0)(2, 2) == Rational(0));  // trivial block stays zero
}

TEST_CASE("mismatched shapes are rejected") {
  HomAlgebra a = alg2();
  std::vector<Matrix> rho(2, Matrix(3, 3));
  CHECK_THROWS_AS(Representation(a, rho, Matrix::identity(2)), DimensionMismatch);
  std::vector<Matrix> one(1, Matrix(2, 2));
  CHECK_THROWS_AS(Representation(a, one, Matrix::identity(2)), DimensionMismatch);
}

TEST_CASE("representation equality compares action, twist, and base algebra") {
  Representation r1 = adjoint_rep(alg2(), 0);
  Representation r2 = adjoint_rep(alg2(), 0);
  CHECK(r1 == r2);
  // On alg2 the shift is invisible: left multiplication by e2 is zero and the
  // twist moves e1 only by a multiple of e2, so the shifted action coincides.
  CHECK(r1 == adjoint_rep(alg2(), 1));
  // On alg3 the twist rescales e2, which left-multiplies nontrivially.
  CHECK(adjoint_rep(alg3(), 0) != adjoint_rep(alg3(), 1));
}
