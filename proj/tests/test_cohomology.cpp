#include <doctest.h>

#include <cstdlib>

#include "hjj/cohomology.hpp"
#include "hjj/errors.hpp"
#include "support.hpp"

using namespace hjj;
using namespace testsupport;

namespace {

Vec flat_of(const Matrix& m) {
  Vec v(m.rows() * m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

}  // namespace

TEST_CASE("flat cochain indexing puts the first argument lowest") {
  CHECK(cochain_space_dim(2, 3, 0) == 3);
  CHECK(cochain_space_dim(2, 3, 2) == 12);
  CHECK(cochain_index(0, {}, 2) == 0);
  CHECK(cochain_index(1, {0}, 2) == 2);       // out*da^1 + t1
  CHECK(cochain_index(0, {1, 1}, 2) == 3);    // t1 + t2*da
  CHECK(cochain_index(1, {0, 1}, 2) == 6);    // out*da^2 + t2*da
}

TEST_CASE("equivariant cochains of the two-dimensional fixture") {
  HomAlgebra a = alg2();
  Representation ad = adjoint_rep(a, 0);
  Subspace c1 = hom_cochain_space(ad, 1);
  // f(e1) = a e1 + c e2, f(e2) = a e2: two free parameters
  REQUIRE(c1.dim() == 2);
  CHECK(c1.contains(Vec{Rational(1), Rational(0), Rational(0), Rational(1)}));
  CHECK(c1.contains(Vec{Rational(0), Rational(0), Rational(1), Rational(0)}));

  CHECK(hom_cochain_space(ad, 0) == hom_annihilator(a));
}

TEST_CASE("alpha-skew and symmetric degree-2 cochains, scalar coefficients") {
  HomAlgebra a = alg2();
  Representation tr = trivial_rep(a);
  Subspace skew = alpha_skew_subspace(tr, 2);
  REQUIRE(skew.dim() == 1);
  // m(e1,e1) = m(e2,e1) = -m(e1,e2), m(e2,e2) = 0
  CHECK(skew.contains(Vec{Rational(1), Rational(1), Rational(-1), Rational(0)}));

  Subspace sym = symmetric_subspace(tr, 2);
  REQUIRE(sym.dim() == 1);
  CHECK(sym.contains(Vec{Rational(1), Rational(0), Rational(0), Rational(0)}));

  Representation tr1 = trivial_rep(abel1());
  CHECK(alpha_skew_subspace(tr1, 2).dim() == 0);
  CHECK(symmetric_subspace(tr1, 2).dim() == 1);
}

TEST_CASE("assembled degree-1 operators match the defining formulas") {
  HomAlgebra a = alg2();
  Representation ad = adjoint_rep(a, 0);
  Vec id_flat = flat_of(Matrix::identity(2));

  // d f(x,y) = alpha(x)*f(y) + alpha(y)*f(x) + f(x*y) for the adjoint;
  // with f = Id the only nonzero value is at (e1,e1): 2 alpha(e1)*e1 + e2 = 3e2
  Vec d_img = coboundary_d_full(ad, 1).apply(id_flat);
  Vec d_expected(8, Rational(0));
  d_expected[4] = Rational(3);
  CHECK(d_img == d_expected);

  // delta flips the sign of the product slot: 2 alpha(e1)*e1 - e2 = e2
  Vec delta_img = coboundary_delta_full(ad, 1).apply(id_flat);
  Vec delta_expected(8, Rational(0));
  delta_expected[4] = Rational(1);
  CHECK(delta_img == delta_expected);
}

TEST_CASE("restricted operators act on the canonical bases") {
  HomAlgebra a = alg2();
  Representation ad = adjoint_rep(a, 0);
  Matrix d1 = coboundary_d(ad, 1);
  CHECK(d1.cols() == hom_cochain_space(ad, 1).dim());
  CHECK(d1.rows() == cochain_space_dim(2, 2, 2));
  Matrix delta0 = coboundary_delta(ad, 0);
  CHECK(delta0.cols() == hom_cochain_space(ad, 0).dim());
}

TEST_CASE("the zigzag composite vanishes on full coordinates") {
  for (const HomAlgebra& a : {alg2(), abel1()}) {
    for (const Representation& r : {adjoint_rep(a, 0), trivial_rep(a)}) {
      for (std::size_t n = 1; n <= 2; ++n) {
        Matrix composite = coboundary_d_full(r, n) * coboundary_delta_full(r, n - 1);
        CHECK(composite.is_zero());
      }
    }
  }
}

TEST_CASE("degree-1 adjoint cohomology of the two-dimensional fixture") {
  CohomologyReport rep = adjoint_cohomology(alg2(), 0, 1);
  CHECK(rep.inputs_verified);
  CHECK(rep.warnings.empty());
  CHECK(rep.dim_cochain == 2);
  CHECK(rep.dim_z() == 1);
  CHECK(rep.dim_b() == 0);
  REQUIRE(rep.dim_h);
  CHECK(*rep.dim_h == 1);
  REQUIRE(rep.representatives.size() == 1);
  CHECK(rep.representatives[0] == Vec{Rational(0), Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("degree-1 trivial cohomology of the two-dimensional fixture") {
  CohomologyReport rep = trivial_cohomology(alg2(), 1);
  CHECK(rep.dim_cochain == 1);
  CHECK(rep.dim_z() == 1);
  CHECK(rep.dim_b() == 0);
  REQUIRE(rep.dim_h);
  CHECK(*rep.dim_h == 1);
  REQUIRE(rep.representatives.size() == 1);
  CHECK(rep.representatives[0] == Vec{Rational(1), Rational(0)});
}

TEST_CASE("degree zero recovers the annihilator for adjoints") {
  for (const HomAlgebra& a : {alg2(), alg3(), jj5()}) {
    CohomologyReport rep = adjoint_cohomology(a, 0, 0);
    CHECK(rep.cocycles == hom_annihilator(a));
    CHECK(rep.dim_b() == 0);
    REQUIRE(rep.dim_h);
    CHECK(*rep.dim_h == hom_annihilator(a).dim());
  }
}

TEST_CASE("the broken fixture yields formal sizes with a warning") {
  CohomologyReport rep = adjoint_cohomology(alg3(), 0, 1);
  CHECK(!rep.inputs_verified);
  REQUIRE(!rep.warnings.empty());
  CHECK(rep.dim_z() == 0);
  CHECK(rep.dim_b() == 0);
  REQUIRE(rep.dim_h);
  CHECK(*rep.dim_h == 0);
}

TEST_CASE("abelian fixture has everything in degree one") {
  CohomologyReport rep = adjoint_cohomology(abel1(), 0, 1);
  CHECK(rep.dim_cochain == 1);
  CHECK(rep.dim_z() == 1);
  CHECK(rep.dim_b() == 0);
  REQUIRE(rep.dim_h);
  CHECK(*rep.dim_h == 1);
}

TEST_CASE("shifting a regular adjoint does not move degree-1 cohomology") {
  CohomologyReport base = adjoint_cohomology(alg2(), 0, 1);
  CohomologyReport shifted = adjoint_cohomology(alg2(), -1, 1);
  CHECK(shifted.cocycles == base.cocycles);
  CHECK(shifted.coboundaries == base.coboundaries);
  CHECK(shifted.dim_h == base.dim_h);
}

TEST_CASE("degree-2 quotients are consistent") {
  Representation ad = adjoint_rep(alg2(), -1);
  CohomologyReport rep = cohomology(ad, 2);
  CHECK(rep.dim_cochain == 3);
  CHECK(rep.dim_z() == 2);
  CHECK(rep.dim_b() == 1);
  REQUIRE(rep.dim_h);
  CHECK(*rep.dim_h == 1);
  CHECK(rep.cocycles.contains(rep.coboundaries));
  // each representative is a cocycle outside the coboundaries
  for (const Vec& v : rep.representatives) {
    CHECK(rep.cocycles.contains(v));
    CHECK(!rep.coboundaries.contains(v));
  }
}

TEST_CASE("the degree cap is enforced and adjustable") {
  Representation tr = trivial_rep(alg2());
  CHECK_THROWS_AS(cohomology(tr, 5), DegreeCapExceeded);
  CHECK_THROWS_AS(hom_cochain_space(tr, 5), DegreeCapExceeded);
  CHECK_THROWS_AS(alpha_skew_subspace(tr, 5), DegreeCapExceeded);
  CHECK_THROWS_AS(symmetric_subspace(tr, 5), DegreeCapExceeded);
  CHECK(cohomology(tr, 5, 5).degree == 5);

  SUBCASE("environment override") {
    setenv("HJJ_MAX_DEGREE", "2", 1);
    CHECK(degree_cap_from_env() == 2);
    setenv("HJJ_MAX_DEGREE", "junk", 1);
    CHECK_THROWS_AS(degree_cap_from_env(), ParseError);
    setenv("HJJ_MAX_DEGREE", "0", 1);
    CHECK_THROWS_AS(degree_cap_from_env(), ParseError);
    unsetenv("HJJ_MAX_DEGREE");
    CHECK(degree_cap_from_env() == kDefaultDegreeCap);
  }
}

TEST_CASE("cocycles of conjugated valid algebras still form subquotients") {
  for (int trial = 0; trial < 5; ++trial) {
    HomAlgebra a = rand_conjugate(alg2());
    CohomologyReport rep = adjoint_cohomology(a, 0, 1);
    CHECK(rep.inputs_verified);
    CHECK(rep.cocycles.contains(rep.coboundaries));
    REQUIRE(rep.dim_h);
    // conjugation is an isomorphism, so the dimension is a fixed invariant
    CHECK(*rep.dim_h == 1);
  }
}
