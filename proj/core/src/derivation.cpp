#include "hjj/derivation.hpp"

#include <utility>

#include "hjj/errors.hpp"

namespace hjj {

namespace {

struct Resolved {
  const HomAlgebra& a;
  Representation rep;
  Matrix shift;  // alpha^weight on A
  Rational sign; // +1 derivation, -1 antiderivation
};

Resolved resolve(const DerivationQuery& q) {
  Representation rep = q.rep ? *q.rep : adjoint_rep(q.algebra, 0);
  if (!(rep.algebra() == q.algebra))
    throw AlgebraMismatch("derivation query: module is over a different algebra");
  Matrix shift = q.algebra.alpha().pow(q.weight);
  return {q.algebra, std::move(rep), std::move(shift), Rational(q.anti ? -1 : 1)};
}

}  // namespace

Subspace derivation_space(const DerivationQuery& q) {
  Resolved r = resolve(q);
  std::size_t da = r.a.dim(), dv = r.rep.dim_v();
  std::size_t unknowns = dv * da;  // D[out][in] at flat index out*da + in
  auto var = [da](std::size_t out, std::size_t in) { return out * da + in; };

  std::vector<Vec> rows;

  // D alpha = phi D, one scalar constraint per result entry (rr, cc).
  for (std::size_t rr = 0; rr < dv; ++rr)
    for (std::size_t cc = 0; cc < da; ++cc) {
      Vec row(unknowns);
      for (std::size_t m = 0; m < da; ++m) row[var(rr, m)] += r.a.alpha()(m, cc);
      for (std::size_t m = 0; m < dv; ++m) row[var(m, cc)] -= r.rep.phi()(rr, m);
      rows.push_back(std::move(row));
    }

  // D(e_i e_j) -/+ [rho(shift e_i) D(e_j) + rho(shift e_j) D(e_i)] = 0 on
  // pairs i<=j (the condition is symmetric).
  for (std::size_t i = 0; i < da; ++i) {
    Matrix mi = r.rep.rho_of(r.shift.col(i));
    for (std::size_t j = i; j < da; ++j) {
      Matrix mj = r.rep.rho_of(r.shift.col(j));
      Vec prod = r.a.product_of_basis(i, j);
      for (std::size_t rr = 0; rr < dv; ++rr) {
        Vec row(unknowns);
        for (std::size_t m = 0; m < da; ++m) row[var(rr, m)] += prod[m];
        for (std::size_t m = 0; m < dv; ++m) {
          row[var(m, j)] -= r.sign * mi(rr, m);
          row[var(m, i)] -= r.sign * mj(rr, m);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  return nullspace(Matrix::from_rows(rows));
}

bool satisfies_derivation(const DerivationQuery& q, const Matrix& d) {
  Resolved r = resolve(q);
  std::size_t da = r.a.dim(), dv = r.rep.dim_v();
  if (d.rows() != dv || d.cols() != da)
    throw DimensionMismatch("derivation candidate must be dim(V) x dim(A)");

  if (!(d * r.a.alpha() == r.rep.phi() * d)) return false;
  for (std::size_t i = 0; i < da; ++i) {
    Matrix mi = r.rep.rho_of(r.shift.col(i));
    for (std::size_t j = i; j < da; ++j) {
      Vec lhs = d.apply(r.a.product_of_basis(i, j));
      Vec rhs = r.rep.rho_of(r.shift.col(j)).apply(d.col(i));
      rhs += mi.apply(d.col(j));
      if (lhs != r.sign * rhs) return false;
    }
  }
  return true;
}

Subspace inner_antiderivation_space(const Representation& r, long weight) {
  std::size_t da = r.algebra().dim(), dv = r.dim_v();
  Matrix shift = r.algebra().alpha().pow(weight);
  Matrix fixed_eqs = r.phi();
  for (std::size_t i = 0; i < dv; ++i) fixed_eqs(i, i) -= Rational(1);
  Subspace fixed = nullspace(fixed_eqs);

  std::vector<Vec> generators;
  for (std::size_t b = 0; b < fixed.dim(); ++b) {
    Vec u = fixed.basis_row(b);
    Vec flat(dv * da);
    for (std::size_t j = 0; j < da; ++j) {
      Vec column = r.rho_of(shift.col(j)).apply(u);
      for (std::size_t out = 0; out < dv; ++out) flat[out * da + j] = column[out];
    }
    generators.push_back(std::move(flat));
  }
  return Subspace::span(generators, dv * da);
}

BracketReport bracket_classify(const HomAlgebra& a, const Matrix& d1, long k1, bool anti1,
                               const Matrix& d2, long k2, bool anti2) {
  auto query = [&](long k, bool anti) {
    return DerivationQuery{a, std::nullopt, k, anti};
  };
  if (!satisfies_derivation(query(k1, anti1), d1))
    throw NotAMember(std::string("first operator is not a twisted ") +
                     (anti1 ? "antiderivation" : "derivation") + " of weight " + std::to_string(k1));
  if (!satisfies_derivation(query(k2, anti2), d2))
    throw NotAMember(std::string("second operator is not a twisted ") +
                     (anti2 ? "antiderivation" : "derivation") + " of weight " + std::to_string(k2));

  BracketReport report{d1 * d2 - d2 * d1, d1 * d2 + d2 * d1};
  long k = k1 + k2;
  report.commutator_is_derivation = satisfies_derivation(query(k, false), report.commutator);
  report.commutator_is_antiderivation = satisfies_derivation(query(k, true), report.commutator);
  report.anticommutator_is_derivation = satisfies_derivation(query(k, false), report.anticommutator);
  report.anticommutator_is_antiderivation =
      satisfies_derivation(query(k, true), report.anticommutator);

  Matrix s1 = a.alpha().pow(k2) * d1;  // alpha^{k2} after d1
  Matrix s2 = a.alpha().pow(k1) * d2;
  report.cross_vanishes = true;
  report.anticommutator_matches_cross = true;
  std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec cross = a.product(s1.col(i), s2.col(j));
      cross += a.product(s2.col(i), s1.col(j));
      if (!is_zero(cross)) report.cross_vanishes = false;
      if (report.anticommutator.apply(a.product_of_basis(i, j)) != cross)
        report.anticommutator_matches_cross = false;
    }
  return report;
}

}  // namespace hjj
