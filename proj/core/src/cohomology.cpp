#include "hjj/cohomology.hpp"

#include <cstdlib>
#include <utility>

#include "hjj/errors.hpp"

namespace hjj {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Mixed-radix digits of an argument tuple, first argument least significant.
std::vector<std::size_t> unrank_tuple(std::size_t rank, std::size_t dim_a, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t m = 0; m < n; ++m) {
    t[m] = rank % dim_a;
    rank /= dim_a;
  }
  return t;
}

std::size_t rank_tuple(const std::vector<std::size_t>& t, std::size_t dim_a) {
  std::size_t rank = 0;
  for (std::size_t m = t.size(); m-- > 0;) rank = rank * dim_a + t[m];
  return rank;
}

// All basis expansions of (alpha x_{p_1}, .., alpha x_{p_m}) as pairs of
// (tuple, coefficient), skipping zero twist entries.
struct Expansion {
  std::vector<std::size_t> tuple;
  Rational coeff;
};

std::vector<Expansion> expand_twisted(const Matrix& alpha, const std::vector<std::size_t>& args) {
  std::vector<Expansion> acc{{{}, Rational(1)}};
  for (std::size_t a : args) {
    std::vector<Expansion> next;
    for (const auto& e : acc)
      for (std::size_t m = 0; m < alpha.rows(); ++m) {
        if (alpha(m, a).is_zero()) continue;
        Expansion grown = e;
        grown.tuple.push_back(m);
        grown.coeff *= alpha(m, a);
        next.push_back(std::move(grown));
      }
    acc = std::move(next);
  }
  return acc;
}

Matrix coboundary_full(const Representation& r, std::size_t n, const Rational& product_sign) {
  const HomAlgebra& a = r.algebra();
  std::size_t da = a.dim(), dv = r.dim_v();
  std::size_t in_tuples = pow_size(da, n), out_tuples = pow_size(da, n + 1);
  Matrix op(dv * out_tuples, dv * in_tuples);

  Matrix shift = a.alpha().pow(static_cast<long>(n));
  std::vector<Matrix> action;  // rho(alpha^n(e_t)) per basis index
  action.reserve(da);
  for (std::size_t t = 0; t < da; ++t) action.push_back(r.rho_of(shift.col(t)));

  for (std::size_t rank = 0; rank < out_tuples; ++rank) {
    std::vector<std::size_t> t = unrank_tuple(rank, da, n + 1);

    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      rest.reserve(n);
      for (std::size_t m = 0; m <= n; ++m)
        if (m != i) rest.push_back(t[m]);
      std::size_t col_tuple = rank_tuple(rest, da);
      const Matrix& m_i = action[t[i]];
      for (std::size_t out = 0; out < dv; ++out)
        for (std::size_t mid = 0; mid < dv; ++mid) {
          if (m_i(out, mid).is_zero()) continue;
          op(out * out_tuples + rank, mid * in_tuples + col_tuple) += m_i(out, mid);
        }
    }

    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Vec prod = a.product_of_basis(t[i], t[j]);
        if (is_zero(prod)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(n - 1);
        for (std::size_t m = 0; m <= n; ++m)
          if (m != i && m != j) rest.push_back(t[m]);
        for (const auto& e : expand_twisted(a.alpha(), rest)) {
          for (std::size_t first = 0; first < da; ++first) {
            if (prod[first].is_zero()) continue;
            std::vector<std::size_t> arg{first};
            arg.insert(arg.end(), e.tuple.begin(), e.tuple.end());
            std::size_t col_tuple = rank_tuple(arg, da);
            Rational coeff = product_sign * prod[first] * e.coeff;
            for (std::size_t out = 0; out < dv; ++out)
              op(out * out_tuples + rank, out * in_tuples + col_tuple) += coeff;
          }
        }
      }
  }
  return op;
}

// phi f(T) - f(alpha T) = 0 as rows over flat coordinates.
Matrix equivariance_rows(const Representation& r, std::size_t n) {
  const HomAlgebra& a = r.algebra();
  std::size_t da = a.dim(), dv = r.dim_v();
  std::size_t tuples = pow_size(da, n);
  Matrix rows(dv * tuples, dv * tuples);
  for (std::size_t rank = 0; rank < tuples; ++rank) {
    std::vector<std::size_t> t = unrank_tuple(rank, da, n);
    for (std::size_t out = 0; out < dv; ++out) {
      std::size_t row = out * tuples + rank;
      for (std::size_t mid = 0; mid < dv; ++mid) rows(row, mid * tuples + rank) += r.phi()(out, mid);
      for (const auto& e : expand_twisted(a.alpha(), t))
        rows(row, out * tuples + rank_tuple(e.tuple, da)) -= e.coeff;
    }
  }
  return rows;
}

// The pairwise alpha-skew (sign = +1) or plain-swap symmetry (sign = -1)
// conditions; rows are appended only for degrees with at least one pair.
Matrix exchange_rows(const Representation& r, std::size_t n, bool alpha_skew) {
  const HomAlgebra& a = r.algebra();
  std::size_t da = a.dim(), dv = r.dim_v();
  std::size_t tuples = pow_size(da, n);
  std::vector<Vec> rows;
  if (n >= 2) {
    std::vector<std::size_t> t(n);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        for (std::size_t rest = 0; rest < pow_size(da, n - 2); ++rest) {
          std::vector<std::size_t> others = unrank_tuple(rest, da, n - 2);
          for (std::size_t u = 0; u < da; ++u)
            for (std::size_t v = u; v < da; ++v) {
              // Fill positions: u at p, v at q, the rest in order.
              std::size_t next = 0;
              for (std::size_t m = 0; m < n; ++m)
                if (m != p && m != q) t[m] = others[next++];
              for (std::size_t out = 0; out < dv; ++out) {
                Vec row(dv * tuples);
                bool nonzero = false;
                auto add = [&](std::size_t first, std::size_t second, const Rational& w) {
                  t[p] = first;
                  t[q] = second;
                  row[out * tuples + rank_tuple(t, da)] += w;
                  nonzero = true;
                };
                if (alpha_skew) {
                  // f(u@p, alpha(e_v)@q) + f(v@p, alpha(e_u)@q) = 0
                  for (std::size_t m = 0; m < da; ++m) {
                    if (!a.alpha()(m, v).is_zero()) add(u, m, a.alpha()(m, v));
                    if (!a.alpha()(m, u).is_zero()) add(v, m, a.alpha()(m, u));
                  }
                } else if (u != v) {
                  add(u, v, Rational(1));
                  add(v, u, Rational(-1));
                }
                if (nonzero) rows.push_back(std::move(row));
              }
            }
        }
  }
  if (rows.empty()) return Matrix(0, dv * tuples);
  return Matrix::from_rows(rows);
}

std::string ordinal_degree(std::size_t n) { return "degree " + std::to_string(n); }

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw DegreeCapExceeded(std::string(what) + " at degree " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(cap));
}

bool inputs_pass(const Representation& r) {
  return verify_algebra(r.algebra()).all() && verify_representation(r).all();
}

// Lift coefficient rows expressed against a subspace basis back to ambient
// coordinates.
Vec against_basis(const Subspace& s, const Vec& coeffs) {
  Vec out(s.ambient_dim());
  for (std::size_t j = 0; j < coeffs.size(); ++j) axpy(out, coeffs[j], s.basis_row(j));
  return out;
}

}  // namespace

std::size_t degree_cap_from_env() {
  const char* raw = std::getenv("HJJ_MAX_DEGREE");
  if (raw == nullptr || *raw == '\0') return kDefaultDegreeCap;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1)
    throw ParseError("HJJ_MAX_DEGREE must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::size_t cochain_space_dim(std::size_t dim_a, std::size_t dim_v, std::size_t n) {
  return dim_v * pow_size(dim_a, n);
}

std::size_t cochain_index(std::size_t out, const std::vector<std::size_t>& args, std::size_t dim_a) {
  return out * pow_size(dim_a, args.size()) + rank_tuple(args, dim_a);
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
  if (args.size() != degree) throw DimensionMismatch("cochain eval: wrong argument count");
  for (const Vec& x : args)
    if (x.size() != dim_a) throw DimensionMismatch("cochain eval: argument dimension");
  if (coords.size() != cochain_space_dim(dim_a, dim_v, degree))
    throw DimensionMismatch("cochain eval: coordinate length");

  std::size_t tuples = pow_size(dim_a, degree);
  Vec out(dim_v);
  for (std::size_t rank = 0; rank < tuples; ++rank) {
    std::vector<std::size_t> t = unrank_tuple(rank, dim_a, degree);
    Rational coeff(1);
    for (std::size_t m = 0; m < degree && !coeff.is_zero(); ++m) coeff *= args[m][t[m]];
    if (coeff.is_zero()) continue;
    for (std::size_t r = 0; r < dim_v; ++r) out[r] += coeff * coords[r * tuples + rank];
  }
  return out;
}

Subspace hom_cochain_space(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "cochain space");
  return nullspace(equivariance_rows(r, n));
}

Subspace alpha_skew_subspace(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "skew subspace");
  return nullspace(stack_rows(equivariance_rows(r, n), exchange_rows(r, n, /*alpha_skew=*/true)));
}

Subspace symmetric_subspace(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "symmetric subspace");
  return nullspace(stack_rows(equivariance_rows(r, n), exchange_rows(r, n, /*alpha_skew=*/false)));
}

Matrix coboundary_d_full(const Representation& r, std::size_t n) {
  return coboundary_full(r, n, Rational(1));
}

Matrix coboundary_delta_full(const Representation& r, std::size_t n) {
  return coboundary_full(r, n, Rational(-1));
}

Matrix coboundary_d(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "coboundary d");
  Subspace cn = hom_cochain_space(r, n, cap);
  Matrix dn = coboundary_d_full(r, n);
  bool verified = inputs_pass(r);
  Matrix next_rows = verified ? equivariance_rows(r, n + 1) : Matrix();

  Matrix out(dn.rows(), cn.dim());
  for (std::size_t i = 0; i < cn.dim(); ++i) {
    Vec img = dn.apply(cn.basis_row(i));
    // On inputs satisfying all identities, d carries C^n into C^(n+1); a
    // miss can only be an assembly bug.
    if (verified && !is_zero(next_rows.apply(img)))
      throw ZigzagViolation("d image is not equivariant at " + ordinal_degree(n));
    for (std::size_t row = 0; row < img.size(); ++row) out(row, i) = std::move(img[row]);
  }
  return out;
}

Matrix coboundary_delta(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "coboundary delta");
  Subspace an = alpha_skew_subspace(r, n, cap);
  Matrix delta = coboundary_delta_full(r, n);
  bool verified = inputs_pass(r);
  Matrix next_rows, next_d;
  if (verified) {
    next_rows = equivariance_rows(r, n + 1);
    next_d = coboundary_d_full(r, n + 1);
  }

  Matrix out(delta.rows(), an.dim());
  for (std::size_t i = 0; i < an.dim(); ++i) {
    Vec img = delta.apply(an.basis_row(i));
    if (verified) {
      // Zigzag structure: delta of a skew cochain is equivariant and d kills
      // it. These hold whenever the inputs verify; a miss means the operator
      // assembly itself is wrong.
      if (!is_zero(next_rows.apply(img)))
        throw ZigzagViolation("delta image is not equivariant at " + ordinal_degree(n));
      if (!is_zero(next_d.apply(img)))
        throw ZigzagViolation("d after delta is nonzero at " + ordinal_degree(n));
    }
    for (std::size_t row = 0; row < img.size(); ++row) out(row, i) = std::move(img[row]);
  }
  return out;
}

CohomologyReport cohomology(const Representation& r, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "cohomology");

  bool verified = inputs_pass(r);
  Subspace cn = hom_cochain_space(r, n, cap);
  Subspace an = alpha_skew_subspace(r, n, cap);

  // Z^n: kernel of d within C^n, lifted back to full cochain coordinates.
  Matrix dn = coboundary_d(r, n, cap);
  Subspace kernel_coeffs = nullspace(dn);
  std::vector<Vec> z_vectors;
  z_vectors.reserve(kernel_coeffs.dim());
  for (std::size_t i = 0; i < kernel_coeffs.dim(); ++i)
    z_vectors.push_back(against_basis(cn, kernel_coeffs.basis_row(i)));
  Subspace z = Subspace::span(z_vectors, cn.ambient_dim());

  // B^n: the image of delta on the previous skew space; nothing below
  // degree 0.
  Subspace b = n >= 1 ? image(coboundary_delta(r, n - 1, cap))
                      : Subspace::zero(cn.ambient_dim());

  CohomologyReport report{n,  verified,         cn.dim(), an.dim(),
                          z,  b,                std::nullopt, {}, {}};
  if (!verified)
    report.warnings.push_back(
        "algebra or module identities fail; dimensions are formal solution-space sizes");
  if (z.contains(b)) {
    report.representatives = quotient_basis(z, b);
    report.dim_h = report.representatives.size();
  } else {
    report.warnings.push_back("coboundaries are not cocycles here; no quotient was formed");
  }
  return report;
}

CohomologyReport adjoint_cohomology(const HomAlgebra& a, long shift, std::size_t n,
                                    std::size_t cap) {
  return cohomology(adjoint_rep(a, shift), n, cap);
}

CohomologyReport trivial_cohomology(const HomAlgebra& a, std::size_t n, std::size_t cap) {
  return cohomology(trivial_rep(a), n, cap);
}

}  // namespace hjj
