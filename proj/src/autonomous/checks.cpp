#include "bispec/autonomous/checks.hpp"

#include <string>

#include "bispec/algebra/error.hpp"
#include "bispec/autonomous/recursion.hpp"

namespace bispec::autonomous {

OrderCheck check_autonomous(const MatLaurent& v, long K) {
  for (long k = -1; k <= K; ++k) {
    MatC rhs = MatC::zero(v.dim());
    for (long j = -1; j <= k; ++j) {
      if (j == 0) continue;
      rhs += v.coeff(j) * v.coeff(k - 1 - j) * GaussianRational(j);
    }
    if (!(v.coeff(k) * GaussianRational(k * (k - 1)) == rhs)) return {false, k};
  }
  return {};
}

OrderCheck check_autonomous(const MatPolyX& v) {
  const MatPolyX d1 = algebra::polyx_derivative(v);
  const MatPolyX defect = algebra::polyx_derivative(d1) - algebra::polyx_mul(d1, v);
  for (std::size_t p = 0; p < defect.coeffs().size(); ++p) {
    if (!defect.coeffs()[p].is_zero()) return {false, static_cast<long>(p) + 2};
  }
  return {};
}

bool equivariance_check(const SeedData& seed, const MatC& a, std::size_t K) {
  const std::size_t n = seed.dim();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("equivariance matrix must be N x N");
  if (!algebra::commutator(a, seed.residue()).is_zero()) {
    throw HypothesisViolated("A must be block diagonal in the residue basis: [A, V_{-1}] != 0");
  }
  const MatC v2 = solve_v2(seed);
  const MatC* initial[3] = {&seed.V0, &seed.V1, &v2};
  std::vector<MatC> powers{MatC::identity(n)};
  for (std::size_t k = 1; k <= K + 1; ++k) powers.push_back(powers.back() * a);
  for (std::size_t j = 0; j < 3; ++j) {
    const MatC& vj = *initial[j];
    if (!(powers[j + 1] * vj == vj * powers[j + 1])) {
      throw HypothesisViolated("A^" + std::to_string(j + 1) + " does not commute with V_" + std::to_string(j));
    }
  }
  const MatLaurent base = recurse_from_initial(seed.residue_form, seed.V0, seed.V1, v2, K);
  const MatLaurent moved =
      recurse_from_initial(seed.residue_form, powers[1] * seed.V0, powers[2] * seed.V1, powers[3] * v2, K);
  for (std::size_t k = 0; k <= K; ++k) {
    const MatC& vk = base.coeffs()[k];
    const MatC& wk = moved.coeffs()[k];
    if (!(wk == powers[k + 1] * vk) || !(wk == vk * powers[k + 1])) return false;
  }
  return true;
}

bool quasihomogeneity_check(const SeedData& seed, const GaussianRational& lambda, std::size_t K) {
  const GaussianRational l2 = lambda * lambda;
  SeedData scaled{seed.residue_form, seed.V0 * lambda, seed.V1 * l2, seed.V212 * (l2 * lambda)};
  const MatLaurent base = recurse_coefficients(seed, K);
  const MatLaurent moved = recurse_coefficients(scaled, K);
  GaussianRational factor = lambda;
  for (std::size_t k = 0; k <= K; ++k) {
    if (!(moved.coeffs()[k] == base.coeffs()[k] * factor)) return false;
    factor *= lambda;
  }
  return true;
}

bool norm_hypotheses_hold(const MatC& v0, const MatC& v1, const MatC& v2) {
  using algebra::frobenius_norm_sq;
  return frobenius_norm_sq(v0) <= Rational(1, 16) && frobenius_norm_sq(v1) <= Rational(1, 64) &&
         frobenius_norm_sq(v2) <= Rational(1, 256);
}

namespace {

Rational quarter_power(std::size_t e) {
  mpz_class den = 1;
  den <<= 2 * e;
  return Rational(mpz_class(1), den);
}

}  // namespace

OrderCheck norm_bound_check(const SeedData& seed, std::size_t K) {
  const MatC v2 = solve_v2(seed);
  if (!norm_hypotheses_hold(seed.V0, seed.V1, v2)) {
    throw HypothesisViolated("seed norms exceed ||V_0||^2 <= 1/16, ||V_1||^2 <= 1/64, ||V_2||^2 <= 1/256");
  }
  const MatLaurent v = recurse_from_initial(seed.residue_form, seed.V0, seed.V1, v2, K);
  for (std::size_t k = 3; k <= K; ++k) {
    if (algebra::frobenius_norm_sq(v.coeffs()[k]) > quarter_power(k + 2)) return {false, static_cast<long>(k)};
  }
  return {};
}

Rational tk_inverse_bound_sq(long k) {
  if (k < 3) throw KNotInvertible("T_k^{-1} bound needs k >= 3");
  Rational c(4 * (k * k - 3), (k - 2) * (k - 1) * (k + 1) * (k + 2));
  c.canonicalize();
  return c * c;
}

bool tk_inverse_norm_bound_check(long k, std::span<const MatC> samples, std::size_t m) {
  const Rational bound = tk_inverse_bound_sq(k);
  for (const auto& a : samples) {
    if (algebra::frobenius_norm_sq(tk_inverse(k, a, m)) > bound * algebra::frobenius_norm_sq(a)) return false;
  }
  return true;
}

namespace {

bool is_canonical_residue(const MatC& r) {
  std::size_t m = 0;
  while (m < r.rows() && r(m, m) == GaussianRational(-2)) ++m;
  return r == canonical_residue(r.rows(), m).canonical;
}

}  // namespace

SeriesValue eval_series(const MatLaurent& v, const GaussianRational& x, std::size_t K) {
  if (x.is_zero()) throw EvalAtPole("series evaluated at the pole x = 0");
  MatC value = v.residue() * x.inverse();
  GaussianRational xk = 1;
  for (std::size_t k = 0; k <= K; ++k) {
    value += v.coeff(static_cast<long>(k)) * xk;
    xk *= x;
  }
  SeriesValue out{std::move(value), std::nullopt};
  if (v.is_terminating() && static_cast<long>(K) >= v.last_known_nonzero()) {
    out.tail_bound = Rational(0);
    return out;
  }
  if (x.norm_sq() > 1 || !is_canonical_residue(v.residue())) return out;
  if (v.coeffs().size() < 3 || !norm_hypotheses_hold(v.coeff(0), v.coeff(1), v.coeff(2))) return out;
  // ||V_k|| <= 2^{-(k+2)} for all k, so the tail is at most
  // sum_{k>K} 2^{-(k+2)} r^k <= 2^{-(K+2)} r^{K+1} / (1 - r/2).
  const Rational r = algebra::sqrt_upper_bound(x.norm_sq());
  mpz_class two_pow = 1;
  two_pow <<= K + 2;
  Rational rk = 1;
  for (std::size_t k = 0; k <= K; ++k) rk *= r;
  Rational bound = rk / Rational(two_pow) / (Rational(1) - r / 2);
  bound.canonicalize();
  out.tail_bound = bound;
  return out;
}

}  // namespace bispec::autonomous
