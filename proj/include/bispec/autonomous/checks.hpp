#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/autonomous/seed.hpp"

namespace bispec::autonomous {

using algebra::MatLaurent;
using algebra::MatPolyX;
using algebra::Rational;

// Outcome of an order-by-order check. Order k refers to the coefficient
// equation k(k-1) V_k = sum_{j=-1}^{k} j V_j V_{k-1-j}, which is the x^{k-2}
// coefficient of V'' = V'V.
struct OrderCheck {
  bool ok = true;
  std::optional<long> first_failure;
};

// Orders -1..K. Throws TruncationExceeded if K is past a non-terminating
// truncation.
OrderCheck check_autonomous(const MatLaurent& v, long K);
// Exact polynomial identity V'' = V'V.
OrderCheck check_autonomous(const MatPolyX& v);

// Recomputes the chain from (A V_0, A^2 V_1, A^3 V_2) and compares it with
// A^{k+1} V_k and V_k A^{k+1} for k <= K. Throws HypothesisViolated if
// [A, V_{-1}] != 0 or A^{j+1} V_j != V_j A^{j+1} for some j <= 2.
bool equivariance_check(const SeedData& seed, const MatC& a, std::size_t K);

// V_k(l V_0, l^2 V_1, l^3 V_2) = l^{k+1} V_k for all k <= K, with V_2 of the
// scaled seed re-solved from l V_0, l^2 V_1 and l^3 V212.
bool quasihomogeneity_check(const SeedData& seed, const GaussianRational& lambda, std::size_t K);

// Squared Frobenius hypotheses on the seed for the geometric decay bound.
bool norm_hypotheses_hold(const MatC& v0, const MatC& v1, const MatC& v2);

// ||V_k||^2 <= 4^{-(k+2)} for 3 <= k <= K. Throws HypothesisViolated when the
// seed fails norm_hypotheses_hold.
OrderCheck norm_bound_check(const SeedData& seed, std::size_t K);

// (4(k^2-3) / ((k-2)(k-1)(k+1)(k+2)))^2, the squared operator-norm bound.
Rational tk_inverse_bound_sq(long k);
// ||T_k^{-1} a||^2 <= tk_inverse_bound_sq(k) ||a||^2 on every sample.
bool tk_inverse_norm_bound_check(long k, std::span<const MatC> samples, std::size_t m);

struct SeriesValue {
  MatC value;
  // Upper bound on the Frobenius norm of the omitted tail, when known.
  std::optional<Rational> tail_bound;
};

// sum_{k=-1}^{K} V_k x^k. The tail bound is 0 for a terminating series
// evaluated past its last term; otherwise it is available only for a
// canonical-basis series meeting the norm hypotheses at |x| <= 1.
// Throws EvalAtPole at x = 0.
SeriesValue eval_series(const MatLaurent& v, const GaussianRational& x, std::size_t K);

}  // namespace bispec::autonomous
