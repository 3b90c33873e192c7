#pragma once

// Hand-rolled generators for the property tests. Every generator is driven by
// an explicit seed so failures replay exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "bispec/algebra/gaussian_rational.hpp"
#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::testing {

using algebra::GaussianRational;
using algebra::MatC;
using algebra::MatPolyX;
using algebra::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  // p/q with |p| <= 9, 1 <= q <= 8; zero allowed.
  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 8));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (sgn(r) == 0);
    return r;
  }

  // Real about half the time so both branches of the field get exercised.
  GaussianRational gaussian() { return coin() ? GaussianRational(rational()) : GaussianRational(rational(), rational()); }

  GaussianRational nonzero_gaussian() {
    GaussianRational z;
    do z = gaussian();
    while (z.is_zero());
    return z;
  }

  MatC matrix(std::size_t rows, std::size_t cols, double density = 1.0) {
    MatC m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(density)) m(r, c) = gaussian();
    return m;
  }
  MatC matrix(std::size_t n, double density = 1.0) { return matrix(n, n, density); }

  MatPolyX poly(std::size_t n, std::size_t max_degree, double density = 1.0) {
    const auto deg = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::vector<MatC> coeffs;
    for (std::size_t k = 0; k <= deg; ++k) coeffs.push_back(matrix(n, density));
    return MatPolyX(n, std::move(coeffs));
  }

  // Strictly upper triangular, hence nilpotent.
  MatC strictly_upper(std::size_t n) {
    MatC m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) m(r, c) = gaussian();
    return m;
  }

  // Scales every entry so the squared Frobenius norm is at most `bound`.
  MatC matrix_with_norm_sq_at_most(std::size_t n, const Rational& bound) {
    MatC m = matrix(n, 0.7);
    const Rational norm = algebra::frobenius_norm_sq(m);
    if (sgn(norm) == 0) return m;
    // Rational s with s^2 <= bound / norm: take the reciprocal of an upper bound on sqrt(norm / bound).
    const Rational s = 1 / algebra::sqrt_upper_bound(norm / bound);
    return m * GaussianRational(s);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bispec::testing
