#include "bispec/autonomous/recursion.hpp"

#include <algorithm>
#include <string>

#include "bispec/algebra/error.hpp"
#include "bispec/autonomous/checks.hpp"

namespace bispec::autonomous {

MatC tk_apply(long k, const MatC& a, const MatC& vm1) {
  return a * GaussianRational(k * (k - 1)) + vm1 * a - a * vm1 * GaussianRational(k);
}

MatC tk_inverse(long k, const MatC& b, std::size_t m) {
  if (k < 3) throw KNotInvertible("T_" + std::to_string(k) + " is not invertible; k must be at least 3");
  if (!b.is_square() || m > b.rows()) throw DimensionMismatch("tk_inverse: bad block split");
  const std::size_t n = b.rows();
  const GaussianRational f11 = GaussianRational((k - 1) * (k + 2)).inverse();
  const GaussianRational f12 = GaussianRational((k - 2) * (k + 1)).inverse();
  const GaussianRational f21 = GaussianRational(k * (k + 1)).inverse();
  const GaussianRational f22 = GaussianRational(k * (k - 1)).inverse();
  MatC a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const GaussianRational& f = r < m ? (c < m ? f11 : f12) : (c < m ? f21 : f22);
      a(r, c) = b(r, c) * f;
    }
  }
  return a;
}

MatC solve_v2(const SeedData& seed) {
  const std::size_t n = seed.dim();
  const std::size_t m = seed.m();
  // Block factors of T_2 are 4, 0, 6, 2; the (1,2) block is free.
  const MatC rhs = seed.V1 * seed.V0;
  MatC v2(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r < m && c >= m) {
        if (!rhs(r, c).is_zero()) throw SeedInconsistent("V_1 V_0 has a nonzero (1,2) block; V_2 has no solution");
        v2(r, c) = seed.V212(r, c - m);
      } else {
        const long f = r < m ? (c < m ? 4 : 0) : (c < m ? 6 : 2);
        v2(r, c) = rhs(r, c) / GaussianRational(f);
      }
    }
  }
  return v2;
}

MatLaurent recurse_from_initial(const ResidueForm& form, const MatC& v0, const MatC& v1, const MatC& v2,
                                std::size_t K) {
  if (K < 2) throw InputError("truncation order must be at least 2");
  std::vector<MatC> v{v0, v1, v2};
  v.reserve(K + 1);
  for (std::size_t k = 3; k <= K; ++k) {
    MatC sum = MatC::zero(form.dim());
    for (std::size_t j = 1; j <= k - 1; ++j) {
      sum += v[j] * v[k - 1 - j] * GaussianRational(static_cast<long>(j));
    }
    v.push_back(tk_inverse(static_cast<long>(k), sum, form.m));
  }
  // If d is the last nonzero index, every product V_j V_{k-1-j} with
  // k > 2d + 1 has a factor of index > d, so zeros on (d, 2d+1] propagate.
  long d = -1;
  for (std::size_t k = v.size(); k-- > 0;) {
    if (!v[k].is_zero()) {
      d = static_cast<long>(k);
      break;
    }
  }
  const bool terminating = static_cast<long>(K) >= 2 * d + 1;
  return MatLaurent(form.canonical, std::move(v), terminating);
}

MatLaurent recurse_coefficients(const SeedData& seed, std::size_t K) {
  validate_seed(seed);
  return recurse_from_initial(seed.residue_form, seed.V0, seed.V1, solve_v2(seed), K);
}

MatLaurent to_original_basis(const MatLaurent& v, const ResidueForm& form) {
  std::vector<MatC> coeffs;
  coeffs.reserve(v.coeffs().size());
  for (const auto& c : v.coeffs()) coeffs.push_back(form.to_original(c));
  return MatLaurent(form.to_original(v.residue()), std::move(coeffs), v.is_terminating());
}

bool is_nilpotent(const MatC& a) {
  if (!a.is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
  return algebra::pow(a, static_cast<unsigned>(a.rows())).is_zero();
}

MatPolyX build_polynomial_solution(const MatC& v1, std::size_t max_order) {
  if (!is_nilpotent(v1)) throw NotNilpotent("V_1^N != 0");
  const std::size_t n = v1.rows();
  // V_{2j+1} is a multiple of V_1^{j+1}, so the degree is below 2N and the
  // recursion certifies termination by order 4N.
  const std::size_t K = std::max<std::size_t>(3, std::min(max_order, 4 * n + 1));
  SeedData seed = SeedData::canonical(n, 0, MatC::zero(n), v1);
  MatLaurent series = recurse_coefficients(seed, K);
  if (!series.is_terminating()) {
    throw TruncationExceeded("polynomial solution did not terminate by order " + std::to_string(K));
  }
  MatPolyX poly = series.regular_part();
  if (!check_autonomous(poly).ok) throw PotentialNotAutonomous("recursion output fails V'' = V'V");
  return poly;
}

}  // namespace bispec::autonomous
