#include "bispec/verify/oracles.hpp"

#include <set>

#include "bispec/algebra/bivariate.hpp"
#include "bispec/algebra/error.hpp"
#include "bispec/spectral/blocks.hpp"
#include "bispec/spectral/membership.hpp"

namespace bispec::verify {

using algebra::BiPoly;
using algebra::RatMatZ;
using algebra::Rational;
using algebra::ScalarPoly;

void OracleReport::fail(std::string location, std::string expected, std::string got) {
  if (!passed) return;
  passed = false;
  discrepancy = Discrepancy{std::move(location), std::move(expected), std::move(got)};
}

std::vector<GaussianRational> scalar_tanh_series(const GaussianRational& v1, std::size_t K) {
  std::vector<Rational> t(K + 1, Rational(0));
  for (std::size_t n = 0; n < K; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i <= n; ++i) acc -= t[i] * t[n - i];
    t[n + 1] = acc / Rational(static_cast<long>(n + 1));
  }
  // -2 l t_n l^n x^n, and only odd n survive, so l^{n+1} = (l^2)^{(n+1)/2}.
  const GaussianRational lambda_sq = -v1 / GaussianRational(2);
  std::vector<GaussianRational> out(K + 1);
  GaussianRational power = lambda_sq;
  for (std::size_t n = 1; n <= K; n += 2) {
    out[n] = GaussianRational(-2) * power * GaussianRational(t[n]);
    power *= lambda_sq;
  }
  return out;
}

namespace {

Rational factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

std::string at(const std::string& what, std::size_t i) { return what + "[" + std::to_string(i) + "]"; }

// (A1)^k = sum_{j=2}^{m-k+1} (j+k-2)!/(j-2)! e_{j,j+k} (1-based blocks), k >= 1.
MatC closed_form_power(std::size_t m, std::size_t n, std::size_t k) {
  MatC out = MatC::zero((m + 1) * n);
  for (long j = 2; j <= static_cast<long>(m) - static_cast<long>(k) + 1; ++j) {
    const Rational c = factorial(j + static_cast<long>(k) - 2) / factorial(j - 2);
    out.set_block((j - 1) * n, (j - 1 + k) * n, MatC::scalar(n, c));
  }
  return out;
}

// b_0 = a_0, b_k = a_k + sum_{j=k+1}^{m} (j-2)! j (-1)^{j-k} / ((k-1)! z^{j-k}) a_j.
std::vector<RatMatZ> closed_form_b(const MatPolyX& theta, std::size_t m) {
  std::vector<RatMatZ> b;
  b.push_back(RatMatZ::constant(theta.coeff(0)));
  for (std::size_t k = 1; k <= m; ++k) {
    RatMatZ bk = RatMatZ::constant(theta.coeff(k));
    for (std::size_t j = k + 1; j <= m; ++j) {
      Rational c = factorial(static_cast<long>(j) - 2) * Rational(static_cast<long>(j)) /
                   factorial(static_cast<long>(k) - 1);
      if ((j - k) % 2 == 1) c = -c;
      bk += RatMatZ(algebra::MatPolyZ::constant(theta.coeff(j) * GaussianRational(c)),
                    ScalarPoly::monomial(GaussianRational(1), j - k));
    }
    b.push_back(std::move(bk));
  }
  return b;
}

MatPolyX monomial_theta(std::size_t n, std::size_t l, std::size_t p, std::size_t q) {
  return MatPolyX::monomial(MatC::unit(n, p, q), l);
}

}  // namespace

OracleReport residue_case_closed_forms(std::size_t m, std::size_t n) {
  OracleReport report{"residue_case_closed_forms(m=" + std::to_string(m) + ")", true, std::nullopt};
  if (m < 1 || n < 1) throw InputError("residue closed forms need m >= 1 and N >= 1");
  const MatLaurent v = MatLaurent::exact(MatC::scalar(n, -2), MatPolyX(n));

  const MatC a1 = spectral::build_A1(v, m).dense();
  MatC power = a1;
  for (std::size_t k = 1; k <= m + 1; ++k) {
    const MatC expected = closed_form_power(m, n, k);
    if (!(power == expected)) report.fail(at("A1^k, k", k), expected.to_string(), power.to_string());
    if (k >= m && !power.is_zero()) report.fail(at("A1^k nilpotency, k", k), "0", power.to_string());
    power = power * a1;
  }

  for (std::size_t l = 0; l <= m; ++l) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const MatPolyX theta = monomial_theta(n, l, p, q);
        const bool expected = l != 1;
        const bool got = spectral::membership(theta, v).member;
        if (got != expected) {
          report.fail("membership of x^" + std::to_string(l) + " E_" + std::to_string(p + 1) + std::to_string(q + 1),
                      expected ? "member" : "non-member", got ? "member" : "non-member");
        }
      }
    }
  }

  // Every coefficient except a_1 populated, entries distinct.
  std::vector<MatC> coeffs;
  for (std::size_t l = 0; l <= m; ++l) {
    MatC c(n, n);
    if (l != 1) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) c(r, s) = GaussianRational(Rational(static_cast<long>(l * n * n + r * n + s + 1), 3));
    }
    coeffs.push_back(std::move(c));
  }
  std::vector<MatPolyX> thetas{MatPolyX(n, coeffs)};
  for (std::size_t l = 2; l <= m; ++l) thetas.push_back(monomial_theta(n, l, 0, n - 1));
  for (const auto& theta : thetas) {
    const std::size_t deg = spectral::theta_degree(theta);
    const DiffOpZ op = spectral::synthesize_B(theta, v);
    const std::vector<RatMatZ> expected = closed_form_b(theta, deg);
    for (std::size_t j = 0; j <= deg; ++j) {
      if (!(op.b[j] == expected[j])) {
        report.fail(at("b_j for deg " + std::to_string(deg) + ", j", j), expected[j].to_string(), op.b[j].to_string());
      }
    }
  }
  return report;
}

namespace {

std::string key_name(const BiPoly::Key& k) {
  return "x^" + std::to_string(k.first) + " z^" + std::to_string(k.second);
}

}  // namespace

OracleReport expand_bispectral_identity(const MatPolyX& theta, const DiffOpZ& b, const MatLaurent& v, long K) {
  OracleReport report{"expand_bispectral_identity", true, std::nullopt};
  const std::size_t n = v.dim();
  if (theta.dim() != n || b.dim() != n || b.b.size() != b.order + 1) {
    throw DimensionMismatch("theta, B and V must share a dimension");
  }
  // Common denominator of the b_j.
  ScalarPoly d(GaussianRational(1));
  for (const auto& bj : b.b) d = divmod(d * bj.denominator(), algebra::gcd(d, bj.denominator())).first;

  const GaussianRational half(Rational(1, 2));
  BiPoly f = BiPoly::term(MatC::identity(n), 0, 1) + half * (BiPoly::term(v.residue(), -1, 0) + BiPoly::from_x(v.regular_part()));

  BiPoly lhs(n);
  BiPoly dzf = f;
  for (std::size_t j = 0; j <= b.order; ++j) {
    const RatMatZ& bj = b.b[j];
    const algebra::MatPolyZ cleared = divmod(d, bj.denominator()).first * bj.numerator();
    lhs += dzf * BiPoly::from_z(cleared);
    dzf = dzf.twisted_d_z();
  }
  const BiPoly rhs = BiPoly::from_x(theta) * f * BiPoly::from_z(d * algebra::MatPolyZ::constant(MatC::identity(n)));

  std::set<BiPoly::Key> keys;
  for (const auto& [k, c] : lhs.terms()) keys.insert(k);
  for (const auto& [k, c] : rhs.terms()) keys.insert(k);
  for (const auto& k : keys) {
    if (!v.is_terminating() && k.first > K) continue;
    const MatC got = lhs.coeff(k.first, k.second);
    const MatC expected = rhs.coeff(k.first, k.second);
    if (!(got == expected)) {
      report.fail(key_name(k), expected.to_string(), got.to_string());
      break;
    }
  }
  return report;
}

}  // namespace bispec::verify
