#include "bispec/spectral/operator.hpp"

#include "bispec/algebra/bivariate.hpp"
#include "bispec/algebra/error.hpp"
#include "bispec/algebra/resolvent.hpp"
#include "bispec/spectral/blocks.hpp"
#include "bispec/spectral/membership.hpp"

namespace bispec::spectral {

using algebra::GaussianRational;
using algebra::Rational;
using algebra::ScalarPoly;

DiffOpZ candidate_operator(const MatPolyX& theta, const MatLaurent& v, int sign) {
  if (theta.dim() != v.dim()) throw DimensionMismatch("theta and V have different dimensions");
  const std::size_t m = theta_degree(theta);
  PVector p = p_vector(theta, v, 1, m + 1);
  for (auto& e : p.entries) e = -e;
  std::vector<RatMatZ> c = algebra::resolvent_solve(build_A1(v, m).dense(), p.entries);
  DiffOpZ op{m, {}};
  op.b.reserve(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    RatMatZ bj = RatMatZ::constant(theta.coeff(j));
    if (sign > 0) {
      bj += c[j];
    } else {
      bj -= c[j];
    }
    op.b.push_back(std::move(bj));
  }
  return op;
}

Synthesis synthesize(const MatPolyX& theta, const MatLaurent& v) {
  const MembershipCertificate cert = membership(theta, v);
  if (!cert.member) throw NotAMember("theta is not in the bispectral algebra (" + to_string(*cert.failed) + ")");
  for (int sign : {1, -1}) {
    DiffOpZ op = candidate_operator(theta, v, sign);
    if (residual_vanishes(lambda_residual(theta, op, v))) return {std::move(op), sign};
  }
  throw SignConventionFailure("no sign convention for B zeroes the residual");
}

DiffOpZ synthesize_B(const MatPolyX& theta, const MatLaurent& v) { return synthesize(theta, v).op; }

DiffOpZ synthesize_B(const MatPolyX& theta, const MatPolyX& v) {
  return synthesize_B(theta, MatLaurent::from_polynomial(v));
}

std::vector<RatMatZ> lambda_residual(const MatPolyX& theta, const DiffOpZ& b, const MatLaurent& v) {
  const std::size_t n = v.dim();
  if (theta.dim() != n || b.dim() != n) throw DimensionMismatch("theta, B and V must share a dimension");
  const std::size_t m = b.order;
  if (b.b.size() != m + 1) throw DimensionMismatch("operator coefficient count does not match its order");
  if (theta_degree(theta) > m) throw DimensionMismatch("operator order is below deg theta");
  const long top = static_cast<long>(m + regular_degree(v));
  const GaussianRational half(Rational(1, 2));
  const ScalarPoly z = ScalarPoly::variable();
  auto bj = [&](long j) { return (j < 0 || j > static_cast<long>(m)) ? RatMatZ(n) : b.b[j]; };
  auto aj = [&](long j) { return j < 0 ? MatC::zero(n) : theta.coeff(static_cast<std::size_t>(j)); };

  std::vector<RatMatZ> out;
  for (long s = -1; s <= top; ++s) {
    RatMatZ r = z * (bj(s) - RatMatZ::constant(aj(s)));
    r += ScalarPoly(GaussianRational(s + 1)) * bj(s + 1);
    RatMatZ pot(n);
    for (long j = 0; j <= static_cast<long>(m) && s - j >= -1; ++j) {
      const MatC& vs = v.coeff(s - j);
      pot += vs * bj(j);
      pot -= RatMatZ::constant(aj(j) * vs);
    }
    r += ScalarPoly(half) * pot;
    out.push_back(std::move(r));
  }
  return out;
}

bool residual_vanishes(const std::vector<RatMatZ>& residual) {
  for (const auto& r : residual) {
    if (!r.is_zero()) return false;
  }
  return true;
}

autonomous::OrderCheck check_physical(const MatLaurent& v, long K) {
  using algebra::BiPoly;
  const std::size_t n = v.dim();
  BiPoly pot = BiPoly::term(v.residue(), -1, 0) + BiPoly::from_x(v.regular_part());
  const GaussianRational half(Rational(1, 2));
  const BiPoly f = BiPoly::term(MatC::identity(n), 0, 1) + half * pot;
  const BiPoly df = f.twisted_d_x();
  const BiPoly l_psi = BiPoly(n) - df.twisted_d_x() + pot.d_x() * f;
  const BiPoly defect = l_psi + f.shift(0, 2);
  for (const auto& [key, c] : defect.terms()) {
    const long s = key.first;
    if (!v.is_terminating() && s > K - 2) continue;
    return {false, s + 2};
  }
  return {};
}

autonomous::OrderCheck check_physical(const MatPolyX& v) { return check_physical(MatLaurent::from_polynomial(v), 0); }

}  // namespace bispec::spectral
