#pragma once

#include <cstddef>
#include <vector>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/algebra/rational_function.hpp"
#include "bispec/autonomous/checks.hpp"

namespace bispec::spectral {

using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;
using algebra::RatMatZ;

// B = sum_j d_z^j . b_j(z), acting on the right of functions of z.
struct DiffOpZ {
  std::size_t order = 0;
  std::vector<RatMatZ> b;

  std::size_t dim() const { return b.empty() ? 0 : b.front().dim(); }
  friend bool operator==(const DiffOpZ& l, const DiffOpZ& r) { return l.order == r.order && l.b == r.b; }
};

// b_j = a_j + sign c_j with (A1 + zI) c = -P_1^{m+1}(theta). No membership
// check; used to show that non-members yield a nonzero residual.
DiffOpZ candidate_operator(const MatPolyX& theta, const MatLaurent& v, int sign = 1);

struct Synthesis {
  DiffOpZ op;
  int sign = 1;  // -1 when only the opposite convention zeroed the residual
};

// Throws NotAMember for non-members and SignConventionFailure if neither
// sign zeroes the residual.
Synthesis synthesize(const MatPolyX& theta, const MatLaurent& v);
DiffOpZ synthesize_B(const MatPolyX& theta, const MatLaurent& v);
DiffOpZ synthesize_B(const MatPolyX& theta, const MatPolyX& v);

// x^s coefficients, s = -1 .. m+n, of
//   e^{-xz}(psi B - theta psi) = sum_j (x^j z + j x^{j-1} + V x^j / 2) b_j
//                               - sum_j a_j x^j (z + V/2).
std::vector<RatMatZ> lambda_residual(const MatPolyX& theta, const DiffOpZ& b, const MatLaurent& v);
bool residual_vanishes(const std::vector<RatMatZ>& residual);

// e^{-xz}(L psi + z^2 psi) = 0 for psi = (zI + V/2) e^{xz} and
// L = -d_x^2 + V'. Compares x^s coefficients up to s = K - 2 unless v is
// exact. The failing order is reported as s + 2.
autonomous::OrderCheck check_physical(const MatLaurent& v, long K);
autonomous::OrderCheck check_physical(const MatPolyX& v);

}  // namespace bispec::spectral
