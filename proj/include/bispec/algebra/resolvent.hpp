#pragma once

#include <span>
#include <vector>

#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/algebra/rational_function.hpp"

namespace bispec::algebra {

// det(zI + A) and adj(zI + A) = sum_k adjugate[k] z^k, by the
// Faddeev-LeVerrier recurrence.
struct ShiftedAdjugate {
  ScalarPoly determinant;
  std::vector<MatC> adjugate;
};

ShiftedAdjugate shifted_adjugate(const MatC& a);

// Solves (A + zI) c(z) = rhs over Q(i)(z), with A of size (m+1)N and rhs
// given as m+1 stacked N x N blocks. Each returned block is reduced
// independently.
std::vector<RatMatZ> resolvent_solve(const MatC& a, std::span<const MatC> rhs);

}  // namespace bispec::algebra
