#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/autonomous/checks.hpp"

namespace bispec::spectral {

using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;

enum class FailedCondition { P0, ResidueRow, A2Chain, PTail, CommutatorDegree };

std::string to_string(FailedCondition c);

struct MembershipCertificate {
  MatPolyX theta;
  bool member = true;
  std::optional<FailedCondition> failed;
  std::optional<std::size_t> k;  // chain power or P index, when meaningful
  std::optional<MatC> witness;
};

// Decides whether theta lies in the bispectral algebra of the exactly known
// potential v (polynomial, optionally with a simple pole). Checks, in order:
// P_0 = 0; V_{-1} (A1^k P)_1 = 0 and A2 A1^k P = 0 for k < (m+1)N; and
// P_k = 0 on the window m+2 .. m+n+1. Throws PotentialNotAutonomous if v
// does not solve V'' = V'V.
MembershipCertificate membership(const MatPolyX& theta, const MatLaurent& v);
MembershipCertificate membership(const MatPolyX& theta, const MatPolyX& v);

// x[theta, V] is a polynomial of degree <= m+1 with zero constant term; for
// pole-free V this says deg [theta, V] <= m.
bool commutator_degree_check(const MatPolyX& theta, const MatLaurent& v);
bool commutator_degree_check(const MatPolyX& theta, const MatPolyX& v);

// A2^[n] (A1^[n])^k P_1^{n+1}(V) = 0 for 0 <= k <= K, with n = deg V.
autonomous::OrderCheck subindex_invariant_check(const MatPolyX& v, std::size_t K);

// Degree of theta with the zero polynomial counted as degree 0.
std::size_t theta_degree(const MatPolyX& theta);

}  // namespace bispec::spectral
