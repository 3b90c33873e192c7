#pragma once

#include <cstddef>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/autonomous/seed.hpp"

namespace bispec::autonomous {

using algebra::MatLaurent;
using algebra::MatPolyX;

// T_k(a) = k(k-1) a + V_{-1} a - k a V_{-1}.
MatC tk_apply(long k, const MatC& a, const MatC& vm1);

// Inverse of T_k in the canonical basis diag(-2 I_m, 0), blockwise.
// Throws KNotInvertible for k < 3.
MatC tk_inverse(long k, const MatC& b, std::size_t m);

// V_2 from T_2(V_2) = V_1 V_0, with the kernel block set to seed.V212.
MatC solve_v2(const SeedData& seed);

// V_k = sum_{j=1}^{k-1} j T_k^{-1}(V_j V_{k-1-j}) for 3 <= k <= K, from
// explicit V_0, V_1, V_2 in the canonical basis of `form`.
MatLaurent recurse_from_initial(const ResidueForm& form, const MatC& v0, const MatC& v1, const MatC& v2,
                                std::size_t K);

// Truncated Laurent solution through x^K in the canonical basis. The result
// is marked terminating once the recursion provably produces only zeros.
MatLaurent recurse_coefficients(const SeedData& seed, std::size_t K);

// Conjugates every coefficient back to the caller's basis.
MatLaurent to_original_basis(const MatLaurent& v, const ResidueForm& form);

// Polynomial solution grown from the seed (m = 0, V_0 = 0, V_1). Throws
// NotNilpotent unless V1^N = 0.
MatPolyX build_polynomial_solution(const MatC& v1, std::size_t max_order);

bool is_nilpotent(const MatC& a);

}  // namespace bispec::autonomous
