#pragma once

#include <cstddef>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::spectral {

using algebra::GaussianRational;
using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;
using algebra::Rational;

// P_k(theta) = k a_k - 1/2 sum_{j=0}^{k} [a_j, V_{k-1-j}], with a_j the
// Taylor coefficients of theta at 0. P_0 = 1/2 [V_{-1}, a_0].
MatC p_k(const MatPolyX& theta, const MatLaurent& v, std::size_t k);

// The same value computed as k a_k + 1/2 [x^k] (x V theta - theta x V) by
// polynomial products.
MatC p_k_operator_form(const MatPolyX& theta, const MatLaurent& v, std::size_t k);
bool p_operator_form_check(const MatPolyX& theta, const MatLaurent& v, std::size_t k);

// P_k(t1 t2) = sum_{s<=k} P_{k-s}(t1) b_s + a_s P_{k-s}(t2), where a, b are
// the coefficients of t1, t2.
bool product_formula_check(const MatPolyX& theta1, const MatPolyX& theta2, const MatLaurent& v, std::size_t k);

}  // namespace bispec::spectral
