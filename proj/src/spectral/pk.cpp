#include "bispec/spectral/pk.hpp"

#include "bispec/algebra/error.hpp"

namespace bispec::spectral {
namespace {

void check_dims(const MatPolyX& theta, const MatLaurent& v) {
  if (theta.dim() != v.dim()) throw DimensionMismatch("theta and V have different dimensions");
}

}  // namespace

MatC p_k(const MatPolyX& theta, const MatLaurent& v, std::size_t k) {
  check_dims(theta, v);
  const long kk = static_cast<long>(k);
  MatC out = theta.coeff(k) * GaussianRational(kk);
  MatC sum = MatC::zero(v.dim());
  for (std::size_t j = 0; j <= k; ++j) sum += algebra::commutator(theta.coeff(j), v.coeff(kk - 1 - static_cast<long>(j)));
  out -= sum * GaussianRational(Rational(1, 2));
  return out;
}

MatC p_k_operator_form(const MatPolyX& theta, const MatLaurent& v, std::size_t k) {
  check_dims(theta, v);
  if (k > v.truncation_order() + 1 && !v.is_terminating()) {
    throw TruncationExceeded("P_k needs V through x^{k-1}");
  }
  const MatPolyX xv = v.times_x();
  const MatPolyX twisted = algebra::polyx_mul(xv, theta) - algebra::polyx_mul(theta, xv);
  return theta.coeff(k) * GaussianRational(static_cast<long>(k)) + twisted.coeff(k) * GaussianRational(Rational(1, 2));
}

bool p_operator_form_check(const MatPolyX& theta, const MatLaurent& v, std::size_t k) {
  return p_k(theta, v, k) == p_k_operator_form(theta, v, k);
}

bool product_formula_check(const MatPolyX& theta1, const MatPolyX& theta2, const MatLaurent& v, std::size_t k) {
  const MatC lhs = p_k(algebra::polyx_mul(theta1, theta2), v, k);
  MatC rhs = MatC::zero(v.dim());
  for (std::size_t s = 0; s <= k; ++s) {
    rhs += p_k(theta1, v, k - s) * theta2.coeff(s);
    rhs += theta1.coeff(s) * p_k(theta2, v, k - s);
  }
  return lhs == rhs;
}

}  // namespace bispec::spectral
