#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/spectral/operator.hpp"

namespace bispec::verify {

using algebra::GaussianRational;
using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;
using spectral::DiffOpZ;

struct Discrepancy {
  std::string location;
  std::string expected;
  std::string got;
};

struct OracleReport {
  std::string name;
  bool passed = true;
  std::optional<Discrepancy> discrepancy;

  // Records the first failure only.
  void fail(std::string location, std::string expected, std::string got);
};

// Taylor coefficients c_0..c_K of -2 l tanh(l x) with l^2 = -v1/2, from the
// recurrence (n+1) t_{n+1} = [n = 0] - sum_{i+j=n} t_i t_j for tanh.
std::vector<GaussianRational> scalar_tanh_series(const GaussianRational& v1, std::size_t K);

// Closed forms for V = -2I/x: powers of A1^[m], membership of x^l E_pq for
// l <= m, and the b_j of synthesized operators.
OracleReport residue_case_closed_forms(std::size_t m, std::size_t n = 1);

// Expands e^{-xz} D(z) (psi B - theta psi) as a finite sum of x^s z^t terms,
// D being a common denominator of the b_j, and reports the first
// coefficient that does not cancel. Terms with s > K are ignored unless v is
// exact.
OracleReport expand_bispectral_identity(const MatPolyX& theta, const DiffOpZ& b, const MatLaurent& v, long K);

}  // namespace bispec::verify
