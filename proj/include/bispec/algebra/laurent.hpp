#pragma once

#include <cstddef>
#include <vector>

#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::algebra {

// Matrix Laurent series with at most a simple pole at the origin:
//   V(x) = residue / x + sum_{k=0}^{K} coeffs[k] x^k (+ unknown tail).
// A terminating series is known exactly: every coefficient above K is zero.
// This is how polynomial potentials, and the pure pole -2I/x, enter the
// bispectral machinery.
class MatLaurent {
 public:
  MatLaurent(MatC residue, std::vector<MatC> coeffs, bool terminating = false);

  static MatLaurent from_polynomial(const MatPolyX& p);
  static MatLaurent exact(const MatC& residue, const MatPolyX& regular);

  std::size_t dim() const { return residue_.rows(); }
  const MatC& residue() const { return residue_; }
  const std::vector<MatC>& coeffs() const { return coeffs_; }
  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  bool is_terminating() const { return terminating_; }
  bool has_pole() const { return !residue_.is_zero(); }

  // V_j for j >= -1. Zero above the stored range for terminating series;
  // throws TruncationExceeded otherwise.
  const MatC& coeff(long j) const;
  // Highest index that carries a known value (for terminating series the
  // largest nonzero index, or -1 if the regular part vanishes).
  long last_known_nonzero() const;

  // The regular part sum_k V_k x^k as a polynomial (truncated).
  MatPolyX regular_part() const;
  // x V(x), a genuine power series: V_{-1} + V_0 x + V_1 x^2 + ...
  MatPolyX times_x() const;

  friend bool operator==(const MatLaurent& a, const MatLaurent& b) {
    return a.residue_ == b.residue_ && a.coeffs_ == b.coeffs_ && a.terminating_ == b.terminating_;
  }

 private:
  MatC residue_;
  std::vector<MatC> coeffs_;
  bool terminating_;
  MatC zero_;
};

}  // namespace bispec::algebra
