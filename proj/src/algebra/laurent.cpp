#include "bispec/algebra/laurent.hpp"

#include <string>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

MatLaurent::MatLaurent(MatC residue, std::vector<MatC> coeffs, bool terminating)
    : residue_(std::move(residue)), coeffs_(std::move(coeffs)), terminating_(terminating) {
  if (!residue_.is_square()) throw DimensionMismatch("Laurent residue must be square");
  const std::size_t n = residue_.rows();
  if (coeffs_.empty()) coeffs_.push_back(MatC::zero(n));
  for (const auto& c : coeffs_) {
    if (c.rows() != n || c.cols() != n) throw DimensionMismatch("Laurent coefficients must match the residue size");
  }
  zero_ = MatC::zero(n);
}

MatLaurent MatLaurent::from_polynomial(const MatPolyX& p) { return exact(MatC::zero(p.dim()), p); }

MatLaurent MatLaurent::exact(const MatC& residue, const MatPolyX& regular) {
  if (residue.rows() != regular.dim()) throw DimensionMismatch("Laurent residue and regular part differ in size");
  return MatLaurent(residue, regular.coeffs(), true);
}

const MatC& MatLaurent::coeff(long j) const {
  if (j < -1) return zero_;
  if (j == -1) return residue_;
  const auto k = static_cast<std::size_t>(j);
  if (k < coeffs_.size()) return coeffs_[k];
  if (terminating_) return zero_;
  throw TruncationExceeded("coefficient V_" + std::to_string(j) + " beyond truncation order " +
                           std::to_string(truncation_order()));
}

long MatLaurent::last_known_nonzero() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (!coeffs_[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

MatPolyX MatLaurent::regular_part() const { return MatPolyX(dim(), coeffs_); }

MatPolyX MatLaurent::times_x() const {
  std::vector<MatC> c;
  c.reserve(coeffs_.size() + 1);
  c.push_back(residue_);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return MatPolyX(dim(), std::move(c));
}

}  // namespace bispec::algebra
