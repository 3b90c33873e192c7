#include "bispec/algebra/bivariate.hpp"

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

BiPoly BiPoly::term(const MatC& c, long xs, long zt) {
  BiPoly p(c.rows());
  p.add_term(c, xs, zt);
  return p;
}

BiPoly BiPoly::from_x(const MatPolyX& p, long x_shift) {
  BiPoly out(p.dim());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term(p.coeffs()[k], static_cast<long>(k) + x_shift, 0);
  return out;
}

BiPoly BiPoly::from_z(const MatPolyZ& p) {
  BiPoly out(p.dim());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term(p.coeffs()[k], 0, static_cast<long>(k));
  return out;
}

MatC BiPoly::coeff(long xs, long zt) const {
  auto it = terms_.find({xs, zt});
  return it == terms_.end() ? MatC::zero(dim_) : it->second;
}

void BiPoly::add_term(const MatC& c, long xs, long zt) {
  if (c.rows() != dim_ || c.cols() != dim_) throw DimensionMismatch("BiPoly term has the wrong dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({xs, zt}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::d_x() const {
  BiPoly out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key.first != 0) out.add_term(c * GaussianRational(key.first), key.first - 1, key.second);
  }
  return out;
}

BiPoly BiPoly::d_z() const {
  BiPoly out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key.second != 0) out.add_term(c * GaussianRational(key.second), key.first, key.second - 1);
  }
  return out;
}

BiPoly BiPoly::shift(long dx, long dz) const {
  BiPoly out(dim_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.first + dx, key.second + dz}, c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatch("BiPoly dimensions differ");
  for (const auto& [key, c] : rhs.terms_) add_term(c, key.first, key.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatch("BiPoly dimensions differ");
  for (const auto& [key, c] : rhs.terms_) add_term(-c, key.first, key.second);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("BiPoly dimensions differ");
  BiPoly out(a.dim_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return out;
}

BiPoly operator*(const GaussianRational& c, const BiPoly& p) {
  BiPoly out(p.dim_);
  if (c.is_zero()) return out;
  for (const auto& [key, m] : p.terms_) out.terms_.emplace(key, m * c);
  return out;
}

std::optional<BiPoly::Key> BiPoly::first_nonzero() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

}  // namespace bispec::algebra
