#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::algebra {

// Finite sum  sum_{s,t} C_{s,t} x^s z^t  with N x N matrix coefficients,
// Laurent in x (s may be negative) and polynomial in z. Functions of the form
// e^{xz} F(x, z) are manipulated through F alone; see the e^{xz}-twisted
// derivatives below.
class BiPoly {
 public:
  using Key = std::pair<long, long>;  // (x exponent, z exponent)

  explicit BiPoly(std::size_t dim) : dim_(dim) {}
  static BiPoly term(const MatC& c, long xs, long zt);
  // p(x) viewed as a function of (x, z).
  static BiPoly from_x(const MatPolyX& p, long x_shift = 0);
  // p(z) viewed as a function of (x, z).
  static BiPoly from_z(const MatPolyZ& p);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, MatC>& terms() const { return terms_; }
  MatC coeff(long xs, long zt) const;

  void add_term(const MatC& c, long xs, long zt);

  BiPoly d_x() const;
  BiPoly d_z() const;
  BiPoly shift(long dx, long dz) const;
  // F -> e^{-xz} d/dx (e^{xz} F) = zF + F_x.
  BiPoly twisted_d_x() const { return shift(0, 1) + d_x(); }
  // F -> e^{-xz} d/dz (e^{xz} F) = xF + F_z.
  BiPoly twisted_d_z() const { return shift(1, 0) + d_z(); }

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const GaussianRational& c, const BiPoly& p);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  // Lowest (x, z) key with a nonzero coefficient, in lexicographic order.
  std::optional<Key> first_nonzero() const;

 private:
  std::size_t dim_;
  std::map<Key, MatC> terms_;
};

}  // namespace bispec::algebra
