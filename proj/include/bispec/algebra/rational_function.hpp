#pragma once

#include <optional>
#include <string>

#include "bispec/algebra/matrix.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::algebra {

// Matrix-valued rational function of z: numerator(z) / denominator(z) with
// a scalar denominator. Always kept reduced: the denominator is monic and
// coprime to the gcd of the numerator's entry polynomials. The zero
// function is 0 / 1.
class RatMatZ {
 public:
  explicit RatMatZ(std::size_t dim) : num_(dim), den_(GaussianRational(1)) {}
  RatMatZ(MatPolyZ numerator, ScalarPoly denominator);
  static RatMatZ constant(const MatC& c) { return {MatPolyZ::constant(c), ScalarPoly(GaussianRational(1))}; }

  std::size_t dim() const { return num_.dim(); }
  const MatPolyZ& numerator() const { return num_; }
  const ScalarPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Entrywise limit z -> infinity; nullopt when some entry diverges.
  std::optional<MatC> limit_at_infinity() const;
  // Throws EvalAtPole when z is a root of the denominator.
  MatC evaluate(const GaussianRational& z) const;

  RatMatZ& operator+=(const RatMatZ& rhs);
  RatMatZ& operator-=(const RatMatZ& rhs);
  friend RatMatZ operator+(RatMatZ a, const RatMatZ& b) { return a += b; }
  friend RatMatZ operator-(RatMatZ a, const RatMatZ& b) { return a -= b; }
  friend RatMatZ operator*(const RatMatZ& a, const RatMatZ& b);
  friend RatMatZ operator*(const MatC& a, const RatMatZ& f);
  friend RatMatZ operator*(const RatMatZ& f, const MatC& a);
  friend RatMatZ operator*(const ScalarPoly& s, const RatMatZ& f);
  friend bool operator==(const RatMatZ& a, const RatMatZ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void normalize();
  MatPolyZ num_;
  ScalarPoly den_;
};

}  // namespace bispec::algebra
