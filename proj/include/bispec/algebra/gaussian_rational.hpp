#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace bispec::algebra {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q", with q > 0 and gcd(p, q) = 1.
std::string format_rational(const Rational& value);

// Exact complex number a + b·i with a, b in Q.
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral T>
  GaussianRational(T re) : re_(static_cast<long>(re)) {}  // NOLINT: implicit by intent
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational parse(std::string_view re, std::string_view im);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2, always rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Human-readable form: "3/2", "-i", "1/2+3i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

GaussianRational pow(const GaussianRational& base, unsigned exponent);

// Rational r >= sqrt(value), within 2^-64 of the true root. value >= 0.
Rational sqrt_upper_bound(const Rational& value);

}  // namespace bispec::algebra
