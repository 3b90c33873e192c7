#include "bispec/algebra/gaussian_rational.hpp"

#include <cctype>
#include <sstream>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm_sq();
  if (sgn(n) == 0) throw MathError("division by zero Gaussian rational");
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_real()) {
    if (sgn(rhs.re_) == 0) throw MathError("division by zero Gaussian rational");
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return re_.get_str() + "+" + im_part;
  return re_.get_str() + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational sqrt_upper_bound(const Rational& value) {
  if (sgn(value) < 0) throw MathError("sqrt of a negative rational");
  // floor(sqrt(value * 2^128)) + 1, scaled back by 2^64.
  mpz_class scale = mpz_class(1) << 64;
  mpz_class scaled = (value.get_num() * scale * scale) / value.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root * value.get_den() == value.get_num() * scale * scale) {
    Rational exact(root, scale);
    exact.canonicalize();
    return exact;
  }
  Rational r(root + 1, scale);
  r.canonicalize();
  return r;
}

}  // namespace bispec::algebra
