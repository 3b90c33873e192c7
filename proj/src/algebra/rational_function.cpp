#include "bispec/algebra/rational_function.hpp"

#include <sstream>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

RatMatZ::RatMatZ(MatPolyZ numerator, ScalarPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void RatMatZ::normalize() {
  if (num_.is_zero()) {
    den_ = ScalarPoly(GaussianRational(1));
    return;
  }
  ScalarPoly g = den_;
  const std::size_t n = num_.dim();
  for (std::size_t r = 0; r < n && g.degree() > Degree(0); ++r)
    for (std::size_t c = 0; c < n && g.degree() > Degree(0); ++c) g = gcd(g, num_.entry(r, c));
  // g is monic; fold the denominator's leading coefficient into the numerator.
  GaussianRational lead_inv = den_.leading().inverse();
  if (g.degree() > Degree(0)) {
    std::vector<ScalarPoly> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) entries.push_back(divmod(num_.entry(r, c), g).first);
    num_ = MatPolyZ::from_entries(n, entries);
    den_ = divmod(den_, g).first;
    lead_inv = den_.leading().inverse();
  }
  num_ = lead_inv * num_;
  den_ = den_.monic();
}

std::optional<MatC> RatMatZ::limit_at_infinity() const {
  const std::size_t dd = *den_.degree();
  if (num_.is_zero()) return MatC::zero(dim());
  if (*num_.degree() > dd) return std::nullopt;
  // den_ is monic, so the limit is the numerator coefficient at z^dd.
  return num_.coeff(dd);
}

MatC RatMatZ::evaluate(const GaussianRational& z) const {
  GaussianRational d = den_.evaluate(z);
  if (d.is_zero()) throw EvalAtPole("rational function evaluated at a pole z = " + z.to_string());
  return num_.evaluate(z) * d.inverse();
}

RatMatZ& RatMatZ::operator+=(const RatMatZ& rhs) {
  if (rhs.dim() != dim()) throw DimensionMismatch("rational function dimensions differ");
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    *this = RatMatZ(num_ + rhs.num_, den_);
  } else {
    *this = RatMatZ(rhs.den_ * num_ + den_ * rhs.num_, den_ * rhs.den_);
  }
  return *this;
}

RatMatZ& RatMatZ::operator-=(const RatMatZ& rhs) {
  if (rhs.dim() != dim()) throw DimensionMismatch("rational function dimensions differ");
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    *this = RatMatZ(num_ - rhs.num_, den_);
  } else {
    *this = RatMatZ(rhs.den_ * num_ - den_ * rhs.num_, den_ * rhs.den_);
  }
  return *this;
}

RatMatZ operator*(const RatMatZ& a, const RatMatZ& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
RatMatZ operator*(const MatC& a, const RatMatZ& f) { return {a * f.num_, f.den_}; }
RatMatZ operator*(const RatMatZ& f, const MatC& a) { return {f.num_ * a, f.den_}; }
RatMatZ operator*(const ScalarPoly& s, const RatMatZ& f) { return {s * f.num_, f.den_}; }

std::string RatMatZ::to_string() const {
  std::ostringstream os;
  const std::size_t n = dim();
  os << "[";
  for (std::size_t r = 0; r < n; ++r) {
    if (r) os << ", ";
    os << "[";
    for (std::size_t c = 0; c < n; ++c) {
      if (c) os << ", ";
      os << num_.entry(r, c).to_string();
    }
    os << "]";
  }
  os << "] / (" << den_.to_string() << ")";
  return os.str();
}

}  // namespace bispec::algebra
