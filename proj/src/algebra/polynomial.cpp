#include "bispec/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

std::string degree_to_string(Degree d) { return d ? std::to_string(*d) : std::string("-inf"); }

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly::ScalarPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ScalarPoly::ScalarPoly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

ScalarPoly ScalarPoly::monomial(const GaussianRational& c, std::size_t k) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return ScalarPoly(std::move(v));
}

void ScalarPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree ScalarPoly::degree() const {
  if (coeffs_.empty()) return kMinusInfinity;
  return coeffs_.size() - 1;
}

GaussianRational ScalarPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
}

const GaussianRational& ScalarPoly::leading() const {
  if (coeffs_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

ScalarPoly ScalarPoly::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> v = coeffs_;
  for (auto& c : v) c *= inv;
  return ScalarPoly(std::move(v));
}

ScalarPoly ScalarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return ScalarPoly(std::move(v));
}

GaussianRational ScalarPoly::evaluate(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ScalarPoly(std::move(v));
}

ScalarPoly ScalarPoly::operator-() const {
  std::vector<GaussianRational> v = coeffs_;
  for (auto& c : v) c = -c;
  return ScalarPoly(std::move(v));
}

std::string ScalarPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k] << ")";
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coeffs();
  const auto& div = b.coeffs();
  if (rem.size() < div.size()) return {ScalarPoly(), a};
  std::vector<GaussianRational> quot(rem.size() - div.size() + 1);
  GaussianRational lead_inv = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational q = rem[k + div.size() - 1] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
    quot[k] = std::move(q);
  }
  rem.resize(div.size() - 1);
  return {ScalarPoly(std::move(quot)), ScalarPoly(std::move(rem))};
}

ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly x = a;
  ScalarPoly y = b;
  while (!y.is_zero()) {
    ScalarPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ------------------------------------------------------------------- MatPoly

MatPoly::MatPoly(std::size_t dim, std::vector<MatC> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.rows() != dim_ || c.cols() != dim_) throw DimensionMismatch("matrix polynomial coefficient has wrong shape");
  }
  normalize();
}

MatPoly MatPoly::constant(const MatC& c) {
  if (!c.is_square()) throw DimensionMismatch("matrix polynomial coefficients must be square");
  return MatPoly(c.rows(), {c});
}

MatPoly MatPoly::monomial(const MatC& c, std::size_t k) {
  if (!c.is_square()) throw DimensionMismatch("matrix polynomial coefficients must be square");
  std::vector<MatC> v(k + 1, MatC::zero(c.rows()));
  v[k] = c;
  return MatPoly(c.rows(), std::move(v));
}

MatPoly MatPoly::from_entries(std::size_t dim, const std::vector<ScalarPoly>& entries) {
  if (entries.size() != dim * dim) throw DimensionMismatch("from_entries: wrong entry count");
  std::size_t len = 0;
  for (const auto& e : entries) len = std::max(len, e.coeffs().size());
  std::vector<MatC> v(len, MatC::zero(dim));
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const auto& cs = entries[idx].coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) v[k](idx / dim, idx % dim) = cs[k];
  }
  return MatPoly(dim, std::move(v));
}

void MatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree MatPoly::degree() const {
  if (coeffs_.empty()) return kMinusInfinity;
  return coeffs_.size() - 1;
}

const MatC& MatPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }

ScalarPoly MatPoly::entry(std::size_t r, std::size_t c) const {
  std::vector<GaussianRational> v;
  v.reserve(coeffs_.size());
  for (const auto& m : coeffs_) v.push_back(m(r, c));
  return ScalarPoly(std::move(v));
}

MatPoly MatPoly::derivative() const {
  if (coeffs_.size() <= 1) return MatPoly(dim_);
  std::vector<MatC> v;
  v.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  return MatPoly(dim_, std::move(v));
}

MatC MatPoly::evaluate(const GaussianRational& x) const {
  MatC acc = MatC::zero(dim_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MatPoly MatPoly::shift(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<MatC> v(k, MatC::zero(dim_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return MatPoly(dim_, std::move(v));
}

MatPoly& MatPoly::operator+=(const MatPoly& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatch("matrix polynomial dimensions differ");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), MatC::zero(dim_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatch("matrix polynomial dimensions differ");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), MatC::zero(dim_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix polynomial dimensions differ");
  if (a.is_zero() || b.is_zero()) return MatPoly(a.dim_);
  std::vector<MatC> v(a.coeffs_.size() + b.coeffs_.size() - 1, MatC::zero(a.dim_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return MatPoly(a.dim_, std::move(v));
}

MatPoly operator*(const MatC& a, const MatPoly& p) {
  std::vector<MatC> v;
  v.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) v.push_back(a * c);
  return MatPoly(p.dim_, std::move(v));
}

MatPoly operator*(const MatPoly& p, const MatC& a) {
  std::vector<MatC> v;
  v.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) v.push_back(c * a);
  return MatPoly(p.dim_, std::move(v));
}

MatPoly operator*(const GaussianRational& c, const MatPoly& p) {
  std::vector<MatC> v;
  v.reserve(p.coeffs_.size());
  for (const auto& m : p.coeffs_) v.push_back(m * c);
  return MatPoly(p.dim_, std::move(v));
}

MatPoly operator*(const ScalarPoly& s, const MatPoly& p) {
  if (s.is_zero() || p.is_zero()) return MatPoly(p.dim_);
  const auto& sc = s.coeffs();
  std::vector<MatC> v(sc.size() + p.coeffs_.size() - 1, MatC::zero(p.dim_));
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (sc[i].is_zero()) continue;
    for (std::size_t j = 0; j < p.coeffs_.size(); ++j) v[i + j] += p.coeffs_[j] * sc[i];
  }
  return MatPoly(p.dim_, std::move(v));
}

MatPoly polyx_derivative(const MatPoly& p) { return p.derivative(); }
MatPoly polyx_mul(const MatPoly& p, const MatPoly& q) { return p * q; }
MatPoly polyx_commutator(const MatPoly& p, const MatPoly& q) { return p * q - q * p; }

}  // namespace bispec::algebra
