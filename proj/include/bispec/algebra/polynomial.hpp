#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bispec/algebra/gaussian_rational.hpp"
#include "bispec/algebra/matrix.hpp"

namespace bispec::algebra {

// Polynomial degree; std::nullopt stands for the degree of the zero
// polynomial (minus infinity). It orders below every finite degree, so
// `deg <= m` reads correctly for the zero polynomial too.
using Degree = std::optional<std::size_t>;

inline constexpr Degree kMinusInfinity = std::nullopt;

std::string degree_to_string(Degree d);

// Univariate polynomial with Gaussian-rational coefficients, used for
// denominators in z. Trailing zero coefficients are always stripped.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<GaussianRational> coeffs);
  ScalarPoly(GaussianRational c);  // NOLINT: constants promote implicitly

  // c * z^k
  static ScalarPoly monomial(const GaussianRational& c, std::size_t k);
  static ScalarPoly variable() { return monomial(GaussianRational(1), 1); }

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  GaussianRational coeff(std::size_t k) const;
  const GaussianRational& leading() const;

  ScalarPoly monic() const;
  ScalarPoly derivative() const;
  GaussianRational evaluate(const GaussianRational& z) const;

  ScalarPoly& operator+=(const ScalarPoly& rhs);
  ScalarPoly& operator-=(const ScalarPoly& rhs);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  ScalarPoly operator-() const;
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'z') const;

 private:
  void normalize();
  std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder; throws MathError for a zero divisor.
std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b);
// Monic gcd; gcd(0, 0) = 0.
ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b);

// Polynomial with square N x N matrix coefficients. The same type serves
// as a polynomial in x (potentials, theta) and in z (numerators of
// resolvent entries); see the MatPolyX / MatPolyZ aliases.
class MatPoly {
 public:
  explicit MatPoly(std::size_t dim) : dim_(dim) {}
  MatPoly(std::size_t dim, std::vector<MatC> coeffs);
  static MatPoly constant(const MatC& c);
  // c * x^k
  static MatPoly monomial(const MatC& c, std::size_t k);
  // Assemble from per-entry scalar polynomials (row-major, dim*dim of them).
  static MatPoly from_entries(std::size_t dim, const std::vector<ScalarPoly>& entries);

  std::size_t dim() const { return dim_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MatC>& coeffs() const { return coeffs_; }
  // Coefficient of x^k; the zero matrix beyond the degree.
  const MatC& coeff(std::size_t k) const;
  ScalarPoly entry(std::size_t r, std::size_t c) const;

  MatPoly derivative() const;
  MatC evaluate(const GaussianRational& x) const;
  // Multiply by x^k.
  MatPoly shift(std::size_t k) const;

  MatPoly& operator+=(const MatPoly& rhs);
  MatPoly& operator-=(const MatPoly& rhs);
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const MatC& a, const MatPoly& p);
  friend MatPoly operator*(const MatPoly& p, const MatC& a);
  friend MatPoly operator*(const GaussianRational& c, const MatPoly& p);
  friend MatPoly operator*(const ScalarPoly& s, const MatPoly& p);
  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::size_t dim_;
  std::vector<MatC> coeffs_;
  MatC zero_{dim_, dim_};
};

using MatPolyX = MatPoly;
using MatPolyZ = MatPoly;

MatPoly polyx_derivative(const MatPoly& p);
MatPoly polyx_mul(const MatPoly& p, const MatPoly& q);
// [p, q] = pq - qp.
MatPoly polyx_commutator(const MatPoly& p, const MatPoly& q);

}  // namespace bispec::algebra
