#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bispec/algebra/gaussian_rational.hpp"

namespace bispec::algebra {

// Dense row-major matrix over Q(i). Zero-sized shapes are allowed so that
// empty off-diagonal blocks (e.g. when a block partition is trivial) stay
// representable.
class MatC {
 public:
  MatC() = default;
  MatC(std::size_t rows, std::size_t cols);
  MatC(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static MatC zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static MatC zero(std::size_t n) { return {n, n}; }
  static MatC identity(std::size_t n);
  static MatC scalar(std::size_t n, const GaussianRational& c);
  // Matrix unit E_{row,col}.
  static MatC unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  // Position of the first nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  MatC transpose() const;
  MatC block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const MatC& b);

  MatC& operator+=(const MatC& rhs);
  MatC& operator-=(const MatC& rhs);
  MatC& operator*=(const GaussianRational& c);

  friend bool operator==(const MatC& a, const MatC& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

MatC operator+(MatC lhs, const MatC& rhs);
MatC operator-(MatC lhs, const MatC& rhs);
MatC operator-(const MatC& m);
MatC operator*(const MatC& lhs, const MatC& rhs);
MatC operator*(MatC m, const GaussianRational& c);
MatC operator*(const GaussianRational& c, MatC m);

MatC mat_add(const MatC& a, const MatC& b);
MatC mat_mul(const MatC& a, const MatC& b);
MatC mat_scale(const MatC& a, const GaussianRational& c);

// [a, b] = ab - ba.
MatC commutator(const MatC& a, const MatC& b);
MatC pow(const MatC& m, unsigned exponent);
GaussianRational trace(const MatC& m);

// Sum of |entry|^2; the squared Frobenius norm, exact.
Rational frobenius_norm_sq(const MatC& m);

// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(MatC& m);
std::size_t rank(MatC m);
// Basis of {v : m v = 0} as columns of the result (cols = nullity).
MatC null_space(const MatC& m);
// Throws SingularMatrix.
MatC inverse(const MatC& m);
// Some X with a X = b, or nullopt when the system is inconsistent.
std::optional<MatC> solve_left(const MatC& a, const MatC& b);

std::ostream& operator<<(std::ostream& os, const MatC& m);

}  // namespace bispec::algebra
