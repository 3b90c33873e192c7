#include "bispec/algebra/matrix.hpp"

#include <sstream>

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

namespace {

void require_same_shape(const MatC& a, const MatC& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

MatC::MatC(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

MatC::MatC(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

MatC MatC::identity(std::size_t n) { return scalar(n, GaussianRational(1)); }

MatC MatC::scalar(std::size_t n, const GaussianRational& c) {
  MatC m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

MatC MatC::unit(std::size_t n, std::size_t row, std::size_t col) {
  MatC m(n, n);
  m(row, col) = 1;
  return m;
}

bool MatC::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> MatC::first_nonzero() const {
  for (std::size_t idx = 0; idx < data_.size(); ++idx) {
    if (!data_[idx].is_zero()) return std::pair{idx / cols_, idx % cols_};
  }
  return std::nullopt;
}

MatC MatC::transpose() const {
  MatC t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatC MatC::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("block out of range");
  MatC b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

void MatC::set_block(std::size_t row0, std::size_t col0, const MatC& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(row0 + r, col0 + c) = b(r, c);
}

MatC& MatC::operator+=(const MatC& rhs) {
  require_same_shape(*this, rhs, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

MatC& MatC::operator-=(const MatC& rhs) {
  require_same_shape(*this, rhs, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

MatC& MatC::operator*=(const GaussianRational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

std::string MatC::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

MatC operator+(MatC lhs, const MatC& rhs) { return lhs += rhs; }
MatC operator-(MatC lhs, const MatC& rhs) { return lhs -= rhs; }
MatC operator-(const MatC& m) { return m * GaussianRational(-1); }

MatC operator*(const MatC& lhs, const MatC& rhs) {
  if (lhs.cols() != rhs.rows()) {
    std::ostringstream msg;
    msg << "mul: " << lhs.rows() << "x" << lhs.cols() << " times " << rhs.rows() << "x" << rhs.cols();
    throw DimensionMismatch(msg.str());
  }
  MatC out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const auto& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        const auto& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

MatC operator*(MatC m, const GaussianRational& c) { return m *= c; }
MatC operator*(const GaussianRational& c, MatC m) { return m *= c; }

MatC mat_add(const MatC& a, const MatC& b) { return a + b; }
MatC mat_mul(const MatC& a, const MatC& b) { return a * b; }
MatC mat_scale(const MatC& a, const GaussianRational& c) { return a * c; }

MatC commutator(const MatC& a, const MatC& b) { return a * b - b * a; }

MatC pow(const MatC& m, unsigned exponent) {
  if (!m.is_square()) throw DimensionMismatch("pow of a non-square matrix");
  MatC result = MatC::identity(m.rows());
  MatC base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GaussianRational trace(const MatC& m) {
  if (!m.is_square()) throw DimensionMismatch("trace of a non-square matrix");
  GaussianRational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Rational frobenius_norm_sq(const MatC& m) {
  Rational sum(0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) sum += m(r, c).norm_sq();
  return sum;
}

std::vector<std::size_t> rref_in_place(MatC& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    GaussianRational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussianRational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(MatC m) { return rref_in_place(m).size(); }

MatC null_space(const MatC& m) {
  MatC reduced = m;
  auto pivots = rref_in_place(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  MatC basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], k) = -reduced(p, f);
  }
  return basis;
}

MatC inverse(const MatC& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  MatC aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, MatC::identity(n));
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  return aug.block(0, n, n, n);
}

std::optional<MatC> solve_left(const MatC& a, const MatC& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_left: row counts differ");
  MatC aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  auto pivots = rref_in_place(aug);
  MatC x(a.cols(), b.cols());
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[p], c) = aug(p, a.cols() + c);
  }
  return x;
}

std::ostream& operator<<(std::ostream& os, const MatC& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << "]";
  }
  return os << "]";
}

}  // namespace bispec::algebra
