#pragma once

#include <cstddef>
#include <vector>

#include "bispec/algebra/laurent.hpp"
#include "bispec/algebra/polynomial.hpp"

namespace bispec::spectral {

using algebra::MatC;
using algebra::MatLaurent;
using algebra::MatPolyX;

// Dense matrix partitioned into uniform N x N blocks. Block indices are
// 0-based here; comments use 1-based (r, c).
class BlockMatrix {
 public:
  BlockMatrix(std::size_t block_rows, std::size_t block_cols, std::size_t n)
      : block_rows_(block_rows), block_cols_(block_cols), n_(n), dense_(block_rows * n, block_cols * n) {}

  std::size_t block_rows() const { return block_rows_; }
  std::size_t block_cols() const { return block_cols_; }
  std::size_t block_dim() const { return n_; }
  const MatC& dense() const { return dense_; }

  MatC block(std::size_t r, std::size_t c) const { return dense_.block(r * n_, c * n_, n_, n_); }
  void set_block(std::size_t r, std::size_t c, const MatC& b) { dense_.set_block(r * n_, c * n_, b); }

 private:
  std::size_t block_rows_;
  std::size_t block_cols_;
  std::size_t n_;
  MatC dense_;
};

// (P_lo, ..., P_hi) for theta.
struct PVector {
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
  std::vector<MatC> entries;

  // Entries stacked vertically into a (count N) x N matrix.
  MatC stacked() const;
};

PVector p_vector(const MatPolyX& theta, const MatLaurent& v, std::size_t k_lo, std::size_t k_hi);

// (m+1) x (m+1) blocks: (r, c) = V_{r-c}/2 for r >= c, (r, r+1) =
// V_{-1}/2 + r I, zero above the superdiagonal.
BlockMatrix build_A1(const MatLaurent& v, std::size_t m);

// n x (m+1) blocks with (r, c) = V_{m+r+1-c}, where n is the degree of the
// regular part of v (no rows when it is constant or zero).
BlockMatrix build_A2(const MatLaurent& v, std::size_t m);

// Degree of the regular part of an exactly known V, 0 when it vanishes.
std::size_t regular_degree(const MatLaurent& v);

}  // namespace bispec::spectral
