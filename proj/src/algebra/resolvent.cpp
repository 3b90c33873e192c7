#include "bispec/algebra/resolvent.hpp"

#include "bispec/algebra/error.hpp"

namespace bispec::algebra {

ShiftedAdjugate shifted_adjugate(const MatC& a) {
  if (!a.is_square()) throw DimensionMismatch("resolvent of a non-square matrix");
  const std::size_t n = a.rows();
  // zI + A = zI - M with M = -A. With c_n = 1 and M_0 = 0:
  //   M_k = M M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(M M_k) / k,
  // and adj(zI - M) = sum_{k=1}^{n} M_k z^{n-k}.
  const MatC m = -a;
  std::vector<GaussianRational> charpoly(n + 1);
  charpoly[n] = 1;
  std::vector<MatC> adj(n, MatC::zero(n));
  MatC mk = MatC::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + MatC::scalar(n, charpoly[n - k + 1]);
    adj[n - k] = mk;
    charpoly[n - k] = -trace(m * mk) / GaussianRational(static_cast<long>(k));
  }
  return {ScalarPoly(std::move(charpoly)), std::move(adj)};
}

std::vector<RatMatZ> resolvent_solve(const MatC& a, std::span<const MatC> rhs) {
  if (rhs.empty()) throw DimensionMismatch("resolvent_solve: empty right-hand side");
  const std::size_t block = rhs.front().rows();
  for (const auto& b : rhs) {
    if (b.rows() != block || b.cols() != block) throw DimensionMismatch("resolvent_solve: rhs blocks must be N x N");
  }
  if (!a.is_square() || a.rows() != block * rhs.size()) {
    throw DimensionMismatch("resolvent_solve: matrix size does not match the block vector");
  }
  MatC stacked(a.rows(), block);
  for (std::size_t b = 0; b < rhs.size(); ++b) stacked.set_block(b * block, 0, rhs[b]);

  ShiftedAdjugate sa = shifted_adjugate(a);
  std::vector<MatC> numer;
  numer.reserve(sa.adjugate.size());
  for (const auto& coeff : sa.adjugate) numer.push_back(coeff * stacked);

  std::vector<RatMatZ> out;
  out.reserve(rhs.size());
  for (std::size_t b = 0; b < rhs.size(); ++b) {
    std::vector<MatC> block_coeffs;
    block_coeffs.reserve(numer.size());
    for (const auto& nk : numer) block_coeffs.push_back(nk.block(b * block, 0, block, block));
    out.emplace_back(MatPolyZ(block, std::move(block_coeffs)), sa.determinant);
  }
  return out;
}

}  // namespace bispec::algebra
