#include "bispec/autonomous/seed.hpp"

#include <string>

#include "bispec/algebra/error.hpp"

namespace bispec::autonomous {

ResidueForm canonical_residue(std::size_t n, std::size_t m) {
  if (m > n) throw DimensionMismatch("residue block size exceeds the dimension");
  MatC c = MatC::zero(n);
  for (std::size_t i = 0; i < m; ++i) c(i, i) = -2;
  return {m, MatC::identity(n), MatC::identity(n), std::move(c)};
}

ResidueForm normalize_residue(const MatC& vm1) {
  if (!vm1.is_square()) throw DimensionMismatch("residue must be square");
  const std::size_t n = vm1.rows();
  const MatC shifted = vm1 + MatC::scalar(n, 2);
  if (!(vm1 * shifted).is_zero()) {
    throw QuadraticRelationViolated("residue does not satisfy V_{-1}(V_{-1} + 2I) = 0");
  }
  // The relation makes V_{-1} diagonalizable with spectrum in {-2, 0}.
  const MatC minus_two = algebra::null_space(shifted);
  const MatC zero = algebra::null_space(vm1);
  const std::size_t m = minus_two.cols();
  if (m + zero.cols() != n) throw QuadraticRelationViolated("residue eigenspaces do not span");
  MatC s(n, n);
  s.set_block(0, 0, minus_two);
  s.set_block(0, m, zero);
  ResidueForm form = canonical_residue(n, m);
  form.similarity_inverse = algebra::inverse(s);
  form.similarity = std::move(s);
  return form;
}

namespace {

MatC default_v212(std::size_t n, std::size_t m, const std::optional<MatC>& v212) {
  const std::size_t rows = (m == 0 || m == n) ? 0 : m;
  const std::size_t cols = (m == 0 || m == n) ? 0 : n - m;
  if (!v212) return MatC::zero(rows, cols);
  if (v212->empty() && rows * cols == 0) return MatC::zero(rows, cols);
  if (v212->rows() != rows || v212->cols() != cols) {
    throw DimensionMismatch("V212 must be " + std::to_string(rows) + " x " + std::to_string(cols));
  }
  return *v212;
}

}  // namespace

SeedData SeedData::from_original(const MatC& vm1, const MatC& v0, const MatC& v1, const std::optional<MatC>& v212) {
  ResidueForm form = normalize_residue(vm1);
  const std::size_t n = form.dim();
  if (v0.rows() != n || v0.cols() != n || v1.rows() != n || v1.cols() != n) {
    throw DimensionMismatch("seed matrices must match the residue dimension");
  }
  SeedData seed{form, form.to_canonical(v0), form.to_canonical(v1), default_v212(n, form.m, v212)};
  validate_seed(seed);
  return seed;
}

SeedData SeedData::canonical(std::size_t n, std::size_t m, MatC v0, MatC v1, const std::optional<MatC>& v212) {
  if (v0.rows() != n || v0.cols() != n || v1.rows() != n || v1.cols() != n) {
    throw DimensionMismatch("seed matrices must be N x N");
  }
  SeedData seed{canonical_residue(n, m), std::move(v0), std::move(v1), default_v212(n, m, v212)};
  validate_seed(seed);
  return seed;
}

void validate_seed(const SeedData& seed) {
  const MatC& vm1 = seed.residue();
  if (!(vm1 * seed.V0).is_zero()) throw SeedInconsistent("V_{-1} V_0 != 0: the top m rows of V_0 must vanish");
  if (!(vm1 * seed.V1).is_zero()) throw SeedInconsistent("V_{-1} V_1 != 0: the top m rows of V_1 must vanish");
  // Order one of the coefficient equations reads V_1 V_{-1} - V_{-1} V_1 = 0.
  if (!algebra::commutator(vm1, seed.V1).is_zero()) {
    throw SeedInconsistent("[V_{-1}, V_1] != 0: the lower-left block of V_1 must vanish");
  }
}

}  // namespace bispec::autonomous
