#pragma once

#include <cstddef>
#include <optional>

#include "bispec/algebra/matrix.hpp"

namespace bispec::autonomous {

using algebra::GaussianRational;
using algebra::MatC;

// Residue V_{-1} brought to diag(-2 I_m, 0) by an exact similarity.
struct ResidueForm {
  std::size_t m = 0;
  MatC similarity;          // S, with S^{-1} V_{-1} S = canonical
  MatC similarity_inverse;  // S^{-1}
  MatC canonical;

  std::size_t dim() const { return canonical.rows(); }
  MatC to_canonical(const MatC& a) const { return similarity_inverse * a * similarity; }
  MatC to_original(const MatC& a) const { return similarity * a * similarity_inverse; }
};

// Throws QuadraticRelationViolated unless vm1 (vm1 + 2I) = 0.
ResidueForm normalize_residue(const MatC& vm1);
ResidueForm canonical_residue(std::size_t n, std::size_t m);

// Initial data of a Laurent solution, always held in the canonical basis.
// V212 is the free m x (N-m) block of V_2; it is 0 x 0 when m is 0 or N.
struct SeedData {
  ResidueForm residue_form;
  MatC V0;
  MatC V1;
  MatC V212;

  std::size_t dim() const { return residue_form.dim(); }
  std::size_t m() const { return residue_form.m; }
  const MatC& residue() const { return residue_form.canonical; }
  bool is_zero() const { return V0.is_zero() && V1.is_zero() && V212.is_zero(); }

  // vm1, v0, v1 in the caller's basis; v212 in the canonical basis
  // (defaults to zero). Validates the result.
  static SeedData from_original(const MatC& vm1, const MatC& v0, const MatC& v1,
                                const std::optional<MatC>& v212 = std::nullopt);
  static SeedData canonical(std::size_t n, std::size_t m, MatC v0, MatC v1,
                            const std::optional<MatC>& v212 = std::nullopt);
};

// The coefficient equations of orders 0 and 1 in the canonical basis:
// V_{-1} V_0 = 0, V_{-1} V_1 = 0 and [V_{-1}, V_1] = 0. Throws SeedInconsistent.
void validate_seed(const SeedData& seed);

}  // namespace bispec::autonomous
