#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bispec/algebra/matrix.hpp"

namespace bispec::spectral {

using algebra::MatC;

// Word V1^{i1} V0^{i2} V1^{i3} ... with V1 at odd positions (1-based).
struct Monomial12 {
  std::vector<unsigned> exponents;

  // Weight 2 per V1 factor and 1 per V0 factor.
  unsigned grading() const;
  unsigned total() const;
  MatC evaluate(const MatC& v0, const MatC& v1) const;
  std::string to_string() const;
  friend bool operator==(const Monomial12&, const Monomial12&) = default;
};

// All words of length n+1 with i1 >= 1, sum <= n+1 and grading >= n+2,
// ordered by total exponent and then lexicographically.
std::vector<Monomial12> admissible_words(unsigned n);

struct NilpotencyResult {
  bool ok = true;
  std::optional<Monomial12> failing;
  std::optional<MatC> witness;
};

NilpotencyResult nilpotency_conditions(const MatC& v0, const MatC& v1, unsigned n);

}  // namespace bispec::spectral
