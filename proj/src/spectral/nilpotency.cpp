#include "bispec/spectral/nilpotency.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bispec/algebra/error.hpp"

namespace bispec::spectral {

unsigned Monomial12::grading() const {
  unsigned g = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) g += (i % 2 == 0 ? 2 : 1) * exponents[i];
  return g;
}

unsigned Monomial12::total() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

MatC Monomial12::evaluate(const MatC& v0, const MatC& v1) const {
  MatC out = MatC::identity(v0.rows());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) out = out * algebra::pow(i % 2 == 0 ? v1 : v0, exponents[i]);
  }
  return out;
}

std::string Monomial12::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << (i % 2 == 0 ? "V1" : "V0");
    if (exponents[i] > 1) os << '^' << exponents[i];
  }
  return first ? "I" : os.str();
}

std::vector<Monomial12> admissible_words(unsigned n) {
  if (n < 1) throw InputError("nilpotency conditions need n >= 1");
  std::vector<Monomial12> words;
  std::vector<unsigned> e(n + 1, 0);
  // Odometer over all exponent vectors with total <= n + 1.
  while (true) {
    Monomial12 w{e};
    if (e[0] >= 1 && w.total() <= n + 1 && w.grading() >= n + 2) words.push_back(w);
    std::size_t i = 0;
    while (i <= n) {
      ++e[i];
      if (std::accumulate(e.begin(), e.end(), 0u) <= n + 1) break;
      e[i] = 0;
      ++i;
    }
    if (i > n) break;
  }
  std::stable_sort(words.begin(), words.end(), [](const Monomial12& a, const Monomial12& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.exponents < b.exponents;
  });
  return words;
}

NilpotencyResult nilpotency_conditions(const MatC& v0, const MatC& v1, unsigned n) {
  if (!v0.is_square() || v0.rows() != v1.rows() || !v1.is_square()) {
    throw DimensionMismatch("V0 and V1 must be square of the same size");
  }
  for (const auto& w : admissible_words(n)) {
    MatC value = w.evaluate(v0, v1);
    if (!value.is_zero()) return {false, w, std::move(value)};
  }
  return {};
}

}  // namespace bispec::spectral
