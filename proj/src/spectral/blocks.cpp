#include "bispec/spectral/blocks.hpp"

#include "bispec/algebra/error.hpp"
#include "bispec/spectral/pk.hpp"

namespace bispec::spectral {

MatC PVector::stacked() const {
  if (entries.empty()) return {};
  const std::size_t n = entries.front().rows();
  MatC out(entries.size() * n, n);
  for (std::size_t i = 0; i < entries.size(); ++i) out.set_block(i * n, 0, entries[i]);
  return out;
}

PVector p_vector(const MatPolyX& theta, const MatLaurent& v, std::size_t k_lo, std::size_t k_hi) {
  PVector p{k_lo, k_hi, {}};
  for (std::size_t k = k_lo; k <= k_hi; ++k) p.entries.push_back(p_k(theta, v, k));
  return p;
}

BlockMatrix build_A1(const MatLaurent& v, std::size_t m) {
  const std::size_t n = v.dim();
  const algebra::GaussianRational half(Rational(1, 2));
  BlockMatrix a(m + 1, m + 1, n);
  for (std::size_t r = 0; r <= m; ++r) {
    for (std::size_t c = 0; c <= r; ++c) a.set_block(r, c, v.coeff(static_cast<long>(r - c)) * half);
    if (r < m) a.set_block(r, r + 1, v.residue() * half + MatC::scalar(n, static_cast<long>(r + 1)));
  }
  return a;
}

std::size_t regular_degree(const MatLaurent& v) {
  if (!v.is_terminating()) throw InputError("an exactly known potential is required");
  const long d = v.last_known_nonzero();
  return d < 0 ? 0 : static_cast<std::size_t>(d);
}

BlockMatrix build_A2(const MatLaurent& v, std::size_t m) {
  const std::size_t deg = regular_degree(v);
  BlockMatrix a(deg, m + 1, v.dim());
  for (std::size_t r = 1; r <= deg; ++r) {
    for (std::size_t c = 1; c <= m + 1; ++c) {
      const std::size_t idx = m + r + 1 - c;
      if (idx <= deg) a.set_block(r - 1, c - 1, v.coeff(static_cast<long>(idx)));
    }
  }
  return a;
}

}  // namespace bispec::spectral
