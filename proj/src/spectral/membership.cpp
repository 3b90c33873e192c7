#include "bispec/spectral/membership.hpp"

#include "bispec/algebra/error.hpp"
#include "bispec/spectral/blocks.hpp"
#include "bispec/spectral/pk.hpp"

namespace bispec::spectral {

std::string to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::P0: return "P0";
    case FailedCondition::ResidueRow: return "ResidueRow";
    case FailedCondition::A2Chain: return "A2Chain";
    case FailedCondition::PTail: return "PTail";
    case FailedCondition::CommutatorDegree: return "CommutatorDegree";
  }
  return "unknown";
}

std::size_t theta_degree(const MatPolyX& theta) { return theta.degree().value_or(0); }

namespace {

std::optional<MatC> first_nonzero_block(const MatC& stacked, std::size_t n) {
  for (std::size_t r = 0; r + n <= stacked.rows(); r += n) {
    MatC b = stacked.block(r, 0, n, n);
    if (!b.is_zero()) return b;
  }
  return std::nullopt;
}

void require_autonomous(const MatLaurent& v) {
  const long horizon = 2 * static_cast<long>(regular_degree(v)) + 3;
  if (!autonomous::check_autonomous(v, horizon).ok) {
    throw PotentialNotAutonomous("potential does not satisfy V'' = V'V");
  }
}

MembershipCertificate reject(MembershipCertificate cert, FailedCondition c, std::optional<std::size_t> k, MatC w) {
  cert.member = false;
  cert.failed = c;
  cert.k = k;
  cert.witness = std::move(w);
  return cert;
}

}  // namespace

namespace {

// First coefficient of x[theta, V] that breaks the degree bound.
std::optional<MatC> commutator_defect(const MatPolyX& theta, const MatLaurent& v) {
  if (theta.dim() != v.dim()) throw DimensionMismatch("theta and V have different dimensions");
  const MatPolyX xv = v.times_x();
  const MatPolyX c = algebra::polyx_mul(theta, xv) - algebra::polyx_mul(xv, theta);
  if (c.is_zero()) return std::nullopt;
  if (!c.coeff(0).is_zero()) return c.coeff(0);
  if (*c.degree() > theta_degree(theta) + 1) return c.coeff(*c.degree());
  return std::nullopt;
}

}  // namespace

bool commutator_degree_check(const MatPolyX& theta, const MatLaurent& v) { return !commutator_defect(theta, v); }

bool commutator_degree_check(const MatPolyX& theta, const MatPolyX& v) {
  return commutator_degree_check(theta, MatLaurent::from_polynomial(v));
}

MembershipCertificate membership(const MatPolyX& theta, const MatLaurent& v) {
  if (theta.dim() != v.dim()) throw DimensionMismatch("theta and V have different dimensions");
  require_autonomous(v);
  const std::size_t n = v.dim();
  const std::size_t m = theta_degree(theta);
  const std::size_t deg = regular_degree(v);
  MembershipCertificate cert{theta, true, std::nullopt, std::nullopt, std::nullopt};

  const MatC p0 = p_k(theta, v, 0);
  std::optional<MembershipCertificate> verdict;
  if (!p0.is_zero()) verdict = reject(cert, FailedCondition::P0, 0, p0);

  if (!verdict) {
    const MatC a1 = build_A1(v, m).dense();
    const MatC a2 = build_A2(v, m).dense();
    const bool has_pole = v.has_pole();
    std::optional<MembershipCertificate> chain_failure;
    MatC w = p_vector(theta, v, 1, m + 1).stacked();
    const std::size_t range = (m + 1) * n;
    for (std::size_t k = 0; k < range && !verdict; ++k) {
      if (has_pole) {
        MatC row = v.residue() * w.block(0, 0, n, n);
        if (!row.is_zero()) verdict = reject(cert, FailedCondition::ResidueRow, k, row);
      }
      if (!chain_failure && a2.rows() > 0) {
        if (auto bad = first_nonzero_block(a2 * w, n)) chain_failure = reject(cert, FailedCondition::A2Chain, k, *bad);
      }
      w = a1 * w;
    }
    if (!verdict && chain_failure) verdict = chain_failure;
  }

  std::optional<MembershipCertificate> tail_failure;
  for (std::size_t k = m + 2; k <= m + deg + 1 && !tail_failure; ++k) {
    MatC pk = p_k(theta, v, k);
    if (!pk.is_zero()) tail_failure = reject(cert, FailedCondition::PTail, k, std::move(pk));
  }
  if (!verdict && tail_failure) verdict = tail_failure;

  // P_0 = 0 plus the vanishing P-tail is equivalent to the commutator degree
  // bound; a disagreement means one of the two routes is wrong.
  const bool p_route = p0.is_zero() && !tail_failure;
  const std::optional<MatC> defect = commutator_defect(theta, v);
  if (!defect != p_route) {
    MatC w = defect ? *defect : (tail_failure ? *tail_failure->witness : p0);
    return reject(cert, FailedCondition::CommutatorDegree, std::nullopt, std::move(w));
  }
  return verdict ? *verdict : cert;
}

MembershipCertificate membership(const MatPolyX& theta, const MatPolyX& v) {
  return membership(theta, MatLaurent::from_polynomial(v));
}

autonomous::OrderCheck subindex_invariant_check(const MatPolyX& v, std::size_t K) {
  const MatLaurent lv = MatLaurent::from_polynomial(v);
  const std::size_t deg = theta_degree(v);
  const MatC a1 = build_A1(lv, deg).dense();
  const MatC a2 = build_A2(lv, deg).dense();
  MatC w = p_vector(v, lv, 1, deg + 1).stacked();
  for (std::size_t k = 0; k <= K; ++k) {
    if (a2.rows() > 0 && !(a2 * w).is_zero()) return {false, static_cast<long>(k)};
    w = a1 * w;
  }
  return {};
}

}  // namespace bispec::spectral
