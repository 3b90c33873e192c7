// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bispec/algebra/error.hpp"
#include "bispec/autonomous/checks.hpp"
#include "bispec/autonomous/recursion.hpp"
#include "bispec/cli/fixtures.hpp"
#include "bispec/spectral/membership.hpp"
#include "bispec/spectral/nilpotency.hpp"
#include "bispec/spectral/operator.hpp"
#include "bispec/spectral/pk.hpp"
#include "bispec/verify/oracles.hpp"
#include "gen.hpp"

using namespace bispec;
using namespace bispec::algebra;
using autonomous::SeedData;
using bispec::testing::Gen;

namespace {

// Wall-clock limits, in seconds.
constexpr double kScalarOracleBudget = 5.0;
constexpr double kEndToEndBudget = 60.0;

constexpr std::uint64_t kSeed = 0x5eed0001;

GaussianRational q(long p, long d = 1) { return GaussianRational(Rational(p, d)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MatLaurent pole(std::size_t n) { return MatLaurent::exact(MatC::scalar(n, q(-2)), MatPolyX(n)); }

MatPolyX fixture_potential(const cli::PolynomialFixture& fx) {
  const auto seed = SeedData::canonical(fx.V0.rows(), 0, fx.V0, fx.V1);
  return autonomous::recurse_coefficients(seed, 4 * fx.n + 4).regular_part();
}

MatC taylor(const MatPolyX& p, std::size_t k) { return k < p.coeffs().size() ? p.coeff(k) : MatC::zero(p.dim()); }

// Canonical-basis seed with V0 in the bottom rows, V1 in the lower-right block.
SeedData random_seed(Gen& g, std::size_t n, std::size_t m) {
  MatC v0 = g.matrix(n, 0.7), v1 = MatC::zero(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) v0(r, c) = 0;
  v1.set_block(m, m, g.matrix(n - m, 0.7));
  std::optional<MatC> v212;
  if (m > 0 && m < n) v212 = g.matrix(m, n - m, 0.7);
  return SeedData::canonical(n, m, v0, v1, v212);
}

// A seed inside the squared-norm hypotheses, shrinking until V_2 also fits.
SeedData small_seed(Gen& g, std::size_t n, std::size_t m) {
  Rational shrink(1);
  for (;;) {
    MatC v0 = g.matrix_with_norm_sq_at_most(n, Rational(1, 16) * shrink);
    MatC v1 = MatC::zero(n);
    v1.set_block(m, m, g.matrix_with_norm_sq_at_most(n - m, Rational(1, 64) * shrink));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) v0(r, c) = 0;
    std::optional<MatC> v212;
    if (m > 0 && m < n) {
      v212 = g.matrix_with_norm_sq_at_most(std::max(m, n - m), Rational(1, 512) * shrink).block(0, 0, m, n - m);
    }
    auto seed = SeedData::canonical(n, m, v0, v1, v212);
    if (autonomous::norm_hypotheses_hold(seed.V0, seed.V1, autonomous::solve_v2(seed))) return seed;
    shrink /= 2;
  }
}

// Criterion 1.
Outcome scalar_oracle() {
  Outcome out;
  Gen g(kSeed + 1);
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < 20; ++t) {
    const GaussianRational v1(g.nonzero_rational());
    const auto series = autonomous::recurse_coefficients(SeedData::canonical(1, 0, MatC::zero(1), MatC{{v1}}), 24);
    const auto oracle = verify::scalar_tanh_series(v1, 24);
    for (std::size_t k = 0; k <= 24; ++k) {
      out.require(series.coeff(static_cast<long>(k))(0, 0) == oracle[k],
                  "v1 = " + v1.to_string() + ", x^" + std::to_string(k));
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << elapsed << " s";
  out.require(elapsed < kScalarOracleBudget, "took " + os.str());
  if (out.ok) out.detail = "20 seeds, K = 24, " + os.str();
  return out;
}

// Criterion 2.
Outcome residue_full() {
  Outcome out;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto r = verify::residue_case_closed_forms(m, n);
      out.require(r.passed, r.name + " N=" + std::to_string(n) + " at " +
                                (r.discrepancy ? r.discrepancy->location : std::string()));
    }
  }
  // Membership on the monomial basis x^l E_pq, l <= 6, against theta'(0) = 0.
  for (std::size_t l = 0; l <= 6; ++l) {
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t c = 0; c < 2; ++c) {
        const MatPolyX theta = MatPolyX::monomial(MatC::unit(2, p, c), l);
        out.require(spectral::membership(theta, pole(2)).member == (l != 1),
                    "membership of x^" + std::to_string(l) + " E_" + std::to_string(p + 1) + std::to_string(c + 1));
      }
    }
  }
  if (out.ok) out.detail = "m = 1..6, N = 1,2: A1 powers, nilpotency, membership, b_j";
  return out;
}

// Criterion 3.
Outcome convergence() {
  Outcome out;
  Gen g(kSeed + 3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t m = static_cast<std::size_t>(g.integer(0, static_cast<long>(n)));
    const auto r = autonomous::norm_bound_check(small_seed(g, n, m), 30);
    out.require(r.ok, "seed " + std::to_string(t) + " fails at k = " + std::to_string(r.first_failure.value_or(-1)));
  }
  if (out.ok) out.detail = "10 seeds, 3 <= k <= 30";
  return out;
}

// Criterion 4.
Outcome tk_inverse_bound() {
  Outcome out;
  Gen g(kSeed + 4);
  for (long k = 3; k <= 12; ++k) {
    std::vector<MatC> samples;
    for (int s = 0; s < 50; ++s) samples.push_back(g.matrix(3));
    for (std::size_t m = 0; m <= 3; ++m) {
      out.require(autonomous::tk_inverse_norm_bound_check(k, samples, m),
                  "k = " + std::to_string(k) + ", m = " + std::to_string(m));
    }
  }
  if (out.ok) out.detail = "50 samples per k = 3..12, every residue split of N = 3";
  return out;
}

// Criterion 5.
Outcome quasihomogeneity_equivariance() {
  Outcome out;
  Gen g(kSeed + 5);
  const std::vector<GaussianRational> lambdas{q(0), q(1), q(2), q(-1, 3), GaussianRational::i()};
  for (int t = 0; t < 4; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t m = static_cast<std::size_t>(g.integer(0, static_cast<long>(n)));
    const auto seed = random_seed(g, n, m);
    for (const auto& l : lambdas) {
      out.require(autonomous::quasihomogeneity_check(seed, l, 10), "lambda = " + l.to_string());
    }
  }
  // A = diag(alpha I_m, p(M)) with V0, V1 on the lower-right block polynomials
  // in the same M: block-diagonal, commutes with the residue, and meets the
  // power-commutation hypotheses without being scalar.
  for (std::size_t m = 0; m <= 1; ++m) {
    const std::size_t n = 3, r = n - m;
    const MatC base = g.matrix(r);
    const auto poly_in = [&](const GaussianRational& a, const GaussianRational& b) {
      return MatC::scalar(r, a) + base * b + base * base * g.gaussian();
    };
    MatC a = MatC::scalar(n, g.nonzero_gaussian()), v0 = MatC::zero(n), v1 = MatC::zero(n);
    a.set_block(m, m, poly_in(g.nonzero_gaussian(), q(1)));
    v0.set_block(m, m, poly_in(g.gaussian(), g.nonzero_gaussian()));
    v1.set_block(m, m, poly_in(g.gaussian(), g.nonzero_gaussian()));
    out.require(autonomous::equivariance_check(SeedData::canonical(n, m, v0, v1), a, 10),
                "equivariance with m = " + std::to_string(m));
  }
  if (out.ok) out.detail = "lambda in {0, 1, 2, -1/3, i}, k <= 10; non-scalar block-diagonal A";
  return out;
}

// Criterion 6.
Outcome product_formula() {
  Outcome out;
  Gen g(kSeed + 6);
  const MatPolyX v1 = fixture_potential(cli::fixture_n1());
  const MatPolyX v2 = fixture_potential(cli::fixture_n2());
  const std::vector<std::pair<std::string, MatLaurent>> potentials{
      {"n1", MatLaurent::from_polynomial(v1)}, {"n2", MatLaurent::from_polynomial(v2)}, {"residue_full", pole(2)}};
  for (const auto& [name, v] : potentials) {
    for (int t = 0; t < 30; ++t) {
      const MatPolyX a = g.poly(v.dim(), 4, 0.6), b = g.poly(v.dim(), 4, 0.6);
      for (std::size_t k = 0; k <= 8; ++k) {
        out.require(spectral::product_formula_check(a, b, v, k), name + " pair " + std::to_string(t) + ", k = " +
                                                                   std::to_string(k));
      }
    }
  }
  // P_k(V) = k V_k on the autonomous polynomial fixtures.
  const MatPolyX cubic = autonomous::recurse_coefficients(
                             SeedData::canonical(4, 0, cli::fixture_n3(true).V0, cli::fixture_n3(true).V1), 16)
                             .regular_part();
  for (const auto& [name, v] : std::vector<std::pair<std::string, MatPolyX>>{{"n1", v1}, {"n2", v2}, {"n3", cubic}}) {
    for (std::size_t k = 0; k <= 8; ++k) {
      out.require(spectral::p_k(v, MatLaurent::from_polynomial(v), k) == taylor(v, k) * GaussianRational(static_cast<long>(k)),
                  "P_k(V) = k V_k for " + name + ", k = " + std::to_string(k));
    }
  }
  if (out.ok) out.detail = "30 pairs x 3 potentials, k <= 8; P_k(V) = k V_k on n1, n2, n3 (V111 = 0)";
  return out;
}

// Criterion 7.
Outcome end_to_end() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& fx : {cli::fixture_n1(), cli::fixture_n2()}) {
    const std::string tag = fx.name + ": ";
    out.require(spectral::nilpotency_conditions(fx.V0, fx.V1, fx.n).ok, tag + "nilpotency_conditions");
    const MatPolyX v = fixture_potential(fx);
    const MatLaurent lv = MatLaurent::from_polynomial(v);
    out.require(autonomous::check_autonomous(v).ok, tag + "check_autonomous");
    out.require(spectral::membership(v, lv).member, tag + "membership(V, V)");
    const spectral::DiffOpZ b = spectral::synthesize_B(v, lv);
    out.require(spectral::residual_vanishes(spectral::lambda_residual(v, b, lv)), tag + "lambda_residual");
    const auto expand = verify::expand_bispectral_identity(v, b, lv, 0);
    out.require(expand.passed, tag + "expand_bispectral_identity");
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << elapsed << " s";
  out.require(elapsed < kEndToEndBudget, "took " + os.str());
  if (out.ok) out.detail = "n1 (N=2), n2 (N=4), both oracles, " + os.str();
  return out;
}

// Criterion 8: at least five corrupted inputs per oracle, each caught with a
// located witness.
Outcome negative_controls() {
  Outcome out;
  const MatPolyX v = fixture_potential(cli::fixture_n2());
  const MatLaurent lv = MatLaurent::from_polynomial(v);
  const spectral::DiffOpZ good = spectral::synthesize_B(v, lv);
  const std::size_t n = 4;

  int residual_caught = 0, expand_caught = 0;
  for (std::size_t j = 0; j <= good.order; ++j) {
    for (std::size_t e = 0; e < 2; ++e) {
      spectral::DiffOpZ bad = good;
      bad.b[j] += e == 0 ? RatMatZ::constant(MatC::unit(n, j % n, (j + 1) % n))
                         : RatMatZ(MatPolyZ::constant(MatC::unit(n, 0, 3)), ScalarPoly::variable());
      const auto residual = spectral::lambda_residual(v, bad, lv);
      residual_caught += spectral::residual_vanishes(residual) ? 0 : 1;
      const auto report = verify::expand_bispectral_identity(v, bad, lv, 0);
      expand_caught += !report.passed && report.discrepancy && !report.discrepancy->location.empty() ? 1 : 0;
    }
  }
  out.require(residual_caught == 2 * static_cast<int>(good.order + 1), "lambda_residual missed a perturbed b_j");
  out.require(expand_caught == 2 * static_cast<int>(good.order + 1), "expansion missed a perturbed b_j");
  out.require(residual_caught >= 5 && expand_caught >= 5, "fewer than 5 operator corruptions");

  const std::vector<MatPolyX> non_members{
      MatPolyX::monomial(MatC::identity(4), 1),
      MatPolyX::monomial(MatC::unit(4, 1, 0), 1),
      MatPolyX(4, {MatC::unit(4, 3, 0)}),
      MatPolyX::monomial(MatC::unit(4, 2, 1), 2),
      v + MatPolyX::monomial(MatC::unit(4, 3, 3), 1),
  };
  int member_caught = 0;
  for (const auto& theta : non_members) {
    const auto cert = spectral::membership(theta, lv);
    member_caught += !cert.member && cert.failed && cert.witness && !cert.witness->is_zero() ? 1 : 0;
  }
  out.require(member_caught == 5, "membership accepted a non-member (" + std::to_string(member_caught) + "/5)");

  const std::vector<MatPolyX> non_autonomous{
      MatPolyX::monomial(MatC{{1, 1}, {0, 1}}, 1),
      MatPolyX::monomial(MatC::identity(2), 2),
      MatPolyX(2, {MatC::zero(2), MatC{{0, 1}, {0, 0}}, MatC{{0, 0}, {1, 0}}}),
      MatPolyX(2, {MatC{{1, 0}, {0, 0}}, MatC{{0, 1}, {0, 0}}, MatC{{0, 1}, {0, 0}}}),
      MatPolyX::monomial(MatC{{0, 1}, {0, 0}}, 3),
  };
  int autonomous_caught = 0, physical_caught = 0;
  for (const auto& w : non_autonomous) {
    const auto r = autonomous::check_autonomous(w);
    autonomous_caught += !r.ok && r.first_failure ? 1 : 0;
    const auto p = spectral::check_physical(w);
    physical_caught += !p.ok && p.first_failure ? 1 : 0;
    bool refused = false;
    try {
      spectral::membership(MatPolyX::constant(MatC::identity(2)), w);
    } catch (const PotentialNotAutonomous&) {
      refused = true;
    }
    out.require(refused, "membership accepted a non-autonomous potential");
  }
  out.require(autonomous_caught == 5, "check_autonomous missed a non-autonomous V");
  out.require(physical_caught == 5, "check_physical missed a non-autonomous V");
  if (out.ok) {
    out.detail = std::to_string(residual_caught) + " residual, " + std::to_string(expand_caught) + " expansion, " +
                 std::to_string(member_caught) + " membership, " + std::to_string(autonomous_caught) +
                 " autonomous, " + std::to_string(physical_caught) + " physical";
  }
  return out;
}

// Criterion 9.
Outcome closure() {
  Outcome out;
  Gen g(kSeed + 9);
  const MatPolyX v = fixture_potential(cli::fixture_n1());
  const MatLaurent lv = MatLaurent::from_polynomial(v);
  // Scalar polynomials in V are members; the decider confirms each one.
  const auto random_member = [&] {
    MatPolyX out = MatPolyX::constant(MatC::scalar(2, g.gaussian()));
    MatPolyX power = MatPolyX::constant(MatC::identity(2));
    for (int d = 1; d <= 3; ++d) {
      power = power * v;
      out += g.gaussian() * power;
    }
    return out;
  };
  for (int t = 0; t < 10; ++t) {
    const MatPolyX a = random_member(), b = random_member();
    out.require(spectral::membership(a, lv).member && spectral::membership(b, lv).member, "generator gave a non-member");
    out.require(spectral::membership(a + b, lv).member, "sum of pair " + std::to_string(t));
    out.require(spectral::membership(a * b, lv).member, "product of pair " + std::to_string(t));
  }
  if (out.ok) out.detail = "10 pairs, sums and products";
  return out;
}

// Criterion 10.
Outcome n3_report() {
  Outcome out;
  const auto rep = cli::run_fixture("n3");
  out.require(rep.report_only, "n3 must run in report mode");
  const auto has_note = [&](const std::string& needle) {
    for (const auto& note : rep.notes)
      if (note.find(needle) != std::string::npos) return true;
    return false;
  };
  out.require(has_note("[generic] first disagreement at V2(1,1)"), "generic variant not localized at V2(1,1)");
  out.require(has_note("[V111 = 0] first disagreement at V3(1,3)"), "V111 = 0 variant not localized at V3(1,3)");
  if (out.ok) out.detail = "generic: V2(1,1); V111 = 0: V3(1,3)";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"scalar oracle equivalence", scalar_oracle},
      {"residue-full closed forms", residue_full},
      {"convergence bound", convergence},
      {"T_k inverse bound", tk_inverse_bound},
      {"quasihomogeneity and equivariance", quasihomogeneity_equivariance},
      {"product formula", product_formula},
      {"end-to-end bispectrality", end_to_end},
      {"negative controls", negative_controls},
      {"algebra closure", closure},
      {"n3 report", n3_report},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << '\n';
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
