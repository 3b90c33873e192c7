#include "bispec/cli/fixtures.hpp"

#include <algorithm>
#include <future>

#include "bispec/algebra/error.hpp"
#include "bispec/autonomous/checks.hpp"
#include "bispec/autonomous/recursion.hpp"
#include "bispec/cli/codec.hpp"
#include "bispec/spectral/blocks.hpp"
#include "bispec/spectral/membership.hpp"
#include "bispec/spectral/nilpotency.hpp"
#include "bispec/spectral/operator.hpp"
#include "bispec/spectral/pk.hpp"

namespace bispec::cli {

using algebra::GaussianRational;
using algebra::MatLaurent;
using algebra::Rational;
using verify::OracleReport;

algebra::Rational ParameterSource::next_nonzero() {
  const std::uint64_t raw = engine_();
  long p = static_cast<long>(raw % 18) - 9;
  if (p >= 0) ++p;
  const long q = static_cast<long>((raw >> 32) % 7) + 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool FixtureReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

OracleReport expect(std::string name, bool ok, std::string location = {}, std::string expected = {},
                    std::string got = {}) {
  OracleReport r{std::move(name), true, std::nullopt};
  if (!ok) r.fail(std::move(location), std::move(expected), std::move(got));
  return r;
}

std::string entry_name(const std::string& matrix, std::size_t r, std::size_t c) {
  return matrix + "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

// First entry where the displayed matrix differs from the computed one.
OracleReport compare_entries(const std::string& name, const std::string& matrix, const MatC& displayed,
                             const MatC& computed) {
  OracleReport r{name, true, std::nullopt};
  for (std::size_t i = 0; i < displayed.rows() && r.passed; ++i) {
    for (std::size_t j = 0; j < displayed.cols() && r.passed; ++j) {
      if (!(displayed(i, j) == computed(i, j))) {
        r.fail(entry_name(matrix, i, j), displayed(i, j).to_string(), computed(i, j).to_string());
      }
    }
  }
  return r;
}

OracleReport order_report(const std::string& name, const autonomous::OrderCheck& c) {
  if (c.ok) return expect(name, true);
  return expect(name, false, "order " + std::to_string(*c.first_failure), "0", "nonzero");
}

void run_pipeline(const PolynomialFixture& fx, FixtureReport& out) {
  const std::size_t n = fx.V0.rows();
  auto& checks = out.checks;

  const auto nil = spectral::nilpotency_conditions(fx.V0, fx.V1, fx.n);
  checks.push_back(nil.ok ? expect("nilpotency_conditions", true)
                          : expect("nilpotency_conditions", false, nil.failing->to_string(), "0",
                                   nil.witness->to_string()));

  const auto seed = autonomous::SeedData::canonical(n, 0, fx.V0, fx.V1);
  const MatLaurent series = autonomous::recurse_coefficients(seed, 4 * n + 4);
  checks.push_back(expect("recursion terminates", series.is_terminating(), "last nonzero V_k", "k <= K/2",
                          "k = " + std::to_string(series.last_known_nonzero())));
  const MatPolyX v = series.regular_part();
  checks.push_back(expect("potential degree", spectral::theta_degree(v) == fx.n, "deg V", std::to_string(fx.n),
                          std::to_string(spectral::theta_degree(v))));
  if (fx.displayed_V2) checks.push_back(compare_entries("displayed V2", "V2", *fx.displayed_V2, v.coeff(2)));

  checks.push_back(order_report("check_autonomous", autonomous::check_autonomous(v)));
  checks.push_back(order_report("check_physical", spectral::check_physical(v)));

  const MatLaurent lv = MatLaurent::from_polynomial(v);
  bool pk_ok = true;
  for (std::size_t k = 0; k <= fx.n + 1; ++k) {
    pk_ok = pk_ok && spectral::p_k(v, lv, k) == v.coeff(k) * GaussianRational(static_cast<long>(k));
  }
  checks.push_back(expect("P_k(V) = k V_k", pk_ok));
  checks.push_back(order_report("A2 chain", spectral::subindex_invariant_check(v, (fx.n + 1) * n)));

  const auto cert = spectral::membership(v, lv);
  checks.push_back(expect("membership(V, V)", cert.member, cert.failed ? spectral::to_string(*cert.failed) : "",
                          "member", "non-member"));
  if (!cert.member) return;

  const auto syn = spectral::synthesize(v, lv);
  if (syn.sign != 1) out.notes.push_back("operator synthesized with the opposite sign convention");
  checks.push_back(expect("lambda_residual", spectral::residual_vanishes(spectral::lambda_residual(v, syn.op, lv))));
  checks.push_back(verify::expand_bispectral_identity(v, syn.op, lv, 0));
  bool limits = true;
  for (std::size_t j = 0; j <= syn.op.order; ++j) {
    const auto lim = syn.op.b[j].limit_at_infinity();
    limits = limits && lim && *lim == v.coeff(j);
  }
  checks.push_back(expect("lim b_j = a_j", limits));
}

FixtureReport run_polynomial(const PolynomialFixture& fx) {
  FixtureReport out{fx.name, false, {}, {}};
  run_pipeline(fx, out);
  return out;
}

void run_cubic_variant(const CubicFixture& fx, FixtureReport& out) {
  const std::size_t n = fx.V0.rows();
  const std::string tag = "[" + fx.variant + "] ";
  const auto seed = autonomous::SeedData::canonical(n, 0, fx.V0, fx.V1);
  const MatLaurent series = autonomous::recurse_coefficients(seed, 16);

  OracleReport v2 = compare_entries(tag + "displayed V2 vs recursion", "V2", fx.displayed_V2, series.coeff(2));
  OracleReport v3 = compare_entries(tag + "displayed V3 vs recursion", "V3", fx.displayed_V3, series.coeff(3));
  const OracleReport* first = !v2.passed ? &v2 : (!v3.passed ? &v3 : nullptr);
  if (first) {
    out.notes.push_back(tag + "first disagreement at " + first->discrepancy->location + ": displayed " +
                        first->discrepancy->expected + ", recursion " + first->discrepancy->got);
  } else {
    out.notes.push_back(tag + "displayed V2 and V3 agree with the recursion");
  }
  out.checks.push_back(std::move(v2));
  out.checks.push_back(std::move(v3));

  const MatPolyX displayed(n, {fx.V0, fx.V1, fx.displayed_V2, fx.displayed_V3});
  out.checks.push_back(order_report(tag + "displayed polynomial solves V'' = V'V", autonomous::check_autonomous(displayed)));

  const auto nil = spectral::nilpotency_conditions(fx.V0, fx.V1, 3);
  out.checks.push_back(nil.ok ? expect(tag + "nilpotency_conditions", true)
                              : expect(tag + "nilpotency_conditions", false, nil.failing->to_string(), "0",
                                       nil.witness->to_string()));
  out.checks.push_back(expect(tag + "recursion terminates by K = 16", series.is_terminating(), "last nonzero V_k",
                              "k <= 7", "k = " + std::to_string(series.last_known_nonzero())));
  if (!series.is_terminating()) return;
  const MatPolyX v = series.regular_part();
  out.notes.push_back(tag + "recursion gives a polynomial of degree " + std::to_string(spectral::theta_degree(v)));
  const auto cert = spectral::membership(v, MatLaurent::from_polynomial(v));
  out.checks.push_back(expect(tag + "membership(V, V)", cert.member, cert.failed ? spectral::to_string(*cert.failed) : "",
                              "member", "non-member"));
}

FixtureReport run_n3() {
  FixtureReport out{"n3", true, {}, {}};
  run_cubic_variant(fixture_n3(false), out);
  run_cubic_variant(fixture_n3(true), out);
  return out;
}

FixtureReport run_residue_full() {
  FixtureReport out{"residue_full", false, {}, {}};
  const std::size_t n = 2;
  const auto seed = autonomous::SeedData::canonical(n, n, MatC::zero(n), MatC::zero(n));
  const MatLaurent series = autonomous::recurse_coefficients(seed, 8);
  bool zero = series.is_terminating();
  for (const auto& c : series.coeffs()) zero = zero && c.is_zero();
  out.checks.push_back(expect("V = -2I/x has no regular part", zero));
  out.checks.push_back(order_report("check_autonomous", autonomous::check_autonomous(series, 12)));
  out.checks.push_back(order_report("check_physical", spectral::check_physical(series, 12)));
  for (std::size_t m = 1; m <= 6; ++m) out.checks.push_back(verify::residue_case_closed_forms(m, n));
  return out;
}

FixtureReport run_scalar_tanh() {
  FixtureReport out{"scalar_tanh", false, {}, {}};
  const std::size_t K = 24;
  const std::vector<GaussianRational> samples{GaussianRational(1), GaussianRational(-2),
                                              GaussianRational(Rational(1, 3)), GaussianRational::i(),
                                              GaussianRational(Rational(2), Rational(-1, 5))};
  for (const auto& v1 : samples) {
    const auto seed = autonomous::SeedData::canonical(1, 0, MatC::zero(1), MatC{{v1}});
    const MatLaurent series = autonomous::recurse_coefficients(seed, K);
    const auto oracle = verify::scalar_tanh_series(v1, K);
    OracleReport r{"tanh series, v1 = " + v1.to_string(), true, std::nullopt};
    for (std::size_t k = 0; k <= K; ++k) {
      if (!(series.coeff(static_cast<long>(k))(0, 0) == oracle[k])) {
        r.fail("x^" + std::to_string(k), oracle[k].to_string(), series.coeff(static_cast<long>(k))(0, 0).to_string());
      }
    }
    out.checks.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PolynomialFixture fixture_n1() {
  ParameterSource src(0x6e31);
  MatC v0(2, 2);
  v0(0, 0) = src.next_nonzero();
  v0(0, 1) = src.next_nonzero();
  return {"n1", 1, std::move(v0), MatC{{0, 1}, {0, 0}}, std::nullopt};
}

PolynomialFixture fixture_n2() {
  ParameterSource src(0x6e32);
  MatC v0(4, 4);
  for (std::size_t c = 0; c < 4; ++c) v0(0, c) = src.next_nonzero();
  v0(1, 2) = src.next_nonzero();
  v0(1, 3) = src.next_nonzero();
  MatC v1(4, 4);
  v1(0, 1) = src.next_nonzero();
  MatC v2(4, 4);
  v2(0, 2) = v0(1, 2) * v1(0, 1) / GaussianRational(2);
  v2(0, 3) = v0(1, 3) * v1(0, 1) / GaussianRational(2);
  return {"n2", 2, std::move(v0), std::move(v1), std::move(v2)};
}

CubicFixture fixture_n3(bool v111_zero) {
  ParameterSource src(0x6e33);
  MatC v0(4, 4);
  MatC v1(4, 4);
  for (std::size_t c = 0; c < 4; ++c) v0(0, c) = src.next_nonzero();
  v0(1, 2) = src.next_nonzero();
  v0(1, 3) = src.next_nonzero();
  for (std::size_t c = 0; c < 4; ++c) v1(0, c) = src.next_nonzero();
  v1(1, 2) = src.next_nonzero();
  v1(1, 3) = src.next_nonzero();
  if (v111_zero) v1(0, 0) = 0;
  const GaussianRational half(Rational(1, 2));
  MatC v2(4, 4);
  v2(0, 2) = v0(1, 2) * v1(0, 1) * half;
  v2(0, 3) = v0(1, 3) * v1(0, 1) * half;
  MatC v3(4, 4);
  v3(0, 2) = v1(0, 1) * v1(1, 2) * half;
  v3(0, 3) = v1(0, 1) * v1(1, 3) * half;
  return {v111_zero ? "V111 = 0" : "generic", std::move(v0), std::move(v1), std::move(v2), std::move(v3)};
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"n1", "n2", "n3", "residue_full", "scalar_tanh"};
  return names;
}

FixtureReport run_fixture(const std::string& name) {
  if (name == "n1") return run_polynomial(fixture_n1());
  if (name == "n2") return run_polynomial(fixture_n2());
  if (name == "n3") return run_n3();
  if (name == "residue_full") return run_residue_full();
  if (name == "scalar_tanh") return run_scalar_tanh();
  throw InputError("unknown fixture case \"" + name + "\"");
}

std::vector<FixtureReport> run_fixtures(const std::vector<std::string>& names) {
  for (const auto& name : names) {
    if (std::find(fixture_names().begin(), fixture_names().end(), name) == fixture_names().end()) {
      throw InputError("unknown fixture case \"" + name + "\"");
    }
  }
  std::vector<std::future<FixtureReport>> pending;
  pending.reserve(names.size());
  for (const auto& name : names) pending.push_back(std::async(std::launch::async, run_fixture, name));
  std::vector<FixtureReport> out;
  out.reserve(names.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

algebra::Json to_json(const FixtureReport& report) {
  algebra::Json checks = algebra::Json::array();
  for (const auto& c : report.checks) checks.push_back(cli::to_json(c));
  algebra::Json j;
  j["name"] = report.name;
  j["mode"] = report.report_only ? "report" : "verify";
  j["passed"] = report.passed();
  j["checks"] = std::move(checks);
  j["notes"] = report.notes;
  return j;
}

}  // namespace bispec::cli
