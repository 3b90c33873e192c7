#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bispec/algebra/json_io.hpp"
#include "bispec/algebra/polynomial.hpp"
#include "bispec/verify/oracles.hpp"

namespace bispec::cli {

using algebra::MatC;
using algebra::MatPolyX;

// Small nonzero rationals drawn from a fixed-seed generator, so fixture
// parameters are reproducible across platforms.
class ParameterSource {
 public:
  explicit ParameterSource(std::uint64_t seed) : engine_(seed) {}
  // p/q with p in [-9, 9] \ {0}, q in [1, 7].
  algebra::Rational next_nonzero();

 private:
  std::mt19937_64 engine_;
};

// Polynomial potential V_0 + V_1 x + ... built from nilpotent seed data.
struct PolynomialFixture {
  std::string name;
  unsigned n = 1;  // expected degree
  MatC V0;
  MatC V1;
  std::optional<MatC> displayed_V2;
};

PolynomialFixture fixture_n1();
PolynomialFixture fixture_n2();

// The degree-3 example: with v111_zero the (1,1) entry of V_1 is set to 0,
// otherwise every free parameter is nonzero.
struct CubicFixture {
  std::string variant;
  MatC V0;
  MatC V1;
  MatC displayed_V2;
  MatC displayed_V3;
};

CubicFixture fixture_n3(bool v111_zero);

struct FixtureReport {
  std::string name;
  bool report_only = false;
  std::vector<verify::OracleReport> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

const std::vector<std::string>& fixture_names();
// Throws InputError for an unknown name.
FixtureReport run_fixture(const std::string& name);
// Runs the cases concurrently; the result order matches `names`.
std::vector<FixtureReport> run_fixtures(const std::vector<std::string>& names);

algebra::Json to_json(const FixtureReport& report);

}  // namespace bispec::cli
