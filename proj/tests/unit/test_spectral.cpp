#include <doctest.h>

#include "bispec/algebra/error.hpp"
#include "bispec/autonomous/checks.hpp"
#include "bispec/autonomous/recursion.hpp"
#include "bispec/cli/fixtures.hpp"
#include "bispec/spectral/blocks.hpp"
#include "bispec/spectral/membership.hpp"
#include "bispec/spectral/nilpotency.hpp"
#include "bispec/spectral/operator.hpp"
#include "bispec/spectral/pk.hpp"
#include "gen.hpp"

using namespace bispec;
using namespace bispec::algebra;
using namespace bispec::spectral;
using bispec::testing::Gen;

namespace {

GaussianRational q(long p, long d = 1) { return GaussianRational(Rational(p, d)); }

MatPolyX fixture_potential(const cli::PolynomialFixture& fx) {
  const std::size_t n = fx.V0.rows();
  const auto seed = autonomous::SeedData::canonical(n, 0, fx.V0, fx.V1);
  return autonomous::recurse_coefficients(seed, 4 * fx.n + 4).regular_part();
}

MatLaurent pole(std::size_t n) { return MatLaurent::exact(MatC::scalar(n, q(-2)), MatPolyX(n)); }

MatC taylor(const MatPolyX& p, std::size_t k) { return k < p.coeffs().size() ? p.coeff(k) : MatC::zero(p.dim()); }

// Random scalar polynomial in V: always a member when V is.
MatPolyX polynomial_in(const MatPolyX& v, Gen& g, std::size_t max_degree) {
  MatPolyX out = MatPolyX::constant(MatC::scalar(v.dim(), g.gaussian()));
  MatPolyX power = MatPolyX::constant(MatC::identity(v.dim()));
  for (std::size_t d = 1; d <= max_degree; ++d) {
    power = power * v;
    out += g.gaussian() * power;
  }
  return out;
}

RatMatZ scalar_over_power(const GaussianRational& c, std::size_t power) {
  return {MatPolyZ::constant(MatC{{c}}), ScalarPoly::monomial(q(1), power)};
}

}  // namespace

TEST_SUITE("P_k") {
  TEST_CASE("scalar theta has vanishing P_k") {
    Gen g(2101);
    const MatPolyX v = fixture_potential(cli::fixture_n2());
    const MatPolyX theta = MatPolyX::constant(MatC::scalar(4, g.nonzero_gaussian()));
    for (std::size_t k = 0; k <= 8; ++k) {
      CHECK(p_k(theta, MatLaurent::from_polynomial(v), k).is_zero());
      CHECK(p_k(theta, pole(4), k).is_zero());
    }
  }

  TEST_CASE("P_k(V) = k V_k for a polynomial solution") {
    for (const auto& fx : {cli::fixture_n1(), cli::fixture_n2()}) {
      const MatPolyX v = fixture_potential(fx);
      for (std::size_t k = 0; k <= fx.n + 2; ++k) {
        CHECK(p_k(v, MatLaurent::from_polynomial(v), k) == taylor(v, k) * GaussianRational(static_cast<long>(k)));
      }
    }
  }

  TEST_CASE("with V = 0 only the Taylor term survives") {
    Gen g(2102);
    const MatPolyX theta = g.poly(2, 5);
    const MatLaurent zero = MatLaurent::exact(MatC::zero(2), MatPolyX(2));
    for (std::size_t k = 0; k <= 6; ++k) {
      CHECK(p_k(theta, zero, k) == taylor(theta, k) * GaussianRational(static_cast<long>(k)));
    }
  }

  TEST_CASE("P_0 is half the commutator with the residue") {
    Gen g(2103);
    MatC vm1 = MatC::zero(2);
    vm1(0, 0) = q(-2);
    const MatLaurent v = MatLaurent::exact(vm1, MatPolyX(2));
    const MatPolyX theta = g.poly(2, 3);
    CHECK(p_k(theta, v, 0) == commutator(vm1, taylor(theta, 0)) * q(1, 2));
  }

  TEST_CASE("two routes agree on random data") {
    Gen g(2104);
    const MatPolyX v2 = fixture_potential(cli::fixture_n2());
    for (int t = 0; t < 20; ++t) {
      const MatPolyX theta = g.poly(2, 3);
      for (std::size_t k = 0; k <= 5; ++k) CHECK(p_operator_form_check(theta, pole(2), k));
      const MatPolyX theta4 = g.poly(4, 4, 0.5);
      for (std::size_t k = 0; k <= 8; ++k) CHECK(p_operator_form_check(theta4, MatLaurent::from_polynomial(v2), k));
    }
    CHECK(p_k_operator_form(MatPolyX::constant(MatC::identity(2)), pole(2), 3).is_zero());
  }

  TEST_CASE("product formula on random pairs") {
    Gen g(2105);
    const MatPolyX v1 = fixture_potential(cli::fixture_n1());
    const MatLaurent zero = MatLaurent::exact(MatC::zero(2), MatPolyX(2));
    for (int t = 0; t < 15; ++t) {
      const MatPolyX a = g.poly(2, 4), b = g.poly(2, 4);
      for (std::size_t k = 0; k <= 8; ++k) {
        CHECK(product_formula_check(a, b, MatLaurent::from_polynomial(v1), k));
        CHECK(product_formula_check(a, b, pole(2), k));
        CHECK(product_formula_check(a, b, zero, k));
      }
      CHECK(product_formula_check(a, MatPolyX::constant(MatC::identity(2)), pole(2), 4));
    }
  }
}

TEST_SUITE("block matrices") {
  TEST_CASE("A1 for the pole has superdiagonal (r - 1) I") {
    const BlockMatrix a1 = build_A1(pole(2), 3);
    REQUIRE(a1.block_rows() == 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        const MatC expect = c == r + 1 ? MatC::scalar(2, GaussianRational(static_cast<long>(r))) : MatC::zero(2);
        CHECK(a1.block(r, c) == expect);
      }
    }
  }

  TEST_CASE("A1 for zero and constant potentials") {
    const MatLaurent zero = MatLaurent::exact(MatC::zero(2), MatPolyX(2));
    const BlockMatrix a = build_A1(zero, 1);
    CHECK(a.block(0, 1) == MatC::identity(2));
    CHECK(a.block(0, 0).is_zero());
    CHECK(a.block(1, 0).is_zero());
    CHECK(a.block(1, 1).is_zero());

    const MatC v0{{1, 2}, {3, 4}};
    const BlockMatrix b = build_A1(MatLaurent::from_polynomial(MatPolyX::constant(v0)), 1);
    CHECK(b.block(0, 0) == v0 * q(1, 2));
    CHECK(b.block(0, 1) == MatC::identity(2));
    CHECK(b.block(1, 0).is_zero());
    CHECK(b.block(1, 1) == v0 * q(1, 2));
  }

  TEST_CASE("A2 row structure") {
    CHECK(build_A2(pole(2), 3).block_rows() == 0);
    CHECK(build_A2(MatLaurent::from_polynomial(MatPolyX::constant(MatC::identity(2))), 2).block_rows() == 0);
    const MatC v0{{1, 2}, {3, 4}}, v1{{0, 1}, {0, 0}};
    const BlockMatrix a2 = build_A2(MatLaurent::from_polynomial(MatPolyX(2, {v0, v1})), 1);
    REQUIRE(a2.block_rows() == 1);
    REQUIRE(a2.block_cols() == 2);
    CHECK(a2.block(0, 0).is_zero());
    CHECK(a2.block(0, 1) == v1);
  }

  TEST_CASE("p_vector stacks P_lo..P_hi") {
    Gen g(2201);
    const MatPolyX theta = g.poly(2, 3);
    const PVector p = p_vector(theta, pole(2), 1, 4);
    REQUIRE(p.entries.size() == 4);
    for (std::size_t k = 1; k <= 4; ++k) CHECK(p.entries[k - 1] == p_k(theta, pole(2), k));
    CHECK(p.stacked().rows() == 8);
  }
}

TEST_SUITE("membership") {
  TEST_CASE("for the pole, theta is a member iff theta'(0) = 0") {
    Gen g(2301);
    for (int t = 0; t < 25; ++t) {
      MatPolyX theta = g.poly(2, 4, 0.6);
      const bool flat = theta.coeffs().size() < 2 || theta.coeff(1).is_zero();
      const auto cert = membership(theta, pole(2));
      CHECK(cert.member == flat);
      if (!cert.member) {
        REQUIRE(cert.failed.has_value());
        REQUIRE(cert.witness.has_value());
        CHECK_FALSE(cert.witness->is_zero());
      }
    }
    const auto x = membership(MatPolyX::monomial(MatC::identity(2), 1), pole(2));
    CHECK_FALSE(x.member);
    CHECK(*x.failed == FailedCondition::ResidueRow);
  }

  TEST_CASE("the identity is always a member") {
    for (const auto& fx : {cli::fixture_n1(), cli::fixture_n2()}) {
      const MatPolyX v = fixture_potential(fx);
      CHECK(membership(MatPolyX::constant(MatC::identity(v.dim())), v).member);
    }
    CHECK(membership(MatPolyX::constant(MatC::identity(3)), pole(3)).member);
  }

  TEST_CASE("a polynomial potential meeting the monomial conditions is in its own algebra") {
    for (const auto& fx : {cli::fixture_n1(), cli::fixture_n2()}) {
      CHECK(nilpotency_conditions(fx.V0, fx.V1, fx.n).ok);
      const MatPolyX v = fixture_potential(fx);
      CHECK(autonomous::check_autonomous(v).ok);
      CHECK(membership(v, v).member);
      CHECK(subindex_invariant_check(v, (fx.n + 1) * v.dim() - 1).ok);
    }
  }

  TEST_CASE("a non-autonomous potential is refused") {
    const MatPolyX v = MatPolyX::monomial(MatC{{1, 1}, {0, 1}}, 1);
    CHECK_THROWS_AS(membership(MatPolyX::constant(MatC::identity(2)), v), PotentialNotAutonomous);
  }

  TEST_CASE("x M fails when M does not commute with the top coefficient") {
    const MatPolyX v = fixture_potential(cli::fixture_n1());
    const MatC m{{1, 0}, {0, 2}};
    REQUIRE_FALSE(commutator(m, v.coeff(1)).is_zero());
    const MatPolyX theta = MatPolyX::monomial(m, 1);
    CHECK_FALSE(commutator_degree_check(theta, v));
    CHECK_FALSE(membership(theta, v).member);
  }

  TEST_CASE("commutator degree examples") {
    Gen g(2302);
    const MatPolyX v = fixture_potential(cli::fixture_n2());
    CHECK(commutator_degree_check(MatPolyX::constant(MatC::scalar(4, g.gaussian())), v));
    CHECK(commutator_degree_check(v, v));
  }

  TEST_CASE("members are closed under sums and products") {
    Gen g(2303);
    const MatPolyX v = fixture_potential(cli::fixture_n1());
    for (int t = 0; t < 6; ++t) {
      const MatPolyX a = polynomial_in(v, g, 2), b = polynomial_in(v, g, 2);
      REQUIRE(membership(a, v).member);
      REQUIRE(membership(b, v).member);
      CHECK(membership(a + b, v).member);
      CHECK(membership(a * b, v).member);
    }
  }

  TEST_CASE("theta_degree treats zero as degree 0") {
    CHECK(theta_degree(MatPolyX(2)) == 0);
    CHECK(theta_degree(MatPolyX::monomial(MatC::identity(2), 3)) == 3);
  }
}

TEST_SUITE("synthesis") {
  TEST_CASE("theta = I gives the identity operator") {
    const MatPolyX v = fixture_potential(cli::fixture_n1());
    const DiffOpZ b = synthesize_B(MatPolyX::constant(MatC::identity(2)), v);
    CHECK(b.order == 0);
    REQUIRE(b.b.size() == 1);
    CHECK(b.b[0] == RatMatZ::constant(MatC::identity(2)));
  }

  TEST_CASE("pole closed form for x^2 and x^3") {
    const MatLaurent v = pole(1);
    const DiffOpZ b2 = synthesize_B(MatPolyX::monomial(MatC::identity(1), 2), v);
    REQUIRE(b2.b.size() == 3);
    CHECK(b2.b[0].is_zero());
    CHECK(b2.b[1] == scalar_over_power(q(-2), 1));
    CHECK(b2.b[2] == RatMatZ::constant(MatC::identity(1)));

    const DiffOpZ b3 = synthesize_B(MatPolyX::monomial(MatC::identity(1), 3), v);
    REQUIRE(b3.b.size() == 4);
    CHECK(b3.b[0].is_zero());
    CHECK(b3.b[1] == scalar_over_power(q(3), 2));
    CHECK(b3.b[2] == scalar_over_power(q(-3), 1));
    CHECK(b3.b[3] == RatMatZ::constant(MatC::identity(1)));
  }

  TEST_CASE("non-members are refused") {
    CHECK_THROWS_AS(synthesize_B(MatPolyX::monomial(MatC::identity(2), 1), pole(2)), NotAMember);
  }

  TEST_CASE("membership verdict matches synthesis plus a vanishing residual") {
    Gen g(2401);
    const MatPolyX v = fixture_potential(cli::fixture_n1());
    const MatLaurent lv = MatLaurent::from_polynomial(v);
    int members = 0;
    for (int t = 0; t < 16; ++t) {
      const MatPolyX theta = t % 2 == 0 ? polynomial_in(v, g, 2) : g.poly(2, 4, 0.5);
      const auto cert = membership(theta, lv);
      if (cert.member) {
        ++members;
        const Synthesis syn = synthesize(theta, lv);
        CHECK(syn.sign == 1);
        CHECK(residual_vanishes(lambda_residual(theta, syn.op, lv)));
        for (std::size_t j = 0; j < syn.op.b.size(); ++j) CHECK(syn.op.b[j].limit_at_infinity() == taylor(theta, j));
      } else {
        CHECK_THROWS_AS(synthesize(theta, lv), NotAMember);
        // No operator of the same order built from the formula can work.
        CHECK_FALSE(residual_vanishes(lambda_residual(theta, candidate_operator(theta, lv, 1), lv)));
      }
    }
    CHECK(members >= 8);
  }

  TEST_CASE("a perturbed b_0 leaves a residual") {
    const MatPolyX v = fixture_potential(cli::fixture_n2());
    const MatLaurent lv = MatLaurent::from_polynomial(v);
    DiffOpZ b = synthesize_B(v, lv);
    b.b[0] += RatMatZ::constant(MatC::unit(4, 1, 1));
    CHECK_FALSE(residual_vanishes(lambda_residual(v, b, lv)));
  }

  TEST_CASE("V = 0 with constant theta and B = theta has no residual") {
    const MatC a0{{1, 2}, {3, 4}};
    const MatLaurent zero = MatLaurent::exact(MatC::zero(2), MatPolyX(2));
    const DiffOpZ b{0, {RatMatZ::constant(a0)}};
    CHECK(residual_vanishes(lambda_residual(MatPolyX::constant(a0), b, zero)));
  }
}

TEST_SUITE("physical equation") {
  TEST_CASE("check_physical examples") {
    Gen g(2501);
    for (int t = 0; t < 4; ++t) {
      CHECK(check_physical(autonomous::build_polynomial_solution(g.strictly_upper(3), 32)).ok);
    }
    CHECK(check_physical(pole(2), 12).ok);
    CHECK_FALSE(check_physical(MatPolyX::monomial(MatC{{1, 1}, {0, 1}}, 1)).ok);
  }

  TEST_CASE("check_physical and check_autonomous agree on random series") {
    Gen g(2502);
    for (int t = 0; t < 10; ++t) {
      const MatPolyX v = g.poly(2, 3, 0.5);
      CHECK(check_physical(v).ok == autonomous::check_autonomous(v).ok);
    }
  }
}

TEST_SUITE("nilpotency conditions") {
  TEST_CASE("n = 1 words are V1 V0 and V1^2") {
    const auto words = admissible_words(1);
    REQUIRE(words.size() == 2);
    CHECK(words[0].exponents == std::vector<unsigned>{1, 1});
    CHECK(words[1].exponents == std::vector<unsigned>{2, 0});
  }

  TEST_CASE("n = 2 words all vanish when V1 V0 V1 = V1 V0^2 = V1^2 = 0") {
    const auto fx = cli::fixture_n2();
    for (const auto& w : admissible_words(2)) {
      CHECK(w.exponents.size() == 3);
      CHECK(w.exponents[0] >= 1);
      CHECK(w.grading() >= 4);
      CHECK(w.total() <= 3);
    }
    CHECK((fx.V1 * fx.V0 * fx.V1).is_zero());
    CHECK((fx.V1 * fx.V0 * fx.V0).is_zero());
    CHECK((fx.V1 * fx.V1).is_zero());
    CHECK(nilpotency_conditions(fx.V0, fx.V1, 2).ok);
  }

  TEST_CASE("V1 = 0 always passes, a nonzero word is reported") {
    Gen g(2601);
    CHECK(nilpotency_conditions(g.matrix(3), MatC::zero(3), 2).ok);
    const MatC v1{{0, 1}, {0, 0}}, v0{{0, 0}, {0, 1}};
    const auto r = nilpotency_conditions(v0, v1, 1);
    CHECK_FALSE(r.ok);
    REQUIRE(r.failing.has_value());
    CHECK(r.failing->exponents == std::vector<unsigned>{1, 1});
    CHECK(*r.witness == v1 * v0);
  }
}
