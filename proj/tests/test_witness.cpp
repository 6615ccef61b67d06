#include "cmreg/betti.hpp"
#include "cmreg/families.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/witness.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cmreg;

namespace {

// Membership of a homogeneous f of degree t in the ideal, by comparing
// Macaulay-matrix ranks with and without f.
bool in_ideal_by_rank(const std::vector<Polynomial>& gens, const Polynomial& f, std::size_t n) {
  const std::uint64_t t = f.total_degree();
  std::vector<Polynomial> extended = gens;
  extended.push_back(f);
  return oracle::ideal_dimension(gens, n, t) == oracle::ideal_dimension(extended, n, t);
}

std::vector<std::size_t> surviving_by_definition(int n) {
  std::vector<std::size_t> out;
  for (int i = 2; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      if (i > 4 && j > 4) out.push_back(static_cast<std::size_t>(jump_index(n, i, j)));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("square of the jump family") {
  TEST_CASE("build_square") {
    const GroebnerBasis gb = build_square(3);
    REQUIRE(gb.size() > 0);
    CHECK(gb.nvars() == 7);
    for (const auto& g : gb.elements()) CHECK(g.total_degree() >= 4);
    CHECK(std::any_of(gb.elements().begin(), gb.elements().end(), [](const Polynomial& g) { return g.total_degree() == 4; }));
    CHECK_THROWS_AS(build_square(2), std::invalid_argument);
  }

  TEST_CASE("alpha and the claimed in(I_n)") {
    CHECK(jump_alpha(3) == Monomial{1, 1, 1, 1, 0, 0, 0});
    CHECK(jump_alpha(5).size() == 16);
    for (int n = 3; n <= 6; ++n) {
      const MonomialIdeal expected = expected_initial_ideal(n);
      CHECK(expected.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
      CHECK(initial_ideal(buchberger(jump(n).generators)) == expected);
    }
  }

  TEST_CASE("surviving indices match the definition") {
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(surviving_indices(n) == surviving_by_definition(n));
    }
    CHECK(surviving_indices(3).empty());
    CHECK(surviving_indices(4).empty());
    CHECK(surviving_indices(5) == std::vector<std::size_t>{static_cast<std::size_t>(jump_index(5, 5, 6))});
  }

  TEST_CASE("identity suite for n = 3") {
    auto claims = identity_suite(3);
    CHECK(claims.size() == 12);
    for (const auto& c : claims) CHECK_FALSE(c.holds);
    CHECK(claims[0].description == "x1*x2*x3*x4 = x1^2*x4*x5");
    CHECK(claims.back().description == "alpha*x7 = 0");
    check_claims(claims, build_square(3));
    for (const auto& c : claims) {
      CAPTURE(c.description);
      CHECK(c.holds);
    }
  }

  TEST_CASE("identities cross-checked by Macaulay-matrix rank for n = 3") {
    const FamilyInstance f = jump(3);
    const auto J = power_products(f.generators, 2);
    for (const auto& c : identity_suite(3)) {
      CAPTURE(c.description);
      CHECK(in_ideal_by_rank(J, c.polynomial, 7));
    }
    CHECK_FALSE(in_ideal_by_rank(J, Polynomial::monomial(jump_alpha(3)), 7));
  }

  TEST_CASE("identities hold for n = 3..6") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      auto claims = identity_suite(n);
      check_claims(claims, build_square(n));
      for (const auto& c : claims) CHECK(c.holds);
    }
  }
}

TEST_SUITE("jump check") {
  TEST_CASE("n = 3: full H^0 witness") {
    const WitnessReport r = jump_check(3);
    CHECK(r.initial_ideal_matches);
    CHECK(r.initial_weakly_stable);
    CHECK(r.ideal_regularity == 2);
    CHECK(r.alpha_nonzero);
    CHECK(r.annihilating_variables == std::vector<std::size_t>{5, 6, 7});
    CHECK(r.surviving_variables.empty());
    REQUIRE(r.h0_complete.has_value());
    CHECK(*r.h0_complete);
    REQUIRE(r.torsion_exponent.has_value());
    CHECK(*r.torsion_exponent <= 13u);
    CHECK(*r.torsion_exponent == 1u);
    CHECK(r.conclusion == WitnessConclusion::jump_confirmed);
    CHECK(to_string(r.conclusion) == "JUMP_CONFIRMED");
  }

  TEST_CASE("torsion exponent is the least one, checked by rank") {
    const FamilyInstance f = jump(3);
    const auto J = power_products(f.generators, 2);
    const Monomial alpha = jump_alpha(3);
    for (std::size_t k = 0; k < 7; ++k) {
      CAPTURE(k);
      CHECK(in_ideal_by_rank(J, Polynomial::monomial(alpha * Monomial::variable(7, k)), 7));
    }
  }

  TEST_CASE("n = 4..6: identities only") {
    for (int n = 4; n <= 6; ++n) {
      CAPTURE(n);
      const WitnessReport r = jump_check(n);
      CHECK(r.conclusion == WitnessConclusion::identities_only);
      CHECK(to_string(r.conclusion) == "IDENTITIES_ONLY");
      CHECK(r.alpha_nonzero);
      CHECK_FALSE(r.torsion_exponent.has_value());
      CHECK(r.surviving_variables == surviving_indices(n));
      std::set<std::size_t> off_surviving;
      for (std::size_t j = static_cast<std::size_t>(n + 2); j <= static_cast<std::size_t>(jump_ring_size(n)); ++j) {
        if (std::count(r.surviving_variables.begin(), r.surviving_variables.end(), j) == 0) off_surviving.insert(j);
      }
      for (std::size_t j : off_surviving) {
        CHECK(std::count(r.annihilating_variables.begin(), r.annihilating_variables.end(), j) == 1);
      }
    }
  }

  TEST_CASE("reg(in(J_3)) exceeds 4") {
    const MonomialIdeal in_j = initial_ideal(build_square(3));
    CHECK_FALSE(is_weakly_stable(in_j));
    CHECK(regularity_from_betti(betti_table(in_j)) >= 5);
  }

  TEST_CASE("conclusion names") {
    CHECK(to_string(WitnessConclusion::failed) == "FAILED");
  }
}
