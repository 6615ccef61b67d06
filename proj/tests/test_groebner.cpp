#include "cmreg/families.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/monomial_ideal.hpp"
#include "cmreg/parse.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cmreg;

namespace {

const Ring R4 = Ring::standard(4);

Polynomial P(const std::string& text, const Ring& ring = R4) { return parse_polynomial(text, ring); }

std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, const Ring& ring = R4) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, ring));
  return out;
}

MonomialIdeal monomials_of(const std::vector<Polynomial>& polys, std::size_t n) {
  std::vector<Monomial> m;
  for (const auto& p : polys) m.push_back(p.leading_monomial());
  return MonomialIdeal(n, m);
}

// Every S-pair reduces to zero, checked pair by pair.
bool spair_closed(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

void check_reduced(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    REQUIRE(el[i].leading_coefficient() == 1);
    if (i > 0) REQUIRE(compare(el[i - 1].leading_monomial(), el[i].leading_monomial(), gb.order()) == Ordering::less);
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[i].terms()) REQUIRE_FALSE(divides(el[j].leading_monomial(), t.mono));
    }
  }
}

struct Instance {
  std::string label;
  std::vector<Polynomial> gens;
  std::size_t nvars;
  std::uint64_t max_degree;
};

std::vector<Instance> small_instances() {
  std::vector<Instance> out;
  auto add = [&](const FamilyInstance& f, std::uint64_t max_degree) {
    out.push_back({f.label(), f.generators, f.ring.size(), max_degree});
  };
  add(caviglia(2), 7);
  add(caviglia(3), 10);
  add(caviglia_square(2), 8);
  add(caviglia_ij(3, 1, 2), 9);
  add(caviglia_ij(3, 2, 2), 8);
  add(caviglia_ij(3, 2, 1), 8);
  add(fivevar(2), 6);
  add(fivevar(3), 8);
  add(sixvar(2), 5);
  add(chain2n(3, 2), 4);
  add(jump(3), 4);
  return out;
}

}  // namespace

TEST_SUITE("s-polynomial") {
  TEST_CASE("square of caviglia(2): S(g3, g6) = +-x1^3*x2*x4") {
    const Polynomial g3 = P("x1^2") * P("x1*x3 - x2*x4");
    const Polynomial g6 = P("x1^4");
    const Polynomial s = s_polynomial(g3, g6);
    CHECK((s == P("x1^3*x2*x4") || s == P("-x1^3*x2*x4")));
  }

  TEST_CASE("S(f, f) = 0") { CHECK(s_polynomial(P("x1*x3 - x2*x4"), P("x1*x3 - x2*x4")).is_zero()); }

  TEST_CASE("coprime leading monomials reduce to zero") {
    const auto fg = Ps({"x1^2", "x2^2"});
    CHECK(normal_form(s_polynomial(fg[0], fg[1]), fg).is_zero());
    const auto pq = Ps({"x1^2 + x3*x4", "x2^3 - x4^3"});
    CHECK(normal_form(s_polynomial(pq[0], pq[1]), pq).is_zero());
  }

  TEST_CASE("zero input") { CHECK_THROWS_AS(s_polynomial(Polynomial(4), P("x1")), std::invalid_argument); }
}

TEST_SUITE("normal form") {
  TEST_CASE("members reduce to zero") {
    const auto b = Ps({"x1^2", "x1*x3 - x2*x4"});
    CHECK(normal_form(b[1], b).is_zero());
    CHECK(normal_form(P("x2^3*x4"), Ps({"x2^2"})).is_zero());
  }

  TEST_CASE("result has no reducible term and differs by an ideal element") {
    std::mt19937 rng(21);
    const GroebnerBasis gb = buchberger(caviglia(3).generators);
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial f = oracle::random_polynomial(rng, 4, 6, 4);
      const Polynomial r = normal_form(f, gb.elements());
      for (const auto& t : r.terms()) {
        for (const auto& g : gb.elements()) REQUIRE_FALSE(divides(g.leading_monomial(), t.mono));
      }
      REQUIRE(membership(f - r, gb));
    }
  }

  TEST_CASE("property: normal form is linear modulo the basis") {
    std::mt19937 rng(4);
    for (const auto& gens : {caviglia(2).generators, caviglia(3).generators, fivevar(2).generators}) {
      const GroebnerBasis gb = buchberger(gens);
      const std::size_t n = gb.nvars();
      for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = oracle::random_polynomial(rng, n, 5, 3);
        const Polynomial g = oracle::random_polynomial(rng, n, 5, 3);
        const auto& el = gb.elements();
        REQUIRE(normal_form(f + g, el) == normal_form(normal_form(f, el) + normal_form(g, el), el));
        REQUIRE(normal_form(scale(f, mpq_class(-5, 3)), el) == scale(normal_form(f, el), mpq_class(-5, 3)));
      }
    }
  }
}

TEST_SUITE("buchberger") {
  TEST_CASE("caviglia(2) adds exactly x1*x2*x4") {
    const GroebnerBasis gb = buchberger(caviglia(2).generators);
    CHECK(initial_ideal(gb) == MonomialIdeal(4, {Monomial{2, 0, 0, 0}, Monomial{0, 2, 0, 0}, Monomial{1, 0, 1, 0},
                                                 Monomial{1, 1, 0, 1}}));
    CHECK(gb.size() == 4);
    CHECK(std::find(gb.elements().begin(), gb.elements().end(), P("x1*x2*x4")) != gb.elements().end());
    CHECK(std::find(gb.elements().begin(), gb.elements().end(), P("x1*x3 - x2*x4")) != gb.elements().end());
  }

  TEST_CASE("a single monomial is its own basis") {
    const GroebnerBasis gb = buchberger({P("x1^2*x3")});
    REQUIRE(gb.size() == 1);
    CHECK(gb.elements()[0] == P("x1^2*x3"));
  }

  TEST_CASE("a monomial ideal gives its minimal generators") {
    const GroebnerBasis gb = buchberger(Ps({"x1^2*x2", "x1*x2", "x3^2", "x2*x3^2"}));
    CHECK(gb.elements() == Ps({"x3^2", "x1*x2"}));
  }

  TEST_CASE("coefficients are made monic and the unit ideal collapses") {
    CHECK(buchberger(Ps({"3*x1 - 6*x2"})).elements() == Ps({"x1 - 2*x2"}));
    CHECK(buchberger(Ps({"x1", "x1 + 1"})).elements() == Ps({"1"}));
  }

  TEST_CASE("empty input and mixed rings") {
    CHECK_THROWS_AS(buchberger({}), std::invalid_argument);
    CHECK_THROWS_AS(buchberger({P("x1"), parse_polynomial("x1", Ring::standard(3))}), RingMismatch);
  }

  TEST_CASE("initial ideal of the square of caviglia(2) is the displayed list") {
    // x1^{2d}, x2^{2d}, x1^d x2^d, x1^{d+1} x3^{d-1}, x1 x2^d x3^{d-1}, x1^2 x3^{2(d-1)},
    // x1^{d-i} x2^{d+i} x4^{i(d-1)}, x1^{d-i} x2^{i+1} x3^{d-1} x4^{(i+1)(d-1)},
    // x1^{2d-i} x2^i x4^{i(d-1)} at d = 2
    const MonomialIdeal expected(4, {Monomial{4, 0, 0, 0}, Monomial{0, 4, 0, 0}, Monomial{2, 2, 0, 0},
                                     Monomial{3, 0, 1, 0}, Monomial{1, 2, 1, 0}, Monomial{2, 0, 2, 0},
                                     Monomial{1, 3, 0, 1}, Monomial{2, 1, 1, 1}, Monomial{3, 1, 0, 1}});
    CHECK(initial_ideal(buchberger(caviglia_square(2).generators)) == expected);
  }

  TEST_CASE("golden files: in(J) for the square of caviglia(d), d = 2, 3") {
    for (int d : {2, 3}) {
      CAPTURE(d);
      const IdealFile golden =
          read_ideal_file(std::string(CMREG_GOLDEN_DIR) + "/caviglia_square_d" + std::to_string(d) + ".txt");
      const MonomialIdeal expected = monomials_of(golden.generators, 4);
      REQUIRE(expected.size() == golden.generators.size());
      const MonomialIdeal computed = initial_ideal(buchberger(caviglia_square(d).generators));
      CHECK(computed == expected);
      // The golden file lists the generators in ascending lastvar order.
      std::vector<Monomial> listed;
      for (const auto& g : golden.generators) listed.push_back(g.leading_monomial());
      CHECK(listed == computed.gens());
    }
  }

  TEST_CASE("in(I_n) is every quadric in x1..x_{n+1}") {
    for (int n = 3; n <= 6; ++n) {
      const FamilyInstance f = jump(n);
      const std::size_t s = f.ring.size();
      std::vector<Monomial> quadrics;
      for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        for (std::size_t j = i; j <= static_cast<std::size_t>(n); ++j) {
          quadrics.push_back(Monomial::variable(s, i) * Monomial::variable(s, j));
        }
      }
      CHECK(initial_ideal(buchberger(f.generators)) == MonomialIdeal(s, quadrics));
    }
  }

  TEST_CASE("property: computed bases are reduced and S-pair closed") {
    for (const auto& inst : small_instances()) {
      CAPTURE(inst.label);
      const GroebnerBasis gb = buchberger(inst.gens);
      check_reduced(gb);
      CHECK(spair_closed(gb.elements()));
      CHECK(is_groebner_basis(gb.elements()));
      for (const auto& g : inst.gens) CHECK(membership(g, gb));
    }
  }

  TEST_CASE("property: determinism and criteria independence") {
    for (const auto& inst : small_instances()) {
      CAPTURE(inst.label);
      const GroebnerBasis a = buchberger(inst.gens);
      const GroebnerBasis b = buchberger(inst.gens);
      BuchbergerOptions plain;
      plain.use_criteria = false;
      const GroebnerBasis c = buchberger(inst.gens, MonomialOrder::degrevlex, plain);
      REQUIRE(a.elements() == b.elements());
      REQUIRE(a.elements() == c.elements());
      const Ring ring = Ring::standard(inst.nvars);
      for (std::size_t k = 0; k < a.size(); ++k) {
        REQUIRE(to_string(a.elements()[k], ring) == to_string(b.elements()[k], ring));
      }
      // Input order does not change the reduced basis.
      std::vector<Polynomial> reversed(inst.gens.rbegin(), inst.gens.rend());
      REQUIRE(buchberger(reversed).elements() == a.elements());
    }
  }

  TEST_CASE("property: Hilbert function of S/I equals that of S/in(I) (Macaulay matrix oracle)") {
    for (const auto& inst : small_instances()) {
      CAPTURE(inst.label);
      const MonomialIdeal in = initial_ideal(buchberger(inst.gens));
      const auto numerator = hilbert_series_numerator(in);
      for (std::uint64_t t = 0; t <= inst.max_degree; ++t) {
        CAPTURE(t);
        mpz_class total;
        mpz_bin_uiui(total.get_mpz_t(), t + inst.nvars - 1, inst.nvars - 1);
        const mpz_class quotient_dim = total - oracle::ideal_dimension(inst.gens, inst.nvars, t);
        REQUIRE(quotient_dim == oracle::hilbert_function(in.gens(), inst.nvars, t));
        REQUIRE(quotient_dim == oracle::series_coefficient(numerator, inst.nvars, t));
      }
    }
  }

  TEST_CASE("deadline in the past times out") {
    BuchbergerOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(buchberger(sixvar(4).generators, MonomialOrder::degrevlex, opts), GroebnerTimeout);
  }
}

TEST_SUITE("ideal power and membership") {
  TEST_CASE("square of caviglia(2) is the displayed six generators") {
    const auto expected = Ps({"x1^4", "x2^4", "x1^2*x2^2", "x1^3*x3 - x1^2*x2*x4", "x1*x2^2*x3 - x2^3*x4",
                              "x1^2*x3^2 - 2*x1*x2*x3*x4 + x2^2*x4^2"});
    auto computed = ideal_power(caviglia(2).generators, 2);
    REQUIRE(computed.size() == 6);
    for (const auto& e : expected) CHECK(std::find(computed.begin(), computed.end(), e) != computed.end());
  }

  TEST_CASE("k = 1 unchanged, k = 0 rejected, single variable cube") {
    const auto gens = caviglia(3).generators;
    CHECK(ideal_power(gens, 1) == gens);
    CHECK_THROWS_AS(ideal_power(gens, 0), std::invalid_argument);
    const Ring r1 = Ring::standard(1);
    CHECK(ideal_power({parse_polynomial("x1", r1)}, 3) == std::vector<Polynomial>{parse_polynomial("x1^3", r1)});
  }

  TEST_CASE("product counts") {
    CHECK(power_products(jump(3).generators, 2).size() == 55);
    // (x1*xk)^2 = x1^2 * xk^2 for k = 2, 3, 4
    CHECK(ideal_power(jump(3).generators, 2).size() == 52);
    CHECK(power_products(caviglia(2).generators, 3).size() == 10);
    const auto dup = Ps({"x1", "x1"});
    CHECK(power_products(dup, 2).size() == 3);
    CHECK(ideal_power(dup, 2).size() == 1);
  }

  TEST_CASE("memberships in J_3") {
    const Ring r7 = Ring::standard(7);
    const GroebnerBasis gb = buchberger(ideal_power(jump(3).generators, 2));
    CHECK(membership(parse_polynomial("x1*x2*x3*x4 - x1^2*x4*x5", r7), gb));
    CHECK(membership(parse_polynomial("x1^2*x2*x5", r7), gb));
    CHECK(membership(Polynomial(7), gb));
    CHECK_FALSE(membership(parse_polynomial("x1*x2*x3*x4", r7), gb));
    CHECK_THROWS_AS(membership(P("x1"), gb), RingMismatch);
  }
}
