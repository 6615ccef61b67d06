#include "cmreg/families.hpp"

#include "cmreg/groebner.hpp"

#include <sstream>
#include <stdexcept>

namespace cmreg {

std::optional<bool> Prediction::matches(std::int64_t computed) const {
  switch (kind) {
    case Kind::none:
      return std::nullopt;
    case Kind::exact:
      return computed == value;
    case Kind::lower_bound:
      return computed >= value;
  }
  return std::nullopt;
}

std::string Prediction::describe() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::exact:
      return std::to_string(value);
    case Kind::lower_bound:
      return ">= " + std::to_string(value);
  }
  return "none";
}

std::string FamilyInstance::label() const {
  std::ostringstream out;
  out << name << '(';
  bool first = true;
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (!v) return;
    if (!first) out << ',';
    first = false;
    out << key << '=' << *v;
  };
  put("n", params.n);
  put("d", params.d);
  put("i", params.i);
  put("j", params.j);
  out << ')';
  return out.str();
}

namespace {

// Monomial from (variable index 1-based, exponent) pairs.
Monomial mono(std::size_t nvars, std::initializer_list<std::pair<int, int>> powers) {
  Monomial m(nvars);
  for (auto [var, e] : powers) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    m.set(static_cast<std::size_t>(var - 1), m[static_cast<std::size_t>(var - 1)] + static_cast<Exponent>(e));
  }
  return m;
}

Polynomial term(const Monomial& m) { return Polynomial::monomial(m); }

Polynomial binomial(const Monomial& a, const Monomial& b) {
  return Polynomial(a.size(), {Term{1, a}, Term{-1, b}});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::int64_t sq(std::int64_t v) { return v * v; }

}  // namespace

FamilyInstance caviglia(int d) {
  require(d >= 2, "caviglia: d must be at least 2");
  const std::size_t n = 4;
  FamilyInstance f{"caviglia", {.d = d}, Ring::standard(n), {}, {}, {}};
  f.generators = {term(mono(n, {{1, d}})), term(mono(n, {{2, d}})),
                  binomial(mono(n, {{1, 1}, {3, d - 1}}), mono(n, {{2, 1}, {4, d - 1}}))};
  f.predicted = Prediction::exactly(sq(d) - 1, "reg(I) = d^2 - 1");
  f.predicted_square = Prediction::exactly(sq(d) + d - 1, "reg(I^2) = d^2 + d - 1");
  return f;
}

FamilyInstance caviglia_ij(int d, int i, int j) {
  require(d >= 2, "caviglia-ij: d must be at least 2");
  require(i >= 1 && i < d && j >= 1 && j < d, "caviglia-ij: need 1 <= i, j < d");
  const std::size_t n = 4;
  FamilyInstance f{"caviglia-ij", {.d = d, .i = i, .j = j}, Ring::standard(n), {}, {}, {}};
  f.generators = {term(mono(n, {{1, d}})), term(mono(n, {{2, d}})),
                  binomial(mono(n, {{1, i}, {3, d - i}}), mono(n, {{2, j}, {4, d - j}}))};
  if (i == 1) {
    f.predicted = Prediction::exactly(sq(d) - 1, "reg(I_1j) = d^2 - 1");
  } else if (i == 2 && j == 2) {
    if (d % 2 == 1) {
      f.predicted = Prediction::exactly((d + 2) * (d - 1) / 2, "reg(I_22) = (d + 2)(d - 1)/2 for odd d");
    } else {
      f.predicted = Prediction::exactly((sq(d) - 2) / 2, "reg(I_22) = (d^2 - 2)/2 for even d");
    }
  }
  return f;
}

FamilyInstance caviglia_square(int d) {
  require(d >= 2, "caviglia-square: d must be at least 2");
  const FamilyInstance base = caviglia(d);
  FamilyInstance f{"caviglia-square", {.d = d}, base.ring, ideal_power(base.generators, 2), {}, {}};
  f.predicted = Prediction::exactly(sq(d) + d - 1, "reg(J) = d^2 + d - 1");
  return f;
}

FamilyInstance fivevar(int d) {
  require(d >= 2, "fivevar: d must be at least 2");
  const std::size_t n = 5;
  FamilyInstance f{"fivevar", {.d = d}, Ring::standard(n), {}, {}, {}};
  f.generators = {term(mono(n, {{1, d}})),
                  term(mono(n, {{2, d}})),
                  term(mono(n, {{3, d}})),
                  term(mono(n, {{1, 1}, {2, d - 1}})),
                  term(mono(n, {{1, 1}, {3, d - 1}})),
                  binomial(mono(n, {{2, 1}, {4, d - 1}}), mono(n, {{3, 1}, {5, d - 1}}))};
  f.predicted = Prediction::exactly(sq(d) - 1, "reg(I) = d^2 - 1");
  return f;
}

FamilyInstance sixvar(int d) {
  require(d >= 2, "sixvar: d must be at least 2");
  const std::size_t n = 6;
  FamilyInstance f{"sixvar", {.d = d}, Ring::standard(n), {}, {}, {}};
  f.generators = {term(mono(n, {{1, d}})),
                  term(mono(n, {{2, d}})),
                  term(mono(n, {{3, d}})),
                  term(mono(n, {{4, d}})),
                  binomial(mono(n, {{1, 1}, {3, d - 1}}), mono(n, {{2, 1}, {4, d - 1}})),
                  binomial(mono(n, {{3, 1}, {5, d - 1}}), mono(n, {{4, 1}, {6, d - 1}}))};
  const std::int64_t dd = d;
  f.predicted = Prediction::exactly(dd * (dd - 1) * (dd - 2) + 3 * dd - 3, "reg(I) = d(d - 1)(d - 2) + 3d - 3");
  return f;
}

FamilyInstance chain2n(int n, int d) {
  require(n >= 2, "chain2n: n must be at least 2");
  require(d >= 2, "chain2n: d must be at least 2");
  const auto nvars = static_cast<std::size_t>(2 * n);
  FamilyInstance f{"chain2n", {.d = d, .n = n}, Ring::standard(nvars), {}, {}, {}};
  for (int k = 1; k <= 2 * n - 2; ++k) f.generators.push_back(term(mono(nvars, {{k, d}})));
  for (int i = 0; i <= n - 2; ++i) {
    f.generators.push_back(binomial(mono(nvars, {{2 * i + 1, 1}, {2 * i + 3, d - 1}}),
                                    mono(nvars, {{2 * i + 2, 1}, {2 * i + 4, d - 1}})));
  }
  if (n == 4) {
    const std::int64_t dd = d;
    f.predicted = Prediction::exactly((dd - 2) * (dd * sq(dd - 1) + 3) + 3, "reg(I) = (d - 2)(d(d - 1)^2 + 3) + 3");
  }
  return f;
}

FamilyInstance terai() {
  const std::size_t n = 6;
  FamilyInstance f{"terai", {}, Ring::standard(n), {}, {}, {}};
  const int cubes[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
  for (const auto& c : cubes) f.generators.push_back(term(mono(n, {{c[0], 1}, {c[1], 1}, {c[2], 1}})));
  f.predicted = Prediction::exactly(3, "reg(I) = 3");
  f.predicted_square = Prediction::exactly(7, "reg(I^2) = 7");
  return f;
}

int jump_index(int n, int i, int j) {
  require(n >= 3, "jump: n must be at least 3");
  require(2 <= i && i < j && j <= n + 1, "jump: need 2 <= i < j <= n + 1");
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + 1 + (j - i);
}

int jump_ring_size(int n) {
  require(n >= 3, "jump: n must be at least 3");
  return n * (n + 1) / 2 + 1;
}

FamilyInstance jump(int n) {
  const auto s = static_cast<std::size_t>(jump_ring_size(n));
  FamilyInstance f{"jump", {.n = n}, Ring::standard(s), {}, {}, {}};
  for (int k = 1; k <= n + 1; ++k) f.generators.push_back(term(mono(s, {{k, 2}})));
  for (int k = 2; k <= n + 1; ++k) f.generators.push_back(term(mono(s, {{1, 1}, {k, 1}})));
  for (int i = 2; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      f.generators.push_back(binomial(mono(s, {{i, 1}, {j, 1}}), mono(s, {{1, 1}, {jump_index(n, i, j), 1}})));
    }
  }
  f.predicted = Prediction::exactly(2, "reg(I_n) = 2");
  f.predicted_square = Prediction::at_least(5, "reg(I_n^2) > 4");
  return f;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"caviglia", "caviglia-ij", "caviglia-square", "fivevar",
                                                 "sixvar",   "chain2n",     "terai",           "jump"};
  return names;
}

FamilyInstance make_family(const std::string& name, const FamilyParams& p) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw std::invalid_argument("family " + name + " needs --" + flag);
    return *v;
  };
  if (name == "caviglia") return caviglia(need(p.d, "d"));
  if (name == "caviglia-ij") return caviglia_ij(need(p.d, "d"), need(p.i, "i"), need(p.j, "j"));
  if (name == "caviglia-square") return caviglia_square(need(p.d, "d"));
  if (name == "fivevar") return fivevar(need(p.d, "d"));
  if (name == "sixvar") return sixvar(need(p.d, "d"));
  if (name == "chain2n") return chain2n(need(p.n, "n"), need(p.d, "d"));
  if (name == "terai") return terai();
  if (name == "jump") return jump(need(p.n, "n"));
  throw std::invalid_argument("unknown family '" + name + "'");
}

const Prediction& predicted_regularity(const FamilyInstance& instance) { return instance.predicted; }

}  // namespace cmreg
