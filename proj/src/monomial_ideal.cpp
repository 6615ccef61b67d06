#include "cmreg/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

namespace cmreg {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return compare(a, b, MonomialOrder::lastvar) == Ordering::less;
  });
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), MonomialLess{MonomialOrder::lastvar});
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw RingMismatch("generator has wrong number of variables");
  }
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != nvars_) throw RingMismatch("monomial has wrong number of variables");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::size_t max_index(const Monomial& u) {
  for (std::size_t k = u.size(); k-- > 0;) {
    if (u[k] > 0) return k + 1;
  }
  return 0;
}

Monomial strip_max(const Monomial& u) {
  Monomial s = u;
  const std::size_t m = max_index(u);
  if (m > 0) s.set(m - 1, 0);
  return s;
}

WeakStabilityReport weak_stability(const MonomialIdeal& ideal) {
  WeakStabilityReport report;
  const auto& gens = ideal.gens();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t m = max_index(gens[i]);
    const Monomial s = strip_max(gens[i]);
    for (std::size_t j = 0; j + 1 < m; ++j) {
      // x_j^a * s lies in I iff some generator is bounded by s off coordinate j.
      const bool reachable = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
        for (std::size_t k = 0; k < g.size(); ++k) {
          if (k != j && g[k] > s[k]) return false;
        }
        return true;
      });
      if (!reachable) {
        report.stable = false;
        report.failures.push_back({i, j + 1});
      }
    }
  }
  return report;
}

bool is_weakly_stable(const MonomialIdeal& ideal) { return weak_stability(ideal).stable; }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.size() != ideal.nvars()) throw RingMismatch("colon by monomial from another ring");
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) {
    out.push_back(Monomial::generate(g.size(), [&](std::size_t k) { return g[k] > u[k] ? g[k] - u[k] : 0; }));
  }
  return MonomialIdeal(ideal.nvars(), std::move(out));
}

namespace {

struct Corner {
  enum class Kind { unit, finite, infinite } kind = Kind::unit;
  std::uint64_t value = 0;
  std::vector<Exponent> witness;  // exponents of x_1..x_m
};

// Drops generators divisible by another, looking only at the first m coordinates.
std::vector<std::vector<Exponent>> minimal_prefix(std::vector<std::vector<Exponent>> gens, std::size_t m) {
  auto deg = [m](const std::vector<Exponent>& g) {
    return std::accumulate(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(m), std::uint64_t{0});
  };
  std::sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
    const auto da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m), b.begin(),
                                        b.begin() + static_cast<std::ptrdiff_t>(m));
  });
  std::vector<std::vector<Exponent>> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      bool div = true;
      for (std::size_t c = 0; c < m && div; ++c) div = k[c] <= g[c];
      if (div) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

// Highest-degree monomial in k[x_1..x_m] outside the ideal spanned by `gens`
// (coordinates beyond m are ignored). Splits on the exponent a of x_m: the
// ideal seen by the remaining variables only changes when a crosses some
// generator's x_m exponent, and on each interval the largest a is best.
Corner highest_outside(const std::vector<std::vector<Exponent>>& gens, std::size_t m) {
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(m), [](Exponent e) { return e == 0; })) {
      return {};
    }
  }
  if (m == 0) return {Corner::Kind::finite, 0, {}};
  const std::size_t last = m - 1;
  std::optional<Exponent> pure;
  for (const auto& g : gens) {
    bool only_last = true;
    for (std::size_t c = 0; c < last && only_last; ++c) only_last = g[c] == 0;
    if (only_last && (!pure || g[last] < *pure)) pure = g[last];
  }
  if (!pure) return {Corner::Kind::infinite, 0, {}};

  std::vector<Exponent> breaks{0};
  for (const auto& g : gens) {
    if (g[last] < *pure) breaks.push_back(g[last]);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  Corner best;
  for (std::size_t b = 0; b < breaks.size(); ++b) {
    const Exponent a = (b + 1 < breaks.size() ? breaks[b + 1] : *pure) - 1;
    std::vector<std::vector<Exponent>> sub;
    for (const auto& g : gens) {
      if (g[last] <= a) sub.push_back(g);
    }
    Corner r = highest_outside(minimal_prefix(std::move(sub), last), last);
    if (r.kind == Corner::Kind::infinite) return r;
    if (r.kind == Corner::Kind::unit) continue;
    const std::uint64_t cand = r.value + a;
    if (best.kind == Corner::Kind::unit || cand > best.value) {
      best.kind = Corner::Kind::finite;
      best.value = cand;
      best.witness = std::move(r.witness);
      best.witness.resize(m, 0);
      best.witness[last] = a;
    }
  }
  return best;
}

}  // namespace

EscapeDegree escape_degree(const MonomialIdeal& ideal, std::size_t var_limit) {
  if (var_limit > ideal.nvars()) throw std::out_of_range("escape_degree: variable limit exceeds ring");
  std::vector<std::vector<Exponent>> restricted;
  for (const auto& g : ideal.gens()) {
    if (max_index(g) <= var_limit) restricted.emplace_back(g.exponents().begin(), g.exponents().end());
  }
  const Corner c = highest_outside(minimal_prefix(std::move(restricted), var_limit), var_limit);
  EscapeDegree out;
  out.witness = Monomial(ideal.nvars());
  switch (c.kind) {
    case Corner::Kind::infinite:
      out.infinite = true;
      break;
    case Corner::Kind::unit:
      break;
    case Corner::Kind::finite:
      out.value = c.value;
      for (std::size_t k = 0; k < c.witness.size(); ++k) out.witness.set(k, c.witness[k]);
      break;
  }
  return out;
}

CavigliaRegularity caviglia_regularity(const MonomialIdeal& ideal, GeneratorEnumeration enumeration) {
  if (ideal.is_zero()) throw RegularityFormulaError("regularity of the zero ideal is undefined");
  const WeakStabilityReport stability = weak_stability(ideal);
  if (!stability.stable) {
    const auto& f = stability.failures.front();
    throw RegularityFormulaError("ideal is not weakly stable (generator " + std::to_string(f.generator) +
                                 ", variable x" + std::to_string(f.variable) + ")");
  }
  std::vector<Monomial> gens = ideal.gens();
  if (enumeration == GeneratorEnumeration::descending) std::reverse(gens.begin(), gens.end());

  CavigliaRegularity result;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Monomial& u = gens[i];
    const MonomialIdeal earlier(ideal.nvars(), {gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i)});
    const std::size_t limit = max_index(u) == 0 ? 0 : max_index(u) - 1;
    const EscapeDegree c = escape_degree(colon(earlier, u), limit);
    if (c.infinite) {
      throw RegularityFormulaError("infinite escape degree at generator " + std::to_string(i) +
                                   " (degree " + std::to_string(u.degree()) + ")");
    }
    if (!c.value) throw std::logic_error("colon ideal became the unit ideal for a minimal generator");
    result.terms.push_back({u, *c.value, c.witness});
    const std::uint64_t v = u.degree() + *c.value;
    if (i == 0 || v > result.value) {
      result.value = v;
      result.attaining = i;
    }
  }
  return result;
}

IntPolynomial trim(IntPolynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

namespace {

void add_shifted(IntPolynomial& acc, const IntPolynomial& p, std::size_t shift, int sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sign > 0) {
      acc[k + shift] += p[k];
    } else {
      acc[k + shift] -= p[k];
    }
  }
}

IntPolynomial numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();
  std::vector<std::size_t> uses(n, 0);
  for (const auto& g : gens) {
    for (std::size_t k = 0; k < n; ++k) uses[k] += g[k] > 0 ? 1 : 0;
  }
  const auto pivot_it = std::max_element(uses.begin(), uses.end());
  if (*pivot_it <= 1) {
    // Pairwise coprime: product of (1 - t^deg g).
    IntPolynomial acc{1};
    for (const auto& g : gens) {
      IntPolynomial next = acc;
      add_shifted(next, acc, g.degree(), -1);
      acc = std::move(next);
    }
    return trim(std::move(acc));
  }
  const auto pivot = static_cast<std::size_t>(pivot_it - uses.begin());

  // HS(S/I) = HS(S/(I + x)) + t * HS(S/(I : x)).
  std::vector<Monomial> plus{Monomial::variable(n, pivot)};
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    Monomial q = g;
    if (q[pivot] > 0) q.set(pivot, q[pivot] - 1);
    quot.push_back(std::move(q));
  }
  IntPolynomial acc = numerator(minimalize(std::move(plus)));
  add_shifted(acc, numerator(minimalize(std::move(quot))), 1, 1);
  return trim(std::move(acc));
}

}  // namespace

IntPolynomial hilbert_series_numerator(const MonomialIdeal& ideal) {
  if (std::any_of(ideal.gens().begin(), ideal.gens().end(), [](const Monomial& g) { return g.is_one(); })) {
    return {};
  }
  return numerator(ideal.gens());
}

}  // namespace cmreg
