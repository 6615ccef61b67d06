#pragma once

// Reference computations written independently of the library algorithms:
// brute-force enumeration, plain Gaussian elimination over Q, and naive
// definitions. Only the value types (Monomial, Polynomial) are shared.

#include "cmreg/monomial.hpp"
#include "cmreg/monomial_ideal.hpp"
#include "cmreg/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using cmreg::Exponent;
using cmreg::Monomial;
using cmreg::Polynomial;

inline bool divides_naive(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline bool in_monomial_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides_naive(g, m); });
}

/// Every exponent vector of total degree `degree` whose support lies in the
/// first `used` of `n` variables.
inline std::vector<Monomial> monomials(std::size_t n, std::size_t used, std::uint64_t degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t left) -> void {
    if (used == 0) {
      if (left == 0) out.emplace_back(std::span<const Exponent>(e));
      return;
    }
    if (k + 1 == used) {
      e[k] = static_cast<Exponent>(left);
      out.emplace_back(std::span<const Exponent>(e));
      e[k] = 0;
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      e[k] = static_cast<Exponent>(a);
      self(self, k + 1, left - a);
    }
    e[k] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// dim_k (S/I)_t for a monomial ideal, by counting standard monomials.
inline std::uint64_t hilbert_function(const std::vector<Monomial>& gens, std::size_t n, std::uint64_t t) {
  std::uint64_t count = 0;
  for (const auto& m : monomials(n, n, t)) count += in_monomial_ideal(gens, m) ? 0 : 1;
  return count;
}

/// Coefficient of t^k in K(t) / (1 - t)^n.
inline mpz_class series_coefficient(const std::vector<mpz_class>& numerator, std::size_t n, std::uint64_t k) {
  mpz_class total = 0;
  for (std::uint64_t i = 0; i < numerator.size() && i <= k; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), k - i + n - 1, n - 1);
    total += numerator[i] * binom;
  }
  return total;
}

/// Rank over Q by textbook Gaussian elimination.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// dim_k I_t for a homogeneous ideal: rank of the Macaulay matrix whose rows
/// are m * g over all generators g and monomials m of degree t - deg g.
inline std::size_t ideal_dimension(const std::vector<Polynomial>& gens, std::size_t n, std::uint64_t t) {
  const auto basis = monomials(n, n, t);
  std::map<std::vector<Exponent>, std::size_t> column;
  for (const auto& m : basis) column[{m.exponents().begin(), m.exponents().end()}] = column.size();
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const std::uint64_t dg = g.total_degree();
    if (g.is_zero() || dg > t) continue;
    for (const auto& m : monomials(n, n, t - dg)) {
      std::vector<mpq_class> row(basis.size());
      for (const auto& term : g.terms()) {
        const Monomial p = m * term.mono;
        row[column.at({p.exponents().begin(), p.exponents().end()})] = term.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_q(std::move(rows));
}

/// Largest degree <= `bound` of a monomial in k[x_1..x_limit] outside the
/// ideal, or nullopt when every such monomial lies inside. Degree `bound`
/// itself being reachable means the true value may be larger.
inline std::optional<std::uint64_t> escape_bruteforce(const std::vector<Monomial>& gens, std::size_t n,
                                                      std::size_t limit, std::uint64_t bound) {
  std::optional<std::uint64_t> best;
  for (std::uint64_t t = 0; t <= bound; ++t) {
    for (const auto& m : monomials(n, limit, t)) {
      if (!in_monomial_ideal(gens, m)) {
        best = t;
        break;
      }
    }
  }
  return best;
}

/// Weak stability straight from the definition: for each generator u and
/// j < m(u), some x_j^a * (u with x_m(u) removed) lies in I, trying a up to
/// the largest exponent of x_j among the generators.
inline bool weakly_stable_naive(const std::vector<Monomial>& gens) {
  for (const auto& u : gens) {
    std::size_t m = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] > 0) m = k + 1;
    }
    if (m == 0) continue;
    Monomial base = u;
    base.set(m - 1, 0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
      Exponent top = 0;
      for (const auto& g : gens) top = std::max(top, g[j]);
      bool found = false;
      for (Exponent a = 0; a <= top && !found; ++a) {
        Monomial v = base;
        v.set(j, base[j] + a);
        found = in_monomial_ideal(gens, v);
      }
      if (!found) return false;
    }
  }
  return true;
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> dist(0, max_exp);
  return Monomial::generate(n, [&](std::size_t) { return dist(rng); });
}

/// Random nonzero monomial ideal generators (not minimalized).
inline std::vector<Monomial> random_monomials(std::mt19937& rng, std::size_t n, std::size_t count, Exponent max_exp) {
  std::vector<Monomial> out;
  while (out.size() < count) {
    Monomial m = random_monomial(rng, n, max_exp);
    if (!m.is_one()) out.push_back(std::move(m));
  }
  return out;
}

/// Strongly stable closure of random monomials: whenever x_k divides m, the
/// swap x_j * m / x_k (j < k) is added. Strongly stable ideals are weakly
/// stable, so this feeds the formula-versus-oracle comparison.
inline std::vector<Monomial> random_strongly_stable(std::mt19937& rng, std::size_t n, std::size_t seeds,
                                                    Exponent max_exp) {
  std::vector<Monomial> work = random_monomials(rng, n, seeds, max_exp);
  std::vector<Monomial> all;
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    if (std::find(all.begin(), all.end(), m) != all.end()) continue;
    for (std::size_t k = 1; k < n; ++k) {
      if (m[k] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        Monomial s = m;
        s.set(k, m[k] - 1);
        s.set(j, m[j] + 1);
        work.push_back(std::move(s));
      }
    }
    all.push_back(std::move(m));
  }
  return all;
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t n, std::size_t terms, Exponent max_exp) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<cmreg::Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    mpq_class c(coeff(rng), den(rng));
    c.canonicalize();
    out.push_back({c, random_monomial(rng, n, max_exp)});
  }
  return Polynomial(n, std::move(out));
}

}  // namespace oracle
