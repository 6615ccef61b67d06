#include "cmreg/betti.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace cmreg {

KoszulComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  if (b.size() != ideal.nvars()) throw RingMismatch("multidegree from another ring");
  KoszulComplex out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] > 0) out.support.push_back(k);
  }
  if (out.support.size() > 30) throw std::length_error("Koszul complex support too large");

  // Only generators dividing b can divide b - tau.
  std::vector<const Monomial*> relevant;
  for (const auto& g : ideal.gens()) {
    if (divides(g, b)) relevant.push_back(&g);
  }
  out.faces.resize(out.support.size() + 1);
  if (relevant.empty()) {
    out.faces.resize(1);
    return out;
  }

  const std::uint64_t count = std::uint64_t{1} << out.support.size();
  // A face's subsets are faces, so a set is only tested once all of its
  // one-smaller subsets passed.
  std::vector<char> is_face(count, 0);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool candidate = true;
    for (std::size_t bit = 0; bit < out.support.size() && candidate; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) candidate = is_face[mask ^ (std::uint64_t{1} << bit)] != 0;
    }
    if (!candidate) continue;
    const bool in_ideal = std::any_of(relevant.begin(), relevant.end(), [&](const Monomial* g) {
      for (std::size_t bit = 0; bit < out.support.size(); ++bit) {
        const std::size_t k = out.support[bit];
        const Exponent e = b[k] - ((mask >> bit) & 1U);
        if ((*g)[k] > e) return false;
      }
      return true;
    });
    if (in_ideal) {
      is_face[mask] = 1;
      out.faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
  }
  while (out.faces.size() > 1 && out.faces.back().empty()) out.faces.pop_back();
  return out;
}

std::size_t exact_rank(std::vector<std::vector<long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(ncols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = rows[r][c];
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]);
        mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> reduced_homology(const KoszulComplex& complex) {
  const auto& faces = complex.faces;
  if (faces.empty() || faces[0].empty()) return std::vector<std::size_t>(std::max<std::size_t>(faces.size(), 1), 0);

  // ranks[k] = rank of the boundary from faces[k] to faces[k - 1].
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& lower = faces[k - 1];
    const auto& upper = faces[k];
    if (upper.empty() || lower.empty()) continue;
    std::vector<std::vector<long>> matrix(lower.size(), std::vector<long>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const std::uint64_t sigma = upper[col];
      long sign = 1;
      for (std::size_t bit = 0; bit < 64; ++bit) {
        const std::uint64_t v = std::uint64_t{1} << bit;
        if ((sigma & v) == 0) continue;
        const auto it = std::lower_bound(lower.begin(), lower.end(), sigma ^ v);
        if (it != lower.end() && *it == (sigma ^ v)) {
          matrix[static_cast<std::size_t>(it - lower.begin())][col] = sign;
        }
        sign = -sign;
      }
    }
    ranks[k] = exact_rank(std::move(matrix));
  }
  std::vector<std::size_t> dims(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) dims[k] = faces[k].size() - ranks[k] - ranks[k + 1];
  return dims;
}

std::vector<std::size_t> koszul_homology_dims(const MonomialIdeal& ideal, const Monomial& b) {
  return reduced_homology(koszul_complex(ideal, b));
}

std::vector<Monomial> candidate_multidegrees(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> all;
  std::vector<Monomial> frontier;
  auto key = [](const Monomial& m) { return std::vector<Exponent>(m.exponents().begin(), m.exponents().end()); };
  for (const auto& g : gens) {
    if (seen.insert(key(g)).second) {
      all.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Monomial l = lcm(f, g);
        if (seen.insert(key(l)).second) {
          all.push_back(l);
          next.push_back(std::move(l));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return compare(a, b, MonomialOrder::lastvar) == Ordering::less;
  });
  return all;
}

BettiTable::BettiTable(std::size_t nvars, std::vector<BettiEntry> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.rank == 0) throw std::invalid_argument("Betti table entries must be positive");
    if (e.multidegree.size() != nvars_) throw RingMismatch("Betti multidegree from another ring");
  }
}

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
  for (const auto& e : entries_) out[{e.homological, e.multidegree.degree()}] += e.rank;
  return out;
}

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> BettiTable::graded_quotient() const {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
  out[{0, 0}] = 1;
  for (const auto& [key, rank] : graded()) out[{key.first + 1, key.second}] += rank;
  return out;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& e : entries_) pd = std::max(pd, e.homological);
  return pd;
}

BettiTable betti_table(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  std::vector<BettiEntry> entries;
  for (const auto& b : candidate_multidegrees(ideal)) {
    const auto dims = koszul_homology_dims(ideal, b);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] > 0) entries.push_back({i, b, dims[i]});
    }
  }
  return BettiTable(ideal.nvars(), std::move(entries));
}

std::int64_t regularity_from_betti(const BettiTable& table) {
  if (table.empty()) throw std::invalid_argument("regularity of an empty Betti table");
  std::int64_t reg = 0;
  bool first = true;
  for (const auto& e : table.entries()) {
    const auto v = static_cast<std::int64_t>(e.multidegree.degree()) - static_cast<std::int64_t>(e.homological);
    if (first || v > reg) reg = v;
    first = false;
  }
  return reg;
}

IntPolynomial euler_characteristic_numerator(const BettiTable& table) {
  IntPolynomial k{1};
  for (const auto& e : table.entries()) {
    const auto d = static_cast<std::size_t>(e.multidegree.degree());
    if (k.size() <= d) k.resize(d + 1);
    // beta_{i,b}(I) sits in homological degree i + 1 for S/I.
    if (e.homological % 2 == 0) {
      k[d] -= static_cast<unsigned long>(e.rank);
    } else {
      k[d] += static_cast<unsigned long>(e.rank);
    }
  }
  return trim(std::move(k));
}

}  // namespace cmreg
