#pragma once

#include "cmreg/monomial_ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace cmreg {

/// Upper Koszul simplicial complex of I at multidegree b: the squarefree
/// vectors tau <= b with x^(b - tau) in I, grouped by dimension. Faces are
/// bitmasks over the variables in the support of b.
struct KoszulComplex {
  std::vector<std::size_t> support;            // variable indices with b_k > 0
  std::vector<std::vector<std::uint64_t>> faces;  // faces[k + 1] = faces of dimension k
};

KoszulComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// Rank over Q of an integer matrix (rows of equal length), by fraction-free
/// elimination.
std::size_t exact_rank(std::vector<std::vector<long>> rows);

/// Reduced homology dimensions H~_{-1}, H~_0, H~_1, ... over Q.
std::vector<std::size_t> reduced_homology(const KoszulComplex& complex);

/// dims[i] = beta_{i,b}(I) = dim H~_{i-1}(K^b(I)).
std::vector<std::size_t> koszul_homology_dims(const MonomialIdeal& ideal, const Monomial& b);

/// lcms of all nonempty subsets of the minimal generators, ascending by degree
/// then lastvar.
std::vector<Monomial> candidate_multidegrees(const MonomialIdeal& ideal);

struct BettiEntry {
  std::size_t homological;  // i
  Monomial multidegree;     // b
  std::size_t rank;         // beta_{i,b}(I) >= 1
};

/// Multigraded Betti numbers of I (generators in homological degree 0).
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t nvars, std::vector<BettiEntry> entries);

  std::size_t nvars() const { return nvars_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// beta_{i,j}(I) keyed by (i, j = |b|).
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded() const;
  /// beta_{i,j}(S/I): the same numbers shifted to i + 1, plus beta_{0,0} = 1.
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded_quotient() const;

  std::size_t projective_dimension() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<BettiEntry> entries_;
};

BettiTable betti_table(const MonomialIdeal& ideal);

/// max over entries of |b| - i (ideal convention, so reg((x, y)) = 1).
std::int64_t regularity_from_betti(const BettiTable& table);

/// K(t) = sum_i (-1)^i sum_b beta_{i,b}(S/I) t^|b|.
IntPolynomial euler_characteristic_numerator(const BettiTable& table);

}  // namespace cmreg
