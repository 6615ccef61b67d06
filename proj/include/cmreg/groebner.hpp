#pragma once

#include "cmreg/polynomial.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cmreg {

class MonomialIdeal;

/// Thrown when a Buchberger run passes its deadline.
class GroebnerTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm of the leading
/// monomials and lt including the coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction of `f` by `divisors`. The highest reducible term is always
/// reduced first, using the first divisor (in list order) whose leading
/// monomial divides it.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

struct BuchbergerOptions {
  /// Coprime-leading-monomial and Gebauer–Möller chain criteria.
  bool use_criteria = true;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// Reduced Gröbner basis: monic, inter-reduced, tail-reduced, and sorted
/// ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements,
                std::vector<Polynomial> source, BuchbergerStats stats = {});

  MonomialOrder order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Polynomial>& source() const { return source_; }
  const BuchbergerStats& stats() const { return stats_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const;

 private:
  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<Polynomial> elements_;
  std::vector<Polynomial> source_;
  BuchbergerStats stats_;
};

/// Pair selection is the normal strategy: smallest lcm under the order, ties
/// broken by the smaller first index, then the smaller second index.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         MonomialOrder order = MonomialOrder::degrevlex,
                         const BuchbergerOptions& opts = {});

/// Turns an arbitrary generating set into the reduced basis of its span when
/// it already is a Gröbner basis (used after Buchberger and for checks).
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, MonomialOrder order);

/// True when every S-pair of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// All k-fold products g_{i1} ... g_{ik} with i1 <= ... <= ik, in that
/// lexicographic index order (C(m + k - 1, k) entries).
std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, unsigned k);

/// `power_products` with exact duplicates removed, first occurrence kept.
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, unsigned k);

bool membership(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace cmreg
