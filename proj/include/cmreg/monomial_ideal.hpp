#pragma once

#include "cmreg/monomial.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cmreg {

/// Monomial ideal held by its minimal generators, sorted ascending under the
/// lastvar order (pure powers of x1 first).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Minimalizes `gens`.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Drops generators divisible by another one and sorts ascending by lastvar.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// 1-based index of the last variable dividing `u`; 0 for u = 1.
std::size_t max_index(const Monomial& u);

/// `u` with the full power of its last variable removed; 1 stays 1.
Monomial strip_max(const Monomial& u);

struct WeakStabilityFailure {
  std::size_t generator;  // index into gens()
  std::size_t variable;   // 1-based j < m(u) with no x_j^a * strip_max(u) in I
};

struct WeakStabilityReport {
  bool stable = true;
  std::vector<WeakStabilityFailure> failures;
};

WeakStabilityReport weak_stability(const MonomialIdeal& ideal);
bool is_weakly_stable(const MonomialIdeal& ideal);

/// (I : u), generated by g / gcd(g, u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// Largest degree of a monomial in k[x_1..x_limit] outside an ideal.
struct EscapeDegree {
  bool infinite = false;
  /// Unset when the restricted ideal is the unit ideal.
  std::optional<std::uint64_t> value;
  Monomial witness;
};

EscapeDegree escape_degree(const MonomialIdeal& ideal, std::size_t var_limit);

enum class GeneratorEnumeration { ascending, descending };

/// Raised when the combinatorial regularity formula does not apply.
class RegularityFormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CavigliaTerm {
  Monomial generator;
  std::uint64_t escape = 0;
  Monomial witness;
};

struct CavigliaRegularity {
  std::uint64_t value = 0;
  std::size_t attaining = 0;  // index into terms
  std::vector<CavigliaTerm> terms;
};

/// reg(I) = max_i deg(u_i) + C(u_i), where C(u_i) is the escape degree of
/// ((u_1..u_{i-1}) : u_i) in the first m(u_i) - 1 variables. Requires weak
/// stability; throws RegularityFormulaError when it fails or an escape degree
/// is infinite.
CavigliaRegularity caviglia_regularity(
    const MonomialIdeal& ideal, GeneratorEnumeration enumeration = GeneratorEnumeration::ascending);

/// Coefficient k is the coefficient of t^k; trailing zeros trimmed.
using IntPolynomial = std::vector<mpz_class>;

IntPolynomial trim(IntPolynomial p);

/// Numerator K(t) of the Hilbert series K(t) / (1 - t)^n of S/I.
IntPolynomial hilbert_series_numerator(const MonomialIdeal& ideal);

}  // namespace cmreg
