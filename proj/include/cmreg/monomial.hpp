#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmreg {

using Exponent = std::uint32_t;

/// Raised when two objects from rings of different dimension meet.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense exponent vector with cached total degree and a folded support mask.
///
/// The mask sets bit (k mod 64) for every variable k with a positive
/// exponent, so `a | b` implies `mask(a) & ~mask(b) == 0`.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  /// Builds the monomial whose k-th exponent is `fn(k)`.
  template <class Fn>
  static Monomial generate(std::size_t nvars, Fn&& fn) {
    Monomial m(nvars);
    for (std::size_t k = 0; k < nvars; ++k) m.exps_[k] = static_cast<Exponent>(fn(k));
    m.recompute();
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  void set(std::size_t i, Exponent e);

  std::uint64_t degree() const { return degree_; }
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  void recompute();

  boost::container::small_vector<Exponent, 12> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

enum class MonomialOrder {
  /// Degree first; ties go to the monomial whose difference vector has a
  /// negative last nonzero entry.
  degrevlex,
  /// Exponent of the last variable first, then the one before it, and so on.
  /// Total degree is not consulted.
  lastvar,
};

enum class Ordering { less, equal, greater };

void check_same_ring(const Monomial& a, const Monomial& b);

Ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Strict-weak-ordering adaptor, ascending under `order`.
struct MonomialLess {
  MonomialOrder order = MonomialOrder::degrevlex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order) == Ordering::less;
  }
};

bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// `b / a`; requires `divides(a, b)`.
Monomial quotient(const Monomial& b, const Monomial& a);

std::string to_string(const Monomial& m, std::span<const std::string> names);
std::string to_string(MonomialOrder order);

/// All monomials of total degree `degree` in the first `nvars_used` of `nvars`
/// variables, in descending lex order of the exponent vector.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t nvars_used,
                                          std::uint64_t degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace cmreg
