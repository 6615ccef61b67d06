#pragma once

#include "cmreg/monomial.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmreg {

using Rational = mpq_class;

/// Ordered variable names over the rationals. Variable k (0-based) is x_{k+1}
/// in the ambient order x_1 < x_2 < ... < x_n.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  /// Ring with variables x1, ..., xn.
  static Ring standard(std::size_t nvars, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.mono == b.mono; }
};

/// Sparse polynomial over Q. Terms are strictly descending under `order()`,
/// coefficients nonzero; the empty term list is zero.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::degrevlex)
      : nvars_(nvars), order_(order) {}

  /// Sorts and combines `terms`, dropping zero coefficients.
  Polynomial(std::size_t nvars, std::vector<Term> terms,
             MonomialOrder order = MonomialOrder::degrevlex);

  static Polynomial monomial(const Monomial& m, Rational coeff = 1,
                             MonomialOrder order = MonomialOrder::degrevlex);
  static Polynomial constant(std::size_t nvars, Rational c,
                             MonomialOrder order = MonomialOrder::degrevlex);

  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  bool is_homogeneous() const;

  /// Same polynomial with terms re-sorted under `order`.
  Polynomial with_order(MonomialOrder order) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  /// this -= c * m * q, in one merge pass.
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& q);

  /// Moves the leading term out of this polynomial.
  Term pop_leading();
  /// Appends a term strictly smaller than every present term.
  void push_trailing(Term t);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& q) const;

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial p, const Polynomial& q);
Polynomial operator-(Polynomial p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial multiply(const Polynomial& p, const Rational& c, const Monomial& m);
Polynomial power(const Polynomial& p, unsigned k);

/// Canonical text: descending degrevlex, `*` between all factors, explicit `^`.
std::string to_string(const Polynomial& p, const Ring& ring);

}  // namespace cmreg
