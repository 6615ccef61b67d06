#include "cmreg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmreg {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

Ring Ring::standard(std::size_t nvars, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t k = 1; k <= nvars; ++k) names.push_back(prefix + std::to_string(k));
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

bool greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return compare(a, b, order) == Ordering::greater;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms, MonomialOrder order)
    : nvars_(nvars), order_(order) {
  for (const auto& t : terms) {
    if (t.mono.size() != nvars) throw RingMismatch("term has wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return greater(a.mono, b.mono, order); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::monomial(const Monomial& m, Rational coeff, MonomialOrder order) {
  Polynomial p(m.size(), order);
  if (coeff != 0) p.terms_.push_back({std::move(coeff), m});
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c, MonomialOrder order) {
  return monomial(Monomial(nvars), std::move(c), order);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return Polynomial(nvars_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading_coefficient();
  if (lc == 1) return *this;
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff /= lc;
  return out;
}

void Polynomial::check_compatible(const Polynomial& q) const {
  if (q.nvars_ != nvars_) throw RingMismatch("polynomials from rings of different size");
  if (q.order_ != order_) throw std::invalid_argument("polynomials sorted under different orders");
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& q) {
  check_compatible(q);
  if (m.size() != nvars_) throw RingMismatch("multiplier has wrong number of variables");
  if (c == 0 || q.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto it = terms_.begin();
  auto jt = q.terms_.begin();
  Monomial shifted;
  bool have_shifted = false;
  while (it != terms_.end() || jt != q.terms_.end()) {
    if (jt != q.terms_.end() && !have_shifted) {
      shifted = jt->mono * m;
      have_shifted = true;
    }
    if (jt == q.terms_.end()) {
      out.push_back(std::move(*it++));
      continue;
    }
    if (it == terms_.end()) {
      out.push_back({-c * jt->coeff, std::move(shifted)});
      ++jt;
      have_shifted = false;
      continue;
    }
    switch (compare(it->mono, shifted, order_)) {
      case Ordering::greater:
        out.push_back(std::move(*it++));
        break;
      case Ordering::less:
        out.push_back({-c * jt->coeff, std::move(shifted)});
        ++jt;
        have_shifted = false;
        break;
      case Ordering::equal: {
        Rational coeff = it->coeff - c * jt->coeff;
        if (coeff != 0) out.push_back({std::move(coeff), std::move(it->mono)});
        ++it;
        ++jt;
        have_shifted = false;
        break;
      }
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  sub_mul(Rational(-1), Monomial(nvars_), q);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  sub_mul(Rational(1), Monomial(nvars_), q);
  return *this;
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_trailing(Term t) {
  if (t.coeff == 0) return;
  if (!terms_.empty() && !greater(terms_.back().mono, t.mono, order_)) {
    throw std::logic_error("push_trailing: term out of order");
  }
  terms_.push_back(std::move(t));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_.size() == b.terms_.size() && a.with_order(b.order_).terms_ == b.terms_;
}

Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

Polynomial operator-(const Polynomial& p) { return scale(p, Rational(-1)); }

Polynomial scale(const Polynomial& p, const Rational& c) {
  return multiply(p, c, Monomial(p.nvars()));
}

Polynomial multiply(const Polynomial& p, const Rational& c, const Monomial& m) {
  Polynomial out(p.nvars(), p.order());
  if (c == 0) return out;
  // Multiplication by a monomial preserves a monomial order, so no re-sort.
  for (const auto& t : p.terms()) out.push_trailing({t.coeff * c, t.mono * m});
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw RingMismatch("polynomials from rings of different size");
  if (p.order() != q.order()) throw std::invalid_argument("polynomials sorted under different orders");
  std::vector<Term> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) terms.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  return Polynomial(p.nvars(), std::move(terms), p.order());
}

Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1, p.order());
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p, const Ring& ring) {
  if (p.nvars() != ring.size()) throw RingMismatch("polynomial printed with a ring of different size");
  if (p.is_zero()) return "0";
  const Polynomial q = p.with_order(MonomialOrder::degrevlex);
  std::ostringstream out;
  bool first = true;
  for (const auto& t : q.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << to_string(t.mono, ring.names());
    }
  }
  return out.str();
}

}  // namespace cmreg
