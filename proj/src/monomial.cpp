#include "cmreg/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace cmreg {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  recompute();
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  recompute();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
  if (e > 0) {
    mask_ |= std::uint64_t{1} << (i % 64);
  } else {
    recompute();
  }
}

void Monomial::recompute() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] > 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw RingMismatch("monomials from rings with " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()) + " variables");
  }
}

Ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  check_same_ring(a, b);
  const std::size_t n = a.size();
  switch (order) {
    case MonomialOrder::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? Ordering::less : Ordering::greater;
      for (std::size_t k = n; k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? Ordering::greater : Ordering::less;
      }
      return Ordering::equal;
    }
    case MonomialOrder::lastvar: {
      for (std::size_t k = n; k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? Ordering::less : Ordering::greater;
      }
      return Ordering::equal;
    }
  }
  throw std::logic_error("unknown monomial order");
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  if ((a.support_mask() & ~b.support_mask()) != 0) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.size() <= 64) return (a.support_mask() & b.support_mask()) == 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > 0 && b[k] > 0) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.size(), [&](std::size_t k) { return std::max(a[k], b[k]); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.size(), [&](std::size_t k) { return std::min(a[k], b[k]); });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.size(), [&](std::size_t k) { return a[k] + b[k]; });
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::domain_error("monomial quotient: divisor does not divide");
  return Monomial::generate(a.size(), [&](std::size_t k) { return b[k] - a[k]; });
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (names.size() != m.size()) throw RingMismatch("monomial printed with a ring of different size");
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << names[k];
    if (m[k] > 1) out << '^' << m[k];
  }
  return out.str();
}

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::degrevlex ? "degrevlex" : "lastvar";
}

namespace {

void fill_degree(std::vector<Exponent>& e, std::size_t pos, std::size_t used, std::uint64_t left,
                 std::vector<Monomial>& out) {
  if (pos + 1 == used) {
    e[pos] = static_cast<Exponent>(left);
    out.emplace_back(std::span<const Exponent>(e));
    e[pos] = 0;
    return;
  }
  for (std::uint64_t a = left + 1; a-- > 0;) {
    e[pos] = static_cast<Exponent>(a);
    fill_degree(e, pos + 1, used, left - a, out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t nvars_used,
                                          std::uint64_t degree) {
  if (nvars_used > nvars) throw std::out_of_range("monomials_of_degree: too many variables");
  std::vector<Monomial> out;
  if (nvars_used == 0) {
    if (degree == 0) out.emplace_back(nvars);
    return out;
  }
  std::vector<Exponent> e(nvars, 0);
  fill_degree(e, 0, nvars_used, degree, out);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cmreg
