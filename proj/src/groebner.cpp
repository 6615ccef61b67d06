#include "cmreg/groebner.hpp"

#include "cmreg/monomial_ideal.hpp"

#include <algorithm>
#include <set>

namespace cmreg {

namespace {

void require_same_shape(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw RingMismatch("polynomials from rings of different size");
  if (a.order() != b.order()) throw std::invalid_argument("polynomials sorted under different orders");
}

// Reduction against a list of polynomials with their leading monomials cached.
class Reducer {
 public:
  void add(const Polynomial* p) {
    polys_.push_back(p);
    lms_.push_back(&p->leading_monomial());
  }
  void clear() {
    polys_.clear();
    lms_.clear();
  }

  const Polynomial* find(const Monomial& m) const {
    for (std::size_t k = 0; k < lms_.size(); ++k) {
      if (divides(*lms_[k], m)) return polys_[k];
    }
    return nullptr;
  }

  Polynomial reduce(Polynomial p) const {
    Polynomial rest(p.nvars(), p.order());
    std::vector<Term> done;
    while (!p.is_zero()) {
      const Term& lt = p.leading_term();
      if (const Polynomial* d = find(lt.mono)) {
        const Rational c = lt.coeff / d->leading_coefficient();
        const Monomial m = quotient(lt.mono, d->leading_monomial());
        p.sub_mul(c, m, *d);
      } else {
        done.push_back(p.pop_leading());
      }
    }
    for (auto& t : done) rest.push_trailing(std::move(t));
    return rest;
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<const Monomial*> lms_;
};

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    switch (compare(a.lcm, b.lcm, order)) {
      case Ordering::less:
        return true;
      case Ordering::greater:
        return false;
      case Ordering::equal:
        break;
    }
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Engine {
 public:
  Engine(MonomialOrder order, const BuchbergerOptions& opts) : order_(order), opts_(opts), queue_(PairLess{order}) {}

  void insert(Polynomial f) {
    Polynomial h = reducer().reduce(std::move(f));
    if (!h.is_zero()) add(h.monic());
  }

  void run() {
    std::size_t steps = 0;
    while (!queue_.empty()) {
      if (opts_.deadline && (++steps % 64 == 0) && std::chrono::steady_clock::now() > *opts_.deadline) {
        throw GroebnerTimeout("Buchberger run exceeded its deadline");
      }
      const Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      ++stats_.pairs_reduced;
      Polynomial h = reducer().reduce(s_polynomial(basis_[p.i], basis_[p.j]));
      if (h.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        add(h.monic());
      }
    }
  }

  std::vector<Polynomial> active_elements() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) out.push_back(basis_[k]);
    }
    return out;
  }

  const BuchbergerStats& stats() const { return stats_; }

 private:
  const Reducer& reducer() {
    if (reducer_dirty_) {
      reducer_.clear();
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (active_[k]) reducer_.add(&basis_[k]);
      }
      reducer_dirty_ = false;
    }
    return reducer_;
  }

  const Monomial& lm(std::size_t k) const { return basis_[k].leading_monomial(); }

  void add(Polynomial h) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lmh = lm(hi);

    if (!opts_.use_criteria) {
      for (std::size_t g = 0; g < hi; ++g) {
        if (active_[g]) push_pair({lcm(lm(g), lmh), g, hi});
      }
    } else {
      // Gebauer–Möller update.
      std::vector<Pair> c;
      for (std::size_t g = 0; g < hi; ++g) {
        if (active_[g]) c.push_back({lcm(lm(g), lmh), g, hi});
      }
      std::vector<Pair> d;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const Pair& p = c[k];
        bool keep = coprime(lm(p.i), lmh);
        if (!keep) {
          keep = true;
          for (std::size_t q = k + 1; q < c.size() && keep; ++q) keep = !divides(c[q].lcm, p.lcm);
          for (std::size_t q = 0; q < d.size() && keep; ++q) keep = !divides(d[q].lcm, p.lcm);
        }
        if (keep) d.push_back(p);
      }
      for (auto it = queue_.begin(); it != queue_.end();) {
        const bool drop = divides(lmh, it->lcm) && lcm(lm(it->i), lmh) != it->lcm &&
                          lcm(lm(it->j), lmh) != it->lcm;
        it = drop ? queue_.erase(it) : std::next(it);
      }
      for (auto& p : d) {
        if (!coprime(lm(p.i), lmh)) push_pair(std::move(p));
      }
      for (std::size_t g = 0; g < hi; ++g) {
        if (active_[g] && divides(lmh, lm(g))) active_[g] = false;
      }
    }
    reducer_dirty_ = true;
    std::size_t live = static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
    stats_.max_basis_size = std::max(stats_.max_basis_size, live);
  }

  void push_pair(Pair p) {
    ++stats_.pairs_created;
    queue_.insert(std::move(p));
  }

  MonomialOrder order_;
  BuchbergerOptions opts_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> queue_;
  Reducer reducer_;
  bool reducer_dirty_ = true;
  BuchbergerStats stats_;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  require_same_shape(f, g);
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = multiply(f, 1 / Rational(f.leading_coefficient()), quotient(l, f.leading_monomial()));
  s.sub_mul(1 / Rational(g.leading_coefficient()), quotient(l, g.leading_monomial()), g);
  return s;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Reducer r;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    require_same_shape(f, d);
    r.add(&d);
  }
  return r.reduce(f);
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements,
                             std::vector<Polynomial> source, BuchbergerStats stats)
    : order_(order),
      nvars_(source.empty() ? 0 : source.front().nvars()),
      elements_(std::move(elements)),
      source_(std::move(source)),
      stats_(stats) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, MonomialOrder order) {
  std::vector<Polynomial> work;
  for (auto& b : basis) {
    if (!b.is_zero()) work.push_back(b.with_order(order).monic());
  }
  std::stable_sort(work.begin(), work.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) == Ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (auto& w : work) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return divides(m.leading_monomial(), w.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(w));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Reducer r;
    for (std::size_t q = 0; q < minimal.size(); ++q) {
      if (q != k) r.add(&minimal[q]);
    }
    reduced.push_back(r.reduce(minimal[k]).monic());
  }
  return reduced;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, const BuchbergerOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const std::size_t n = gens.front().nvars();
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw RingMismatch("generators from rings of different size");
    if (!g.is_zero()) input.push_back(g.with_order(order));
  }
  std::stable_sort(input.begin(), input.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) == Ordering::less;
  });
  Engine engine(order, opts);
  for (auto& f : input) engine.insert(std::move(f));
  engine.run();
  return GroebnerBasis(order, reduce_basis(engine.active_elements(), order), gens, engine.stats());
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  return MonomialIdeal(gb.nvars(), gb.leading_monomials());
}

namespace {

void products(const std::vector<Polynomial>& gens, unsigned k, std::size_t from, const Polynomial& acc,
              std::vector<Polynomial>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) products(gens, k - 1, i, acc * gens[i], out);
}

}  // namespace

std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, unsigned k) {
  if (k == 0) throw std::invalid_argument("ideal power exponent must be positive");
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  const Polynomial one = Polynomial::constant(gens.front().nvars(), 1, gens.front().order());
  products(gens, k, 0, one, out);
  return out;
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, unsigned k) {
  std::vector<Polynomial> out;
  for (auto& p : power_products(gens, k)) {
    if (p.is_zero()) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.nvars() != gb.nvars()) throw RingMismatch("membership test across rings");
  return normal_form(f.with_order(gb.order()), gb.elements()).is_zero();
}

}  // namespace cmreg
