#include "cmreg/regularity.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace cmreg {

std::string to_string(RegularityMethod method) {
  switch (method) {
    case RegularityMethod::caviglia:
      return "caviglia";
    case RegularityMethod::betti:
      return "betti";
    case RegularityMethod::automatic:
      return "auto";
  }
  return "auto";
}

RegularityMethod parse_method(const std::string& text) {
  if (text == "caviglia") return RegularityMethod::caviglia;
  if (text == "betti") return RegularityMethod::betti;
  if (text == "auto") return RegularityMethod::automatic;
  throw std::invalid_argument("unknown regularity method '" + text + "'");
}

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

MonomialIdeal initial_ideal_of(const std::vector<Polynomial>& gens, const BuchbergerOptions& opts,
                               std::size_t* groebner_size) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const std::size_t n = gens.front().nvars();
  const bool monomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.size() <= 1; });
  if (monomial) {
    std::vector<Monomial> m;
    for (const auto& g : gens) {
      if (!g.is_zero()) m.push_back(g.leading_monomial());
    }
    MonomialIdeal ideal(n, std::move(m));
    if (groebner_size) *groebner_size = ideal.size();
    return ideal;
  }
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex, opts);
  if (groebner_size) *groebner_size = gb.size();
  return initial_ideal(gb);
}

RegularityReport analyze_regularity(const std::vector<Polynomial>& gens, const RegularityOptions& opts) {
  RegularityReport report;
  Stopwatch clock;
  report.monomial_input = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.size() <= 1; });
  report.initial = initial_ideal_of(gens, opts.groebner, &report.groebner_size);
  if (report.initial.is_zero()) throw std::invalid_argument("regularity of the zero ideal is undefined");
  report.timings.groebner_seconds = clock.lap();

  report.weakly_stable = is_weakly_stable(report.initial);
  report.timings.stability_seconds = clock.lap();

  RegularityMethod method = opts.method;
  if (method == RegularityMethod::automatic) {
    method = report.weakly_stable ? RegularityMethod::caviglia : RegularityMethod::betti;
  }
  report.method = method;
  if (method == RegularityMethod::caviglia) {
    report.caviglia = caviglia_regularity(report.initial);
    report.value = static_cast<std::int64_t>(report.caviglia->value);
  } else {
    report.betti = betti_table(report.initial);
    report.value = regularity_from_betti(*report.betti);
  }
  report.exact = report.monomial_input || report.weakly_stable;
  report.timings.regularity_seconds = clock.lap();
  return report;
}

}  // namespace cmreg
