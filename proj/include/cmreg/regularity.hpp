#pragma once

#include "cmreg/betti.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/monomial_ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmreg {

enum class RegularityMethod { caviglia, betti, automatic };

std::string to_string(RegularityMethod method);
RegularityMethod parse_method(const std::string& text);

struct PhaseTimings {
  double groebner_seconds = 0;
  double stability_seconds = 0;
  double regularity_seconds = 0;
};

/// Regularity of a homogeneous ideal through its degrevlex initial ideal.
struct RegularityReport {
  MonomialIdeal initial{0};
  std::size_t groebner_size = 0;
  bool monomial_input = false;
  bool weakly_stable = false;
  RegularityMethod method = RegularityMethod::automatic;  // the method actually used
  std::int64_t value = 0;
  /// value = reg(I): the input is monomial or in(I) is weakly stable.
  /// Otherwise value = reg(in(I)), only an upper bound for reg(I).
  bool exact = false;
  std::optional<CavigliaRegularity> caviglia;
  std::optional<BettiTable> betti;
  PhaseTimings timings;
};

struct RegularityOptions {
  RegularityMethod method = RegularityMethod::automatic;
  BuchbergerOptions groebner;
};

/// automatic = Caviglia formula when in(I) is weakly stable, Betti oracle
/// otherwise. Forcing `caviglia` on a non-weakly-stable in(I) throws
/// RegularityFormulaError.
RegularityReport analyze_regularity(const std::vector<Polynomial>& gens, const RegularityOptions& opts = {});

/// Initial ideal of the span of `gens`; skips Buchberger when every generator
/// is a monomial.
MonomialIdeal initial_ideal_of(const std::vector<Polynomial>& gens, const BuchbergerOptions& opts = {},
                               std::size_t* groebner_size = nullptr);

}  // namespace cmreg
