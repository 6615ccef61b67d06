#pragma once

#include "cmreg/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmreg {

/// A stored regularity prediction: unknown, an exact value, or a strict
/// lower bound expressed as "at least `value`".
struct Prediction {
  enum class Kind { none, exact, lower_bound };
  Kind kind = Kind::none;
  std::int64_t value = 0;
  /// Where the claim comes from, e.g. "reg(I) = d^2 - 1".
  std::string source;

  static Prediction unknown() { return {}; }
  static Prediction exactly(std::int64_t v, std::string source) { return {Kind::exact, v, std::move(source)}; }
  static Prediction at_least(std::int64_t v, std::string source) { return {Kind::lower_bound, v, std::move(source)}; }

  bool known() const { return kind != Kind::none; }
  /// True when `computed` is consistent with the prediction; nullopt when
  /// there is nothing to compare against.
  std::optional<bool> matches(std::int64_t computed) const;
  std::string describe() const;
};

struct FamilyParams {
  std::optional<int> d = std::nullopt;
  std::optional<int> n = std::nullopt;
  std::optional<int> i = std::nullopt;
  std::optional<int> j = std::nullopt;
};

struct FamilyInstance {
  std::string name;
  FamilyParams params;
  Ring ring;
  std::vector<Polynomial> generators;
  Prediction predicted;
  Prediction predicted_square;

  /// Short label such as "caviglia(d=3)".
  std::string label() const;
};

/// (x1^d, x2^d, x1*x3^(d-1) - x2*x4^(d-1)).
FamilyInstance caviglia(int d);
/// (x1^d, x2^d, x1^i*x3^(d-i) - x2^j*x4^(d-j)), 1 <= i, j < d.
FamilyInstance caviglia_ij(int d, int i, int j);
/// The square of caviglia(d) as its six product generators.
FamilyInstance caviglia_square(int d);
/// (x1^d, x2^d, x3^d, x1*x2^(d-1), x1*x3^(d-1), x2*x4^(d-1) - x3*x5^(d-1)).
FamilyInstance fivevar(int d);
/// (x1^d..x4^d, x1*x3^(d-1) - x2*x4^(d-1), x3*x5^(d-1) - x4*x6^(d-1)).
FamilyInstance sixvar(int d);
/// Pure powers of x1..x_{2n-2} plus the chained binomials in 2n variables.
FamilyInstance chain2n(int n, int d);
/// The ten squarefree cubics in six variables with a jump at the square.
FamilyInstance terai();
/// x1^2..x_{n+1}^2, x1*x2..x1*x_{n+1}, x_i*x_j - x1*x_{t(n,i,j)}; s variables.
FamilyInstance jump(int n);

/// Index of the variable paired with x_i*x_j in jump(n), 2 <= i < j <= n + 1.
int jump_index(int n, int i, int j);
/// Number of variables of jump(n): n(n+1)/2 + 1.
int jump_ring_size(int n);

/// Builds a family by its CLI name: caviglia, caviglia-ij, caviglia-square,
/// fivevar, sixvar, chain2n, terai, jump. Throws std::invalid_argument on
/// unknown names or missing/invalid parameters.
FamilyInstance make_family(const std::string& name, const FamilyParams& params);

const std::vector<std::string>& family_names();

/// Prediction stored on the instance (the regularity of I itself).
const Prediction& predicted_regularity(const FamilyInstance& instance);

}  // namespace cmreg
