#pragma once

#include "cmreg/groebner.hpp"
#include "cmreg/monomial_ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmreg {

// Checks behind the regularity jump of the family I_n at k = 2: a degree-4
// class alpha = x1*x2*x3*x4 of S/J_n, J_n = I_n^2, killed by the variables
// that matter for the Čech complex. For n = 3 this is a full H^0 witness.

enum class WitnessConclusion { jump_confirmed, identities_only, failed };

std::string to_string(WitnessConclusion c);

struct MembershipClaim {
  std::string description;
  Polynomial polynomial;
  bool holds = false;
};

struct WitnessReport {
  int n = 0;
  bool initial_ideal_matches = false;
  bool initial_weakly_stable = false;
  std::int64_t ideal_regularity = 0;
  std::vector<MembershipClaim> identities;
  bool alpha_nonzero = false;
  /// 1-based j in {n+2..s} with alpha * x_j in J_n.
  std::vector<std::size_t> annihilating_variables;
  /// r with x_i*x_j - x1*x_r a generator and {i, j} disjoint from {2, 3, 4}.
  std::vector<std::size_t> surviving_variables;
  /// n = 3 only: least N with m^N * alpha inside J_3.
  std::optional<bool> h0_complete;
  std::optional<unsigned> torsion_exponent;
  WitnessConclusion conclusion = WitnessConclusion::failed;
  std::vector<std::string> notes;
};

/// Reduced degrevlex basis of J_n = I_n^2.
GroebnerBasis build_square(int n, const BuchbergerOptions& opts = {});

/// The monomial list claimed for in(I_n): every quadric in x1..x_{n+1}.
MonomialIdeal expected_initial_ideal(int n);

/// alpha = x1*x2*x3*x4 in the ring of jump(n).
Monomial jump_alpha(int n);

/// Membership claims with `holds` unset: the three rewritings of alpha, the
/// vanishing of x1^2*x_t*x_r, and alpha*x_j = 0 off the surviving indices.
std::vector<MembershipClaim> identity_suite(int n);

/// Sets `holds` on every claim by reduction modulo `gb`.
void check_claims(std::vector<MembershipClaim>& claims, const GroebnerBasis& gb);

std::vector<std::size_t> surviving_indices(int n);

inline constexpr unsigned kTorsionSearchLimit = 16;

/// H^0 witness for n = 3: alpha not in J_3, alpha*x_j in J_3 for j = 5, 6, 7,
/// and the least N <= kTorsionSearchLimit with (x1..x7)^N * alpha in J_3.
void verify_h0(const GroebnerBasis& square_basis, WitnessReport& report);

WitnessReport jump_check(int n, const BuchbergerOptions& opts = {});

}  // namespace cmreg
