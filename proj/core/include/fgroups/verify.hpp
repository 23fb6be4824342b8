#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgroups/group.hpp"

namespace fg {

enum class Claim {
  theorem_b,
  corollary_1,
  proposition_priddy,
  corollary_priddy,
  corollary_pcentral,
  example_quaternion,
};

enum class Verdict { pass, fail, vacuous, skipped };

std::string_view to_string(Claim c);
std::string_view to_string(Verdict v);
std::optional<Claim> claim_from_string(std::string_view s);

/// One verified claim on one (group, prime) cell.
///
/// Implications report fail only when the hypothesis held and the conclusion
/// did not; a false hypothesis is vacuous. The biconditional (theorem_b)
/// stores its fusion side in hypothesis_held and its nilpotency side in
/// conclusion_held and fails iff they disagree. hall_petrescu is recorded
/// only by the pcentral claim when its hypothesis held.
struct VerificationResult {
  Claim claim = Claim::theorem_b;
  std::string group_name;
  unsigned prime = 2;
  bool hypothesis_held = false;
  bool conclusion_held = false;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> witness_json;
  std::optional<bool> hall_petrescu;
};

/// G p-nilpotent <=> the Sylow p-subgroup controls fusion of the cp(p) class.
VerificationResult verify_theorem_b(const FiniteGroup& g, unsigned p,
                                    std::string group_name = {});

/// (N_G(P) controls cp(p) fusion and N_G(P) = C_G(P)*P) => p-nilpotent.
VerificationResult verify_corollary_1(const FiniteGroup& g, unsigned p,
                                      std::string group_name = {});

/// (every x in P with x^pbar = 1 is central in P) => N_G(P) controls cp(p)
/// fusion.
VerificationResult verify_proposition_priddy(const FiniteGroup& g, unsigned p,
                                             std::string group_name = {});

/// (priddy hypothesis and N_G(P) = C_G(P)*P) => p-nilpotent.
VerificationResult verify_corollary_priddy(const FiniteGroup& g, unsigned p,
                                           std::string group_name = {});

/// (omega_bar(G, p) inside some upper central term) => p-nilpotent; also runs
/// hall_petrescu_consequence when the hypothesis holds and records its value.
VerificationResult verify_corollary_pcentral(const FiniteGroup& g, unsigned p,
                                             std::string group_name = {});

/// The order-24 extension of the quaternion group: its quaternion Sylow
/// subgroup controls fusion of cyclic order-2 subgroups, fails for the
/// order-2-and-4 class with a cyclic order-4 witness, and the group is not
/// 2-nilpotent.
VerificationResult verify_example_quaternion();

struct SuiteTotals {
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  int skipped = 0;
};

/// Aggregated catalog run. Cells are in canonical (group, prime, claim)
/// order; identical inputs produce byte-identical JSON.
struct SuiteReport {
  std::vector<VerificationResult> cells;

  SuiteTotals totals() const;
  int count(Claim c, Verdict v) const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs every claim over standard_catalog(max_order) for the given primes
/// (each group tested only at primes dividing its order), plus the
/// quaternion-example cell. Cells whose computation trips a cap are reported
/// as skipped. The optional filter restricts to one claim.
SuiteReport run_suite(std::uint64_t max_order, const std::vector<unsigned>& primes,
                      std::optional<Claim> claim_filter = {});

/// Wraps precomputed cells in a report (used to exercise aggregation).
SuiteReport aggregate(std::vector<VerificationResult> cells);

/// 0 when no cell failed, 1 otherwise.
int exit_code(const SuiteReport& report);

}  // namespace fg
