// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criteria covered, in order:
//   1. the quaternion-extension example reproduces exactly (under 1 s)
//   2. theorem_b biconditional: 0 failures over the order-200 catalog across
//      at least 40 (group, prime) cells (under 5 min single-threaded)
//   3. frobenius_criterion agrees with is_p_nilpotent on every catalog cell
//   4. normal_complement_oracle agrees on all groups of order <= 100 and
//      every positive verdict re-validates
//   5. implication suites report 0 failures with both vacuous and
//      non-vacuous cells present per claim
//   6. the power-centralizer consequence holds wherever the hypercentral
//      torsion hypothesis does
//   7. spot values
//   8. byte-identical reports across repeated runs

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "fgroups/arith.hpp"
#include "fgroups/catalog.hpp"
#include "fgroups/errors.hpp"
#include "fgroups/fusion.hpp"
#include "fgroups/group.hpp"
#include "fgroups/nilpotency.hpp"
#include "fgroups/verify.hpp"

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << '\n';
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<unsigned> kPrimes{2, 3, 5, 7, 11, 13};

void criterion_quaternion_example() {
  auto start = std::chrono::steady_clock::now();
  fg::FiniteGroup g = fg::quaternion_semidirect_c3();
  fg::Subgroup q8 = fg::sylow_subgroup(g, 2);

  bool order_ok = g.order() == 24;
  bool controls_c2 = fg::controls_fusion(g, q8, fg::FusionClass::cyclic_p(2)).both();
  bool not_nilpotent = !fg::is_p_nilpotent(g, 2).p_nilpotent;
  fg::FusionReport cp2 = fg::controls_fusion(g, q8, fg::FusionClass::cp(2));
  bool cp2_fails = !cp2.both();
  bool c4_witness = cp2.witness_b.has_value() && cp2.witness_b->first.order() == 4 &&
                    [&] {
                      for (int m : cp2.witness_b->first.members()) {
                        if (g.order_of(m) == 4) return true;
                      }
                      return false;
                    }();
  double elapsed = seconds_since(start);

  report("quaternion example",
         order_ok && controls_c2 && not_nilpotent && cp2_fails && c4_witness && elapsed < 1.0,
         "order=" + std::to_string(g.order()) + " controls_cyclic2=" +
             (controls_c2 ? "yes" : "no") + " 2-nilpotent=" + (not_nilpotent ? "no" : "yes") +
             " cp2_witness_order=" +
             (cp2.witness_b ? std::to_string(cp2.witness_b->first.order()) : "none") + " in " +
             std::to_string(elapsed) + "s");
}

void criterion_theorem_b() {
  auto start = std::chrono::steady_clock::now();
  fg::SuiteReport report_b = fg::run_suite(200, kPrimes, fg::Claim::theorem_b);
  double elapsed = seconds_since(start);
  int cells = static_cast<int>(report_b.cells.size());
  int failed = report_b.count(fg::Claim::theorem_b, fg::Verdict::fail);
  report("theorem_b biconditional",
         failed == 0 && cells >= 40 && elapsed < 300.0,
         std::to_string(cells) + " cells, " + std::to_string(failed) + " failures, " +
             std::to_string(elapsed) + "s");
}

void criterion_frobenius_cross_oracle() {
  int cells = 0;
  int disagreements = 0;
  for (const auto& entry : fg::standard_catalog(400)) {
    for (unsigned p : kPrimes) {
      if (entry.group.order() % p != 0) continue;
      if (fg::sylow_subgroup(entry.group, p).order() > fg::kSylowLatticeCap) continue;
      ++cells;
      if (fg::frobenius_criterion(entry.group, p).p_nilpotent !=
          fg::is_p_nilpotent(entry.group, p).p_nilpotent) {
        ++disagreements;
      }
    }
  }
  report("frobenius cross-oracle", cells > 0 && disagreements == 0,
         std::to_string(cells) + " cells, " + std::to_string(disagreements) + " disagreements");
}

void criterion_complement_oracle() {
  int cells = 0;
  int disagreements = 0;
  int invalid = 0;
  for (const auto& entry : fg::standard_catalog(100)) {
    for (unsigned p : kPrimes) {
      if (entry.group.order() % p != 0) continue;
      ++cells;
      fg::NilpotencyVerdict fast = fg::is_p_nilpotent(entry.group, p);
      auto oracle = fg::normal_complement_oracle(entry.group, p);
      if (fast.p_nilpotent != oracle.has_value()) {
        ++disagreements;
        continue;
      }
      if (!oracle) continue;
      const fg::Subgroup& n = *oracle;
      bool ok = n.order() == entry.group.order() / fg::p_part(entry.group.order(), p);
      for (int m : n.members()) {
        for (int x = 0; x < static_cast<int>(entry.group.order()); ++x) {
          if (!n.contains_index(entry.group.conj(m, x))) ok = false;
        }
      }
      if (fg::intersection(n, fg::sylow_subgroup(entry.group, p)) != std::vector<int>{0}) {
        ok = false;
      }
      if (!ok) ++invalid;
    }
  }
  report("complement oracle", cells > 0 && disagreements == 0 && invalid == 0,
         std::to_string(cells) + " cells, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(invalid) + " invalid complements");
}

void criterion_implication_suites() {
  fg::SuiteReport suite = fg::run_suite(200, kPrimes);
  bool ok = true;
  std::string detail;
  for (fg::Claim claim : {fg::Claim::corollary_1, fg::Claim::proposition_priddy,
                          fg::Claim::corollary_pcentral}) {
    int failed = suite.count(claim, fg::Verdict::fail);
    int passed = suite.count(claim, fg::Verdict::pass);
    int vacuous = suite.count(claim, fg::Verdict::vacuous);
    ok = ok && failed == 0 && passed >= 1 && vacuous >= 1;
    detail += std::string(fg::to_string(claim)) + "(fail=" + std::to_string(failed) +
              ",pass=" + std::to_string(passed) + ",vacuous=" + std::to_string(vacuous) + ") ";
  }
  report("implication suites", ok, detail);
}

void criterion_hall_petrescu() {
  int hypercentral_cells = 0;
  int power_failures = 0;
  for (const auto& entry : fg::standard_catalog(400)) {
    for (unsigned p : kPrimes) {
      if (entry.group.order() % p != 0) continue;
      try {
        if (!fg::hall_petrescu_consequence(entry.group, p)) ++power_failures;
        ++hypercentral_cells;
      } catch (const fg::HypothesisNotMet&) {
        // not a hypercentral cell; nothing to check
      }
    }
  }
  report("hall-petrescu consequence", hypercentral_cells > 0 && power_failures == 0,
         std::to_string(hypercentral_cells) + " hypercentral cells, " +
             std::to_string(power_failures) + " failures");
}

void criterion_spot_values() {
  bool ok = true;
  std::string detail;

  fg::FiniteGroup s4 = fg::build(fg::GroupSpec::symmetric(4));
  std::size_t sylow_order = fg::sylow_subgroup(s4, 2).order();
  ok = ok && sylow_order == 8;
  detail += "|sylow(S4,2)|=" + std::to_string(sylow_order);

  fg::FiniteGroup q8 = fg::quaternion_group();
  fg::Subgroup z = fg::center(q8);
  bool z_ok = z.order() == 2 && q8.order_of(z.members()[1]) == 2;
  ok = ok && z_ok;
  detail += " Z(Q8)=" + std::to_string(z.order());

  fg::CentralSeries series = fg::upper_central_series(q8);
  bool ucs_ok = series.terms.size() == 3 && series.terms.back().order() == 8;
  ok = ok && ucs_ok;
  detail += " ucs(Q8) length=" + std::to_string(series.terms.size());

  fg::FiniteGroup s3 = fg::build(fg::GroupSpec::symmetric(3));
  bool s3_ok = fg::is_p_nilpotent(s3, 2).p_nilpotent && !fg::is_p_nilpotent(s3, 3).p_nilpotent;
  ok = ok && s3_ok;
  detail += std::string(" S3(2-nil,not-3-nil)=") + (s3_ok ? "yes" : "no");

  fg::FiniteGroup a4 = fg::build(fg::GroupSpec::alternating(4));
  bool a4_ok = fg::is_p_nilpotent(a4, 3).p_nilpotent && !fg::is_p_nilpotent(a4, 2).p_nilpotent;
  ok = ok && a4_ok;
  detail += std::string(" A4(3-nil,not-2-nil)=") + (a4_ok ? "yes" : "no");

  report("spot values", ok, detail);
}

void criterion_determinism() {
  std::string first = fg::run_suite(200, kPrimes).to_json();
  std::string second = fg::run_suite(200, kPrimes).to_json();
  report("determinism", !first.empty() && first == second,
         std::to_string(first.size()) + " bytes, byte-identical=" +
             (first == second ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion_quaternion_example();
  criterion_theorem_b();
  criterion_frobenius_cross_oracle();
  criterion_complement_oracle();
  criterion_implication_suites();
  criterion_hall_petrescu();
  criterion_spot_values();
  criterion_determinism();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
