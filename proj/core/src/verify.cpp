#include "fgroups/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fgroups/arith.hpp"
#include "fgroups/catalog.hpp"
#include "fgroups/errors.hpp"
#include "fgroups/fusion.hpp"
#include "fgroups/nilpotency.hpp"
#include "serialize.hpp"

namespace fg {

namespace {

Verdict implication_verdict(bool hypothesis, bool conclusion) {
  if (!hypothesis) return Verdict::vacuous;
  return conclusion ? Verdict::pass : Verdict::fail;
}

VerificationResult make_result(Claim claim, std::string group_name, unsigned prime) {
  VerificationResult result;
  result.claim = claim;
  result.group_name = std::move(group_name);
  result.prime = prime;
  return result;
}

bool normalizer_is_centralizer_times_sylow(const FiniteGroup& g, const Subgroup& sylow,
                                           const Subgroup& norm) {
  return set_product(centralizer(g, sylow), sylow) == norm.members();
}

// Every element of the Sylow subgroup of order dividing pbar lies in its
// center.
bool priddy_hypothesis(const FiniteGroup& g, const Subgroup& sylow, unsigned p) {
  unsigned bound = p_bar(p);
  Subgroup zp = center_of(sylow);
  for (int m : sylow.members()) {
    if (bound % g.order_of(m) == 0 && !zp.contains_index(m)) return false;
  }
  return true;
}

std::string implication_witness(const FiniteGroup&, const FusionReport* fusion,
                                const NilpotencyVerdict* nilpotency) {
  detail::json j;
  if (fusion) j["fusion"] = detail::json::parse(to_json(*fusion));
  if (nilpotency) j["nilpotency"] = detail::json::parse(to_json(*nilpotency));
  return j.dump();
}

}  // namespace

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::theorem_b: return "theorem_b";
    case Claim::corollary_1: return "corollary_1";
    case Claim::proposition_priddy: return "proposition_priddy";
    case Claim::corollary_priddy: return "corollary_priddy";
    case Claim::corollary_pcentral: return "corollary_pcentral";
    case Claim::example_quaternion: return "example_quaternion";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

std::optional<Claim> claim_from_string(std::string_view s) {
  for (Claim c : {Claim::theorem_b, Claim::corollary_1, Claim::proposition_priddy,
                  Claim::corollary_priddy, Claim::corollary_pcentral, Claim::example_quaternion}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

VerificationResult verify_theorem_b(const FiniteGroup& g, unsigned p, std::string group_name) {
  VerificationResult result = make_result(Claim::theorem_b, std::move(group_name), p);
  NilpotencyVerdict nil = is_p_nilpotent(g, p);
  FusionReport fusion = controls_fusion(g, sylow_subgroup(g, p), FusionClass::cp(p));
  result.hypothesis_held = fusion.both();
  result.conclusion_held = nil.p_nilpotent;
  result.verdict = fusion.both() == nil.p_nilpotent ? Verdict::pass : Verdict::fail;
  if (result.verdict == Verdict::fail) {
    result.witness_json = implication_witness(g, &fusion, &nil);
  }
  return result;
}

VerificationResult verify_corollary_1(const FiniteGroup& g, unsigned p, std::string group_name) {
  VerificationResult result = make_result(Claim::corollary_1, std::move(group_name), p);
  Subgroup sylow = sylow_subgroup(g, p);
  Subgroup norm = normalizer(g, sylow);
  FusionReport fusion = controls_fusion(g, norm, FusionClass::cp(p));
  result.hypothesis_held =
      fusion.both() && normalizer_is_centralizer_times_sylow(g, sylow, norm);
  NilpotencyVerdict nil = is_p_nilpotent(g, p);
  result.conclusion_held = nil.p_nilpotent;
  result.verdict = implication_verdict(result.hypothesis_held, result.conclusion_held);
  if (result.verdict == Verdict::fail) {
    result.witness_json = implication_witness(g, &fusion, &nil);
  }
  return result;
}

VerificationResult verify_proposition_priddy(const FiniteGroup& g, unsigned p,
                                             std::string group_name) {
  VerificationResult result = make_result(Claim::proposition_priddy, std::move(group_name), p);
  Subgroup sylow = sylow_subgroup(g, p);
  result.hypothesis_held = priddy_hypothesis(g, sylow, p);
  FusionReport fusion = controls_fusion(g, normalizer(g, sylow), FusionClass::cp(p));
  result.conclusion_held = fusion.both();
  result.verdict = implication_verdict(result.hypothesis_held, result.conclusion_held);
  if (result.verdict == Verdict::fail) {
    result.witness_json = implication_witness(g, &fusion, nullptr);
  }
  return result;
}

VerificationResult verify_corollary_priddy(const FiniteGroup& g, unsigned p,
                                           std::string group_name) {
  VerificationResult result = make_result(Claim::corollary_priddy, std::move(group_name), p);
  Subgroup sylow = sylow_subgroup(g, p);
  Subgroup norm = normalizer(g, sylow);
  result.hypothesis_held =
      priddy_hypothesis(g, sylow, p) && normalizer_is_centralizer_times_sylow(g, sylow, norm);
  NilpotencyVerdict nil = is_p_nilpotent(g, p);
  result.conclusion_held = nil.p_nilpotent;
  result.verdict = implication_verdict(result.hypothesis_held, result.conclusion_held);
  if (result.verdict == Verdict::fail) {
    result.witness_json = implication_witness(g, nullptr, &nil);
  }
  return result;
}

VerificationResult verify_corollary_pcentral(const FiniteGroup& g, unsigned p,
                                             std::string group_name) {
  VerificationResult result = make_result(Claim::corollary_pcentral, std::move(group_name), p);
  Subgroup k = omega_bar(g, p);
  CentralSeries series = upper_central_series(g);
  result.hypothesis_held = false;
  for (const auto& term : series.terms) {
    if (k.is_subset_of(term)) {
      result.hypothesis_held = true;
      break;
    }
  }
  NilpotencyVerdict nil = is_p_nilpotent(g, p);
  result.conclusion_held = nil.p_nilpotent;
  result.verdict = implication_verdict(result.hypothesis_held, result.conclusion_held);
  if (result.hypothesis_held) {
    try {
      result.hall_petrescu = hall_petrescu_consequence(g, p);
    } catch (const HypothesisNotMet&) {
      result.hall_petrescu = false;
    }
  }
  if (result.verdict == Verdict::fail) {
    result.witness_json = implication_witness(g, nullptr, &nil);
  }
  return result;
}

VerificationResult verify_example_quaternion() {
  VerificationResult result = make_result(Claim::example_quaternion, "Q8:C3", 2);
  FiniteGroup g = quaternion_semidirect_c3();
  Subgroup q8 = sylow_subgroup(g, 2);

  bool controls_order2 = controls_fusion(g, q8, FusionClass::cyclic_p(2)).both();
  bool not_2_nilpotent = !is_p_nilpotent(g, 2).p_nilpotent;
  FusionReport cp_report = controls_fusion(g, q8, FusionClass::cp(2));
  bool cp_fails_with_c4 = !cp_report.condition_b && cp_report.witness_b.has_value() &&
                          cp_report.witness_b->first.order() == 4;

  result.hypothesis_held = true;
  result.conclusion_held = controls_order2 && not_2_nilpotent && cp_fails_with_c4;
  result.verdict = result.conclusion_held ? Verdict::pass : Verdict::fail;
  if (result.verdict == Verdict::fail) {
    detail::json j;
    j["controls_cyclic2"] = controls_order2;
    j["not_2_nilpotent"] = not_2_nilpotent;
    j["cp2_fails_with_order4_witness"] = cp_fails_with_c4;
    j["cp2_report"] = detail::json::parse(to_json(cp_report));
    result.witness_json = j.dump();
  }
  return result;
}

SuiteTotals SuiteReport::totals() const {
  SuiteTotals t;
  for (const auto& cell : cells) {
    switch (cell.verdict) {
      case Verdict::pass: ++t.pass; break;
      case Verdict::fail: ++t.fail; break;
      case Verdict::vacuous: ++t.vacuous; break;
      case Verdict::skipped: ++t.skipped; break;
    }
  }
  return t;
}

int SuiteReport::count(Claim c, Verdict v) const {
  int n = 0;
  for (const auto& cell : cells) {
    if (cell.claim == c && cell.verdict == v) ++n;
  }
  return n;
}

std::string SuiteReport::to_json() const {
  detail::json j;
  detail::json arr = detail::json::array();
  for (const auto& cell : cells) {
    detail::json c;
    c["claim"] = to_string(cell.claim);
    c["group"] = cell.group_name;
    c["prime"] = cell.prime;
    c["verdict"] = to_string(cell.verdict);
    if (cell.witness_json) c["witness"] = detail::json::parse(*cell.witness_json);
    if (cell.hall_petrescu) c["hall_petrescu"] = *cell.hall_petrescu;
    arr.push_back(std::move(c));
  }
  j["cells"] = std::move(arr);
  SuiteTotals t = totals();
  j["totals"] = {{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}, {"skipped", t.skipped}};
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::size_t claim_width = 5, group_width = 5;
  for (const auto& cell : cells) {
    claim_width = std::max(claim_width, to_string(cell.claim).size());
    group_width = std::max(group_width, cell.group_name.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(claim_width) + 2) << "claim"
      << std::setw(static_cast<int>(group_width) + 2) << "group" << std::setw(7) << "prime"
      << "verdict" << '\n';
  for (const auto& cell : cells) {
    out << std::left << std::setw(static_cast<int>(claim_width) + 2) << to_string(cell.claim)
        << std::setw(static_cast<int>(group_width) + 2) << cell.group_name << std::setw(7)
        << cell.prime << to_string(cell.verdict) << '\n';
  }
  SuiteTotals t = totals();
  out << "totals: pass=" << t.pass << " fail=" << t.fail << " vacuous=" << t.vacuous
      << " skipped=" << t.skipped << '\n';
  return out.str();
}

SuiteReport run_suite(std::uint64_t max_order, const std::vector<unsigned>& primes,
                      std::optional<Claim> claim_filter) {
  std::vector<unsigned> sorted_primes = primes;
  std::sort(sorted_primes.begin(), sorted_primes.end());
  sorted_primes.erase(std::unique(sorted_primes.begin(), sorted_primes.end()),
                      sorted_primes.end());
  for (unsigned p : sorted_primes) {
    if (!is_prime(p)) throw NotPrime("run_suite: " + std::to_string(p) + " is not prime");
  }

  using ClaimFn = VerificationResult (*)(const FiniteGroup&, unsigned, std::string);
  constexpr std::pair<Claim, ClaimFn> kClaims[] = {
      {Claim::theorem_b, verify_theorem_b},
      {Claim::corollary_1, verify_corollary_1},
      {Claim::proposition_priddy, verify_proposition_priddy},
      {Claim::corollary_priddy, verify_corollary_priddy},
      {Claim::corollary_pcentral, verify_corollary_pcentral},
  };

  std::vector<VerificationResult> cells;
  for (const auto& entry : standard_catalog(max_order)) {
    for (unsigned p : sorted_primes) {
      if (entry.group.order() % p != 0) continue;
      for (const auto& [claim, fn] : kClaims) {
        if (claim_filter && *claim_filter != claim) continue;
        try {
          cells.push_back(fn(entry.group, p, entry.name));
        } catch (const TooLarge&) {
          VerificationResult skipped = make_result(claim, entry.name, p);
          skipped.verdict = Verdict::skipped;
          cells.push_back(std::move(skipped));
        }
      }
    }
  }
  if (!claim_filter || *claim_filter == Claim::example_quaternion) {
    cells.push_back(verify_example_quaternion());
  }
  return aggregate(std::move(cells));
}

SuiteReport aggregate(std::vector<VerificationResult> cells) { return SuiteReport{std::move(cells)}; }

int exit_code(const SuiteReport& report) { return report.totals().fail > 0 ? 1 : 0; }

}  // namespace fg
