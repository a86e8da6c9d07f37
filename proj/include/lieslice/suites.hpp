#pragma once

// Exhaustive runs of the cascade checks over every simple type up to a rank.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lieslice/cascade.hpp"
#include "lieslice/root_system.hpp"
#include "lieslice/verdict.hpp"

namespace lieslice {

/// A1..An, B2.., C3.., D4.., E6-E8, F4, G2 with rank at most `max_rank`.
inline std::vector<TypeSpec> simple_types_up_to(int max_rank) {
  std::vector<std::string> names;
  for (int n = 1; n <= max_rank; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) names.push_back("B" + std::to_string(n));
  for (int n = 3; n <= max_rank; ++n) names.push_back("C" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) names.push_back("D" + std::to_string(n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) names.push_back("E" + std::to_string(n));
  if (max_rank >= 4) names.push_back("F4");
  if (max_rank >= 2) names.push_back("G2");
  std::vector<TypeSpec> out;
  for (const auto& n : names) out.push_back(TypeSpec::parse(n));
  return out;
}

struct SuiteResult {
  std::string name;
  std::vector<std::string> types;
  long cases = 0;       // subsets or pairs examined
  long applicable = 0;  // cases where the check was not vacuous
  Verdict verdict;      // first failure, if any, with its witness
};

namespace detail {

template <class Check>
SuiteResult run_pairs(std::string name, const std::vector<TypeSpec>& types, Check check) {
  SuiteResult res;
  res.name = std::move(name);
  for (const auto& spec : types) {
    res.types.push_back(spec.to_string());
    const RootSystem rs(spec);
    const std::uint32_t full = rs.all_simple().bits();
    for (std::uint32_t s = 0; s <= full; ++s)
      for (std::uint32_t t = 0; t <= full; ++t) {
        ++res.cases;
        const Verdict v = check(rs, SimpleSet(s), SimpleSet(t));
        if (v.status == Status::Holds) ++res.applicable;
        if (v.failed()) {
          res.verdict = Verdict::fails(spec.to_string() + " S=" + describe(SimpleSet(s)) +
                                       " T=" + describe(SimpleSet(t)) + ": " + v.note);
          return res;
        }
      }
  }
  return res;
}

}  // namespace detail

/// Cascade element invariants, nesting, bullets and strong orthogonality for
/// every subset of every listed type.
inline SuiteResult cascade_property_suite(const std::vector<TypeSpec>& types) {
  SuiteResult res;
  res.name = "cascade-properties";
  for (const auto& spec : types) {
    res.types.push_back(spec.to_string());
    const RootSystem rs(spec);
    for (std::uint32_t s = 0; s <= rs.all_simple().bits(); ++s) {
      ++res.cases;
      ++res.applicable;
      const Verdict v = check_cascade_properties(rs, SimpleSet(s));
      if (v.failed()) {
        res.verdict = Verdict::fails(spec.to_string() + " S=" + describe(SimpleSet(s)) + ": " + v.note);
        return res;
      }
    }
  }
  return res;
}

inline SuiteResult sum_exclusion_suite(const std::vector<TypeSpec>& types) {
  return detail::run_pairs("cascade-sum-exclusion", types, check_cascade_sum_exclusion);
}

inline SuiteResult injectivity_suite(const std::vector<TypeSpec>& types) {
  return detail::run_pairs("cascade-injectivity", types, check_cascade_injectivity);
}

inline SuiteResult counterexample_suite() {
  SuiteResult res;
  res.name = "a5-counterexample";
  res.types = {"A5"};
  res.cases = res.applicable = 1;
  const auto w = counterexample_witness(RootSystem(TypeSpec::parse("A5")));
  if (!w.certified)
    res.verdict = Verdict::fails("witness h = (1,-1,0,1,-1) not certified: rank " +
                                 std::to_string(w.conditions.eps_rank) + " of " +
                                 std::to_string(w.conditions.eps_count));
  else
    res.verdict = Verdict::holds("ε-rank " + std::to_string(w.conditions.eps_rank) + " < " +
                                 std::to_string(w.conditions.eps_count));
  return res;
}

/// The full set run by `lieslice verify-lemmas`.
inline std::vector<SuiteResult> run_lemma_suites(int max_rank = 5) {
  const auto types = simple_types_up_to(max_rank);
  return {cascade_property_suite(types), sum_exclusion_suite(types), injectivity_suite(types), counterexample_suite()};
}

}  // namespace lieslice
