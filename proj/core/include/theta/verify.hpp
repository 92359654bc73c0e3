#pragma once

#include <functional>

#include "theta/serialize.hpp"

namespace theta {

struct CheckFailure {
  std::string input;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string grid;
  long passes = 0;
  long failure_count = 0;
  std::vector<CheckFailure> failures;  // first 10 kept

  bool ok() const { return failure_count == 0; }
  void pass() { ++passes; }
  void fail_case(std::string input, std::string detail) {
    ++failure_count;
    if (failures.size() < 10) failures.push_back({std::move(input), std::move(detail)});
  }
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  std::string to_text() const;
  std::string to_json() const;
};

// Seeded defects for the sensitivity check. Each one flips a single system
// constant or shifts a single continuous parameter inside one golden
// formula; the grid laws must notice every one of them.
enum class Mutation {
  None,
  ChiMidNuShift,    // chi, q=1 middle region: nu becomes p+k+2
  ChiHighNuShift,   // chi, q=1 high region: nu becomes 2p+1
  ChiLowSignFlip,   // chi, q=1 low region at k=-p: tied sign flipped
  DbarQ1SignFlip,   // Dbar, q=1 at l1=-l2: tied sign flipped
  DTallQ2SignFlip,  // D, (2,2) at l2=2: tied sign flipped
};

constexpr Mutation kAllMutations[] = {Mutation::ChiMidNuShift, Mutation::ChiHighNuShift,
                                      Mutation::ChiLowSignFlip, Mutation::DbarQ1SignFlip,
                                      Mutation::DTallQ2SignFlip};

// Direct re-instantiations of the explicit lift formulas, written down
// independently of the engine. nullopt means no direct formula covers the
// cell (going-up territory).
std::optional<LiftResult> golden_ostar2(long k, int p, int q, Mutation m = Mutation::None);
std::optional<LiftResult> golden_ostar4(const OStar4Rep& rep, int p, int q,
                                        Mutation m = Mutation::None);

// Lift providers let the laws run against either the engine or a (possibly
// mutated) golden table; nullopt skips a cell.
using Ostar2Lift = std::function<std::optional<LiftResult>(long, int, int)>;
using Ostar4Lift = std::function<std::optional<LiftResult>(const OStar4Rep&, int, int)>;

Ostar2Lift engine_ostar2();
Ostar4Lift engine_ostar4();
Ostar2Lift golden_ostar2_provider(Mutation m);
Ostar4Lift golden_ostar4_provider(Mutation m);

// Grid enumerations used by the suites.
std::vector<OStar2Rep> all_ostar2_reps(long max_param);
std::vector<OStar4Rep> all_ostar4_reps(long max_param);  // includes P samples

// The individual checks.
CheckResult check_infchar_law(int max_pq, long max_param, const Ostar2Lift& o2,
                              const Ostar4Lift& o4);
CheckResult check_duality_law(int max_pq, long max_param, const Ostar2Lift& o2,
                              const Ostar4Lift& o4);
CheckResult check_harmonics_law(int max_pq, long max_param, const Ostar2Lift& o2,
                                const Ostar4Lift& o4);
CheckResult check_occurrence_law(int max_pq, long max_param);
CheckResult check_stable_range(int max_pq, long max_param);
CheckResult check_going_up_paths(int q_lo, int q_hi, int max_p, long max_param);
CheckResult check_conservation(long max_param, int delta_bound);
CheckResult check_golden_ostar2(int max_p, long max_k);
CheckResult check_golden_ostar4(int max_p, long max_param);
CheckResult check_exclusion_bplus(int max_p, long max_param);
CheckResult check_catalog_soundness(int max_p_a, int max_p_b, long bound);
CheckResult check_catalog_completeness(int max_p_a, int max_p_b, long bound);
CheckResult check_table_agreement(int max_p, long bound);
CheckResult check_mutation_sensitivity(int max_pq, long max_param);

// Failures found by the three grid laws when run against the given provider
// pair; the mutation check asserts this is positive for every seeded defect.
long law_violations(int max_pq, long max_param, const Ostar2Lift& o2, const Ostar4Lift& o4);

SuiteReport run_suite(int max_pq, long max_param);

}  // namespace theta
