#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Built-in oracle-equivalence suites: every randomized solver is replayed
// against an independent exhaustive implementation on freshly generated
// desk-scale instances.  Deterministic in (trials, seed, mutate_dag).
namespace matgirth::selftest {

struct SuiteResult {
  std::string name;
  long long trials = 0;
  long long failures = 0;
  bool passed() const { return failures == 0; }
};

struct Options {
  long long trials = 25;    // per suite; 0 runs nothing
  std::uint64_t seed = 0;
  bool mutate_dag = false;  // corrupt the Pfaffian DAG (negative control:
                            // the pfaffian suite must then fail)
};

std::vector<SuiteResult> run_selftest(const Options& opt);

// One "suite=<name> trials=<n> failures=<k> status=<pass|fail>" line per
// suite plus a final "selftest=<pass|fail>" line; empty input gives "".
std::string format_report(const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace matgirth::selftest
