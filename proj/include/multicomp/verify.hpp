#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "multicomp/counting.hpp"
#include "multicomp/numeric.hpp"

namespace multicomp {

// Invariant suites run by `multicomp verify`. Each check reports pass/fail and,
// on failure, the first counterexample found.

struct Bounds {
  int max_n = 8;
  int max_k = 3;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string suite;
  Bounds bounds;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const;
};

enum class Suite { core, triangles, diagonals, cluster, all };

std::string_view suite_name(Suite s);
Suite suite_from_name(std::string_view name);

Report run_suite(Suite suite, const Bounds& bounds);

/// Count closed form for one statistic, (k, n, l) -> count.
using CountFormula = std::function<BigInt(int, int, int)>;

/// Histogram of `statistic` over enumerate(k, n) against `formula`, for
/// k <= max_k, n <= max_n. Exposed so a deliberately broken formula can be
/// shown to fail.
CheckResult check_count_against_enumeration(std::string name, Statistic statistic, const CountFormula& formula,
                                            const Bounds& bounds);

/// Closed form for the given statistic, as used by the suites.
CountFormula closed_form(Statistic statistic);

}  // namespace multicomp
