#include <gtest/gtest.h>

#include "multicomp/counting.hpp"
#include "multicomp/verify.hpp"

using namespace multicomp;

TEST(Verify, AllSuitesPassWithDefaultBounds) {
  const Report r = run_suite(Suite::all, Bounds{});
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
}

TEST(Verify, DiagonalNotesAreRecorded) {
  const Report r = run_suite(Suite::diagonals, Bounds{12, 3});
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.notes.empty());
}

TEST(Verify, CorrectFormulasPass) {
  for (Statistic s : {Statistic::all_parts, Statistic::positive_parts, Statistic::zeros})
    EXPECT_TRUE(check_count_against_enumeration("ok", s, closed_form(s), Bounds{7, 3}).passed);
}

TEST(Verify, OffByOneFormulasAreCaught) {
  const CountFormula shifted_l = [](int k, int n, int l) { return multinomial(n - 1, l, k); };
  EXPECT_FALSE(check_count_against_enumeration("shifted", Statistic::all_parts, shifted_l, Bounds{6, 3}).passed);

  const CountFormula shifted_n = [](int k, int n, int l) { return count_positive_parts(k, n + 1, l); };
  EXPECT_FALSE(check_count_against_enumeration("shifted", Statistic::positive_parts, shifted_n, Bounds{6, 3}).passed);

  const CountFormula wrong_colors = [](int k, int n, int l) { return count_zeros(k + 1, n, l); };
  const CheckResult r = check_count_against_enumeration("colors", Statistic::zeros, wrong_colors, Bounds{6, 3});
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.detail.empty());
}
