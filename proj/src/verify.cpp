#include "multicomp/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "multicomp/cluster.hpp"
#include "multicomp/core.hpp"
#include "multicomp/errors.hpp"
#include "multicomp/restricted.hpp"
#include "multicomp/sequences.hpp"
#include "multicomp/series.hpp"

namespace multicomp {

namespace {

// Keeps the first failure only; later ones add nothing to a report.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool condition, Describe&& describe) {
    if (condition || !result_.passed) return;
    result_.passed = false;
    result_.detail = describe();
  }

  [[nodiscard]] bool ok() const noexcept { return result_.passed; }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

int statistic_of(const ColoredComposition& c, Statistic s) {
  switch (s) {
    case Statistic::all_parts:
      return static_cast<int>(c.parts().size()) + zero_count(c);
    case Statistic::positive_parts:
      return static_cast<int>(c.parts().size());
    case Statistic::zeros:
      return zero_count(c);
  }
  return -1;
}

Report core_suite(const Bounds& b) {
  Report report{"core", b, {}, {}};
  Check to_zero("colored -> zeros -> colored roundtrip");
  Check from_zero("zeros -> colored -> zeros roundtrip");
  Check to_marker("colored -> markers -> colored roundtrip");
  Check from_marker("markers -> colored -> markers roundtrip");
  Check count("count equals (k+1)^(n-1)");
  Check zeros("zero_count equals zeros of the zero form");
  Check unique("enumeration has no duplicates");
  Check text("parse(render(x)) == x in all three forms");

  for (int k = 1; k <= b.max_k; ++k) {
    for (int n = 1; n <= b.max_n; ++n) {
      std::set<std::vector<int>> seen;
      BigInt produced = 0;
      CompositionStream stream(k, n);
      while (auto c = stream.next()) {
        ++produced;
        seen.insert(stream.current_codes());
        const ZeroComposition z = to_zero_form(*c);
        const MarkerSequence m = to_markers(*c);
        to_zero.expect(to_colored_form(z) == *c, [&] { return render(*c); });
        from_zero.expect(to_zero_form(to_colored_form(z)) == z, [&] { return render(z); });
        to_marker.expect(from_markers(m) == *c, [&] { return render(*c); });
        from_marker.expect(to_markers(from_markers(m)) == m, [&] { return render(m); });
        zeros.expect(zero_count(*c) == z.zeros(), [&] { return render(*c); });
        text.expect(parse_colored(render(*c), k) == *c && parse_zeros(render(z), k) == z &&
                        parse_markers(render(m), k) == m,
                    [&] { return render(*c); });
      }
      count.expect(produced == count_total(k, n),
                   [&] { return at(k, n) + ": produced " + to_string(produced); });
      unique.expect(BigInt(seen.size()) == produced, [&] { return at(k, n); });
    }
  }
  for (Check* c : {&to_zero, &from_zero, &to_marker, &from_marker, &count, &zeros, &unique, &text})
    report.checks.push_back(c->done());
  return report;
}

Report triangles_suite(const Bounds& b) {
  Report report{"triangles", b, {}, {}};
  for (Statistic s : {Statistic::all_parts, Statistic::positive_parts, Statistic::zeros}) {
    const std::string name(statistic_name(s));
    report.checks.push_back(
        check_count_against_enumeration(name + " closed form equals enumeration", s, closed_form(s), b));

    Check recurrence(name + " recurrence triangle equals closed form");
    Check sums(name + " row sums equal (k+1)^(n-1)");
    Check lengths(name + " row lengths");
    const CountFormula formula = closed_form(s);
    for (int k = 1; k <= b.max_k; ++k) {
      const Triangle t = triangle(k, s, b.max_n);
      for (int n = 1; n <= b.max_n; ++n) {
        const auto& row = t.rows[static_cast<std::size_t>(n - 1)];
        lengths.expect(static_cast<int>(row.size()) == row_length(k, s, n), [&] { return at(k, n); });
        BigInt total = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
          const int l = static_cast<int>(i) + t.first_index();
          total += row[i];
          recurrence.expect(row[i] == formula(k, n, l), [&] {
            return at(k, n) + " l=" + std::to_string(l) + ": " + to_string(row[i]) + " vs " +
                   to_string(formula(k, n, l));
          });
        }
        sums.expect(total == count_total(k, n), [&] { return at(k, n); });
      }
    }
    report.checks.push_back(recurrence.done());
    report.checks.push_back(sums.done());
    report.checks.push_back(lengths.done());
  }

  Check boundary("single composition at maximal parts and maximal zeros");
  for (int k = 1; k <= b.max_k; ++k)
    for (int n = 1; n <= b.max_n; ++n)
      // For k = 1 no composition has a zero, so the maximal-zeros count is 2^(n-1).
      boundary.expect(count_all_parts(k, n, n * k - k + 1) == 1 &&
                          (k == 1 || count_zeros(k, n, (n - 1) * (k - 1)) == 1),
                      [&] { return at(k, n); });
  report.checks.push_back(boundary.done());

  for (Restriction r : {Restriction::one_two, Restriction::odd, Restriction::no_ones}) {
    const std::string name(restriction_name(r));
    Check enumerated(name + " recurrence equals enumeration");
    Check gf(name + " recurrence equals GF coefficient");
    const Family family = r == Restriction::one_two ? Family::one_two
                          : r == Restriction::odd   ? Family::odd
                                                    : Family::no_ones;
    for (int k = 1; k <= b.max_k; ++k) {
      const auto series = gf_coefficients(family, k, static_cast<std::size_t>(b.max_n) + 1);
      for (int n = 1; n <= b.max_n; ++n) {
        BigInt counted = 0;
        auto stream = enumerate_restricted(k, n, r);
        while (stream.next()) ++counted;
        const BigInt expected = count_restricted(k, n, r);
        enumerated.expect(counted == expected, [&] { return at(k, n); });
        gf.expect(series[static_cast<std::size_t>(n)] == Rational(expected), [&] { return at(k, n); });
      }
    }
    report.checks.push_back(enumerated.done());
    report.checks.push_back(gf.done());
  }
  return report;
}

Report diagonals_suite(const Bounds& b) {
  Report report{"diagonals", b, {}, {}};
  Check jacobsthal("positive-parts diagonal sum equals J^k(n)");
  Check pell("zeros diagonal sum equals P^k(n)");
  Check no_ones("c_no_ones(n) equals J^k(n-1)");
  Check b_count("|B^k(n)| equals P^k(n+1)");
  Check shift("increment_parts is a bijection onto compositions without 1");
  Check markers("to_b_composition is a bijection onto B^k(n-1)");

  for (int k = 1; k <= b.max_k; ++k) {
    for (int n = 1; n <= b.max_n; ++n) {
      jacobsthal.expect(diagonal_sum(k, Statistic::positive_parts, n) == jacobsthal_k(k, n),
                        [&] { return at(k, n); });
      if (k >= 2) pell.expect(diagonal_sum(k, Statistic::zeros, n) == pell_k(k, n), [&] { return at(k, n); });
      if (n >= 2)
        no_ones.expect(count_restricted(k, n, Restriction::no_ones) == jacobsthal_k(k, n - 1),
                       [&] { return at(k, n); });
      if (k >= 2) {
        BigInt produced = 0;
        auto stream = enumerate_B(k, n);
        while (stream.next()) ++produced;
        b_count.expect(produced == pell_k(k, n + 1), [&] { return at(k, n); });
      }
    }
  }

  for (int k = 1; k <= b.max_k; ++k) {
    // Domain: union over i of compositions of target - i with i parts.
    for (int target = 2; target <= b.max_n; ++target) {
      std::set<ColoredComposition> image;
      for (int i = 1; i < target; ++i) {
        CompositionStream stream(k, target - i);
        while (auto c = stream.next()) {
          if (static_cast<int>(c->parts().size()) != i) continue;
          const ColoredComposition shifted = increment_parts(*c);
          shift.expect(decrement_parts(shifted) == *c, [&] { return "roundtrip " + render(*c); });
          shift.expect(image.insert(shifted).second, [&] { return "collision at " + render(shifted); });
        }
      }
      std::set<ColoredComposition> expected;
      auto stream = enumerate_restricted(k, target, Restriction::no_ones);
      while (auto c = stream.next()) expected.insert(*c);
      shift.expect(image == expected, [&] { return "image set differs at " + at(k, target); });
    }
  }

  for (int k = 2; k <= b.max_k; ++k) {
    for (int n = 2; n <= b.max_n; ++n) {
      std::set<BComposition> image;
      for (int i = 0; i <= n - 2; ++i) {
        CompositionStream stream(k, n - i);
        while (auto c = stream.next()) {
          if (zero_count(*c) != i) continue;
          const BComposition mapped = to_b_composition(*c);
          markers.expect(mapped.sum() == n - 1, [&] { return "sum of image of " + render(*c); });
          markers.expect(from_b_composition(mapped) == to_zero_form(*c), [&] { return "roundtrip " + render(*c); });
          markers.expect(image.insert(mapped).second, [&] { return "collision at " + render(mapped); });
        }
      }
      std::set<BComposition> expected;
      auto stream = enumerate_B(k, n - 1);
      while (auto bc = stream.next()) expected.insert(*bc);
      markers.expect(image == expected, [&] { return "image set differs at " + at(k, n); });
    }
  }

  Check discrepancy("literal summation formulas differ from the sequences where the diagonal sums agree");
  const BigInt j_formula = jacobsthal_summation_formula(2, 4);
  const BigInt p_formula = pell_summation_formula(2, 3);
  discrepancy.expect(j_formula != jacobsthal_k(2, 4) && diagonal_sum(2, Statistic::positive_parts, 4) == jacobsthal_k(2, 4),
                     [&] { return std::string("Jacobsthal formula unexpectedly matches"); });
  discrepancy.expect(p_formula != pell_k(2, 3) && diagonal_sum(2, Statistic::zeros, 3) == pell_k(2, 3),
                     [&] { return std::string("Pell formula unexpectedly matches"); });
  report.notes.push_back("Jacobsthal summation sum_{i>=1} k^(i-1) binom(n-1-i, i-1) at k=2 n=4 gives " +
                         to_string(j_formula) + "; J^2(4) = " + to_string(jacobsthal_k(2, 4)) +
                         " = diagonal sum. Index shift: binom(n-i, i-1) matches.");
  report.notes.push_back("Pell summation sum_{i>=0} sum_{m=0}^{n-i} binom(n-i, m) multinomial(m, i, k-1) at k=2 n=3 gives " +
                         to_string(p_formula) + "; P^2(3) = " + to_string(pell_k(2, 3)) +
                         " = diagonal sum. Index shift: upper limit n-i-1 matches.");

  for (Check* c : {&jacobsthal, &pell, &no_ones, &b_count, &shift, &markers, &discrepancy})
    report.checks.push_back(c->done());
  return report;
}

Report cluster_suite(const Bounds& b) {
  Report report{"cluster", b, {}, {}};
  constexpr int kMaxDecomposeN = 4;
  const int decompose_n = std::min(b.max_n, kMaxDecomposeN);
  Check oracle("|decompose_b| equals closed_form_cg");
  Check census("decompose_b keys are exactly the g-compositions");
  Check sign("b(n) coefficients carry sign (-1)^(n+1)");
  Check identity("sum of closed_form_cg equals binom(gn,n)/(gn)");

  for (int g = 2; g <= 3; ++g) {
    for (int n = 1; n <= decompose_n; ++n) {
      const int q = g * n + 2;
      std::map<GComposition, Rational> coefficients;
      try {
        coefficients = decompose_b(g, n, q);
      } catch (const VerificationError& e) {
        oracle.expect(false, [&] { return std::string(e.what()); });
        continue;
      }
      std::set<GComposition> keys;
      for (const auto& [l, c] : coefficients) {
        keys.insert(l);
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        oracle.expect(magnitude == closed_form_cg(l), [&] {
          return "g=" + std::to_string(g) + " " + render(to_zero_composition(l)) + ": " + to_string(c);
        });
        sign.expect((c > 0) == (n % 2 == 1), [&] { return "g=" + std::to_string(g) + " n=" + std::to_string(n); });
      }
      const auto all = g_compositions(g, n);
      census.expect(keys == std::set<GComposition>(all.begin(), all.end()),
                    [&] { return "g=" + std::to_string(g) + " n=" + std::to_string(n); });
    }
  }
  report.notes.push_back("decompose_b checked for g in {2,3}, n <= " + std::to_string(decompose_n) + ", q = gn+2");
  for (int g = 2; g <= 4; ++g) {
    for (int n = 1; n <= b.max_n; ++n) {
      const IdentitySum s = identity_sum(g, n);
      identity.expect(s.lhs == s.rhs, [&] { return "g=" + std::to_string(g) + " n=" + std::to_string(n); });
      report.notes.push_back("identity g=" + std::to_string(g) + " n=" + std::to_string(n) + ": " +
                             to_string(s.lhs) + " = " + to_string(s.rhs));
    }
  }
  for (Check* c : {&oracle, &census, &sign, &identity}) report.checks.push_back(c->done());
  return report;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::core:
      return "core";
    case Suite::triangles:
      return "triangles";
    case Suite::diagonals:
      return "diagonals";
    case Suite::cluster:
      return "cluster";
    case Suite::all:
      return "all";
  }
  return "?";
}

Suite suite_from_name(std::string_view name) {
  for (Suite s : {Suite::core, Suite::triangles, Suite::diagonals, Suite::cluster, Suite::all})
    if (suite_name(s) == name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

CountFormula closed_form(Statistic statistic) {
  switch (statistic) {
    case Statistic::all_parts:
      return count_all_parts;
    case Statistic::positive_parts:
      return count_positive_parts;
    case Statistic::zeros:
      return count_zeros;
  }
  throw DomainError("unknown statistic");
}

CheckResult check_count_against_enumeration(std::string name, Statistic statistic, const CountFormula& formula,
                                            const Bounds& bounds) {
  Check check(std::move(name));
  for (int k = 1; k <= bounds.max_k && check.ok(); ++k) {
    for (int n = 1; n <= bounds.max_n && check.ok(); ++n) {
      std::map<int, BigInt> histogram;
      CompositionStream stream(k, n);
      while (auto c = stream.next()) ++histogram[statistic_of(*c, statistic)];
      // l from -1 to one past the longest row, so stray nonzero values outside
      // the support are caught as well.
      const int top = n * k + 1;
      for (int l = -1; l <= top; ++l) {
        const auto it = histogram.find(l);
        const BigInt counted = it == histogram.end() ? BigInt(0) : it->second;
        const BigInt expected = formula(k, n, l);
        check.expect(counted == expected, [&] {
          return at(k, n) + " l=" + std::to_string(l) + ": enumerated " + to_string(counted) + ", formula " +
                 to_string(expected);
        });
      }
    }
  }
  return check.done();
}

Report run_suite(Suite suite, const Bounds& bounds) {
  if (bounds.max_n < 1 || bounds.max_k < 1) throw DomainError("bounds must be positive");
  if (suite != Suite::all) {
    try {
      switch (suite) {
        case Suite::core:
          return core_suite(bounds);
        case Suite::triangles:
          return triangles_suite(bounds);
        case Suite::diagonals:
          return diagonals_suite(bounds);
        case Suite::cluster:
          return cluster_suite(bounds);
        case Suite::all:
          break;
      }
    } catch (const std::exception& e) {
      // An exception inside a suite is a failed check, not a crash.
      return Report{std::string(suite_name(suite)), bounds, {{"suite completed", false, e.what()}}, {}};
    }
  }
  Report merged{"all", bounds, {}, {}};
  for (Suite s : {Suite::core, Suite::triangles, Suite::diagonals, Suite::cluster}) {
    Report part = run_suite(s, bounds);
    for (CheckResult& c : part.checks) {
      c.name = part.suite + ": " + c.name;
      merged.checks.push_back(std::move(c));
    }
    for (std::string& note : part.notes) merged.notes.push_back(part.suite + ": " + note);
  }
  return merged;
}

}  // namespace multicomp
