#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <thread>

#include "multicomp/core.hpp"
#include "multicomp/errors.hpp"
#include "oracles.hpp"

using namespace multicomp;

namespace {

ColoredComposition colored(int k, std::vector<Part> parts) { return ColoredComposition(k, std::move(parts)); }

std::vector<ColoredComposition> collect(int k, int n) {
  std::vector<ColoredComposition> out;
  for (const auto& c : enumerate(k, n)) out.push_back(c);
  return out;
}

}  // namespace

TEST(CoreTypes, RejectsInvariantViolations) {
  EXPECT_THROW(colored(2, {}), InvariantError);
  EXPECT_THROW(colored(2, {{1, 2}}), InvariantError);
  EXPECT_THROW(colored(2, {{1, 1}, {1, 3}}), InvariantError);
  EXPECT_THROW(colored(2, {{0, 1}}), InvariantError);
  EXPECT_THROW(colored(0, {{1, 1}}), DomainError);

  EXPECT_THROW(ZeroComposition(2, {0, 1}), InvariantError);
  EXPECT_THROW(ZeroComposition(2, {1, 0}), InvariantError);
  EXPECT_THROW(ZeroComposition(2, {1, 0, 0, 1}), InvariantError);
  EXPECT_NO_THROW(ZeroComposition(3, {1, 0, 0, 1}));
  EXPECT_THROW(ZeroComposition(1, {1, 0, 1}), InvariantError);

  EXPECT_THROW(MarkerSequence(2, 3, {Marker::join()}), InvariantError);
  EXPECT_THROW(MarkerSequence(2, 2, {Marker::separate(3)}), InvariantError);
  EXPECT_NO_THROW(MarkerSequence(3, 1, {}));
}

TEST(CoreTypes, DifferentKNeverEqual) {
  EXPECT_NE(colored(2, {{3, 1}}), colored(3, {{3, 1}}));
  EXPECT_NE(ZeroComposition(2, {3}), ZeroComposition(3, {3}));
}

TEST(Enumerate, TwoCompositionsOfThree) {
  const auto all = collect(2, 3);
  ASSERT_EQ(all.size(), 9u);
  // The nine listed 2-compositions of 3 in internal-zeros form.
  const std::set<std::string> expected{"1+1+1", "1+1+0+1", "1+0+1+1", "1+0+1+0+1", "1+2",
                                        "1+0+2", "2+1",     "2+0+1",   "3"};
  std::set<std::string> got;
  for (const auto& c : all) got.insert(render(to_zero_form(c)));
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, KOneIsStandardCompositions) {
  const auto all = collect(1, 4);
  ASSERT_EQ(all.size(), 8u);
  for (const auto& c : all)
    for (const Part& p : c.parts()) EXPECT_EQ(p.color, 1);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(collect(3, 4).size(), 64u);
  EXPECT_EQ(collect(4, 6).size(), 3125u);  // brute-force oracle count
  EXPECT_EQ(collect(5, 1).size(), 1u);
  EXPECT_EQ(collect(5, 1).front(), colored(5, {{1, 1}}));
}

TEST(Enumerate, LexicographicMarkerOrder) {
  std::vector<std::string> got;
  for (const auto& c : enumerate(2, 3)) got.push_back(render(to_markers(c)));
  const std::vector<std::string> expected{"J,J",   "J,S1",  "J,S2",  "S1,J", "S1,S1",
                                          "S1,S2", "S2,J",  "S2,S1", "S2,S2"};
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, RejectsBadArguments) {
  EXPECT_THROW(enumerate(0, 3), DomainError);
  EXPECT_THROW(enumerate(2, 0), DomainError);
}

TEST(Enumerate, MatchesBruteForceSets) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 7; ++n) {
      std::set<std::vector<int>> zeros;
      std::set<std::vector<std::pair<int, int>>> parts;
      for (const auto& c : enumerate(k, n)) {
        zeros.insert(to_zero_form(c).terms());
        std::vector<std::pair<int, int>> p;
        for (const Part& part : c.parts()) p.emplace_back(part.value, part.color);
        parts.insert(p);
      }
      EXPECT_EQ(zeros, oracle::zero_compositions(k, n)) << "k=" << k << " n=" << n;
      EXPECT_EQ(parts, oracle::colored_compositions(k, n)) << "k=" << k << " n=" << n;
    }
}

TEST(Enumerate, PrefixSlicesPartitionTheStream) {
  const int k = 3;
  const int n = 6;
  std::vector<std::vector<ColoredComposition>> slices(k + 1);
  std::vector<std::thread> workers;
  for (int code = 0; code <= k; ++code)
    workers.emplace_back([&, code] {
      CompositionStream stream(k, n, {Marker::from_code(code)});
      while (auto c = stream.next()) slices[static_cast<std::size_t>(code)].push_back(*c);
    });
  for (auto& w : workers) w.join();
  std::vector<ColoredComposition> joined;
  for (const auto& s : slices) joined.insert(joined.end(), s.begin(), s.end());
  EXPECT_EQ(joined, collect(k, n));
}

TEST(Bijection, ZeroFormExamples) {
  EXPECT_EQ(to_zero_form(colored(2, {{1, 1}, {1, 2}, {1, 2}})).terms(), (std::vector<int>{1, 0, 1, 0, 1}));
  EXPECT_EQ(to_zero_form(colored(2, {{3, 1}})).terms(), (std::vector<int>{3}));
  EXPECT_EQ(to_zero_form(colored(2, {{2, 1}, {1, 2}})).terms(), (std::vector<int>{2, 0, 1}));

  EXPECT_EQ(to_colored_form(ZeroComposition(2, {1, 0, 1, 1})), colored(2, {{1, 1}, {1, 2}, {1, 1}}));
  EXPECT_EQ(to_colored_form(ZeroComposition(2, {3})), colored(2, {{3, 1}}));
  EXPECT_EQ(to_colored_form(ZeroComposition(3, {2, 0, 0, 1})), colored(3, {{2, 1}, {1, 3}}));
}

TEST(Bijection, MarkerExamples) {
  const auto J = Marker::join();
  auto S = [](int m) { return Marker::separate(m); };
  EXPECT_EQ(to_markers(colored(2, {{2, 1}, {1, 2}})).markers(), (std::vector<Marker>{J, S(2)}));
  EXPECT_EQ(to_markers(colored(2, {{3, 1}})).markers(), (std::vector<Marker>{J, J}));
  EXPECT_EQ(to_markers(colored(2, {{1, 1}, {1, 2}, {1, 1}})).markers(), (std::vector<Marker>{S(2), S(1)}));

  EXPECT_EQ(from_markers(MarkerSequence(2, 3, {S(1), J})), colored(2, {{1, 1}, {2, 1}}));
  EXPECT_EQ(from_markers(MarkerSequence(3, 1, {})), colored(3, {{1, 1}}));
  EXPECT_EQ(from_markers(MarkerSequence(3, 2, {S(3)})), colored(3, {{1, 1}, {1, 3}}));
}

TEST(Bijection, ExhaustiveRoundtripsAndZeroCount) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 8; ++n)
      for (const auto& c : enumerate(k, n)) {
        const ZeroComposition z = to_zero_form(c);
        const MarkerSequence m = to_markers(c);
        ASSERT_EQ(to_colored_form(z), c);
        ASSERT_EQ(from_markers(m), c);
        ASSERT_EQ(to_zero_form(to_colored_form(z)), z);
        ASSERT_EQ(to_markers(from_markers(m)), m);
        ASSERT_EQ(z.sum(), n);
        ASSERT_EQ(m.n(), n);
        ASSERT_EQ(zero_count(c), z.zeros()) << render(c);
      }
}

TEST(ZeroCount, Examples) {
  EXPECT_EQ(zero_count(colored(2, {{1, 1}, {1, 2}, {1, 2}})), 2);
  EXPECT_EQ(zero_count(colored(2, {{3, 1}})), 0);
  EXPECT_EQ(zero_count(colored(3, {{2, 1}, {1, 3}, {1, 2}})), 3);
}

TEST(Grammar, ParseExamples) {
  EXPECT_EQ(parse_zeros("2+0+1", 2).terms(), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(parse_colored("1_1+1_2", 2), colored(2, {{1, 1}, {1, 2}}));
  EXPECT_THROW(parse_zeros("1+0+0+1", 2), InvariantError);
  EXPECT_EQ(parse_zeros(" 1 + 2 ", 1).terms(), (std::vector<int>{1, 2}));
  EXPECT_EQ(parse_markers("", 2).n(), 1);
}

TEST(Grammar, SemanticErrorsAreNotSyntaxErrors) {
  EXPECT_THROW(parse_zeros("0+1", 2), InvariantError);
  EXPECT_THROW(parse_colored("1_2+1_1", 2), InvariantError);
  EXPECT_THROW(parse_colored("1_1+1_3", 2), InvariantError);
  EXPECT_THROW(parse_markers("J,S3", 2), InvariantError);
  EXPECT_THROW(parse_markers("S0", 2), InvariantError);
}

TEST(Grammar, SyntaxErrorsReportPosition) {
  auto position_of = [](auto&& f) -> std::size_t {
    try {
      f();
    } catch (const SyntaxError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no SyntaxError";
    return 0;
  };
  EXPECT_EQ(position_of([] { parse_zeros("1+x", 2); }), 2u);
  EXPECT_EQ(position_of([] { parse_zeros("1+2+", 2); }), 4u);
  EXPECT_EQ(position_of([] { parse_colored("1_1+2", 2); }), 5u);
  EXPECT_EQ(position_of([] { parse_markers("J,K", 2); }), 2u);
  EXPECT_EQ(position_of([] { parse_zeros("1 2", 2); }), 2u);
  EXPECT_EQ(position_of([] { parse_zeros("-1", 2); }), 0u);
  EXPECT_EQ(position_of([] { parse_zeros("99999999999", 2); }), 0u);
}

TEST(Grammar, RenderExamples) {
  EXPECT_EQ(render(ZeroComposition(2, {1, 0, 2})), "1+0+2");
  EXPECT_EQ(render(colored(2, {{3, 1}})), "3_1");
  EXPECT_EQ(render(MarkerSequence(2, 3, {Marker::join(), Marker::separate(2)})), "J,S2");
}

TEST(Grammar, ParseRenderIdentityOnEnumeration) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 7; ++n)
      for (const auto& c : enumerate(k, n)) {
        for (Form f : {Form::colored, Form::zeros, Form::markers}) {
          const AnyComposition x = f == Form::colored ? AnyComposition(c)
                                   : f == Form::zeros ? AnyComposition(to_zero_form(c))
                                                      : AnyComposition(to_markers(c));
          ASSERT_EQ(parse(render(x), f, k), x) << render(x);
        }
      }
}

TEST(Grammar, RandomGarbageNeverCrashes) {
  std::mt19937 rng(20240601);
  const std::string alphabet = "0123456789+_,JS -";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(0, 12);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    for (int i = length(rng); i > 0; --i) text += alphabet[pick(rng)];
    for (Form f : {Form::colored, Form::zeros, Form::markers}) {
      try {
        const AnyComposition x = parse(text, f, 3);
        EXPECT_EQ(parse(render(x), f, 3), x);
      } catch (const SyntaxError&) {
      } catch (const InvariantError&) {
      } catch (const DomainError&) {
      }
    }
  }
}
