#include <gtest/gtest.h>

#include <numeric>

#include "multicomp/cluster.hpp"
#include "multicomp/errors.hpp"

using namespace multicomp;

namespace {

// Z(n) straight from its definition as a sum over n-subsets of 1..q whose
// elements pairwise differ by at least g.
StatePolynomial subsets_partition_function(int g, int n, int q) {
  StatePolynomial z(q);
  std::vector<int> chosen;
  auto walk = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      Monomial m;
      for (int s : chosen) m = multiply(m, Monomial{{s, 1}});
      z.add_term(m, 1);
      return;
    }
    for (int s = next; s <= q; ++s) {
      chosen.push_back(s);
      self(self, s + g);
      chosen.pop_back();
    }
  };
  walk(walk, 1);
  return z;
}

BigInt lcm_upto(int n) {
  BigInt l = 1;
  for (int i = 2; i <= n; ++i) l = boost::multiprecision::lcm(l, BigInt(i));
  return l;
}

}  // namespace

TEST(Cluster, IndexConversion) {
  EXPECT_EQ(colors_for_exclusion(2), 1);
  EXPECT_EQ(exclusion_for_colors(3), 4);
  EXPECT_THROW(GComposition(1, {1}), DomainError);
  EXPECT_THROW(GComposition(2, {1, 0, 1}), InvariantError);
  EXPECT_NO_THROW(GComposition(3, {1, 0, 1}));
}

TEST(Cluster, PartitionFunctionExamples) {
  const StatePolynomial z = partition_function(2, 2, 4);
  EXPECT_EQ(render(z), "1 s(1)*s(3)\n1 s(1)*s(4)\n1 s(2)*s(4)\n");
  EXPECT_TRUE(partition_function(2, 3, 4).is_zero());
  EXPECT_EQ(partition_function(3, 0, 5), StatePolynomial::constant(5, 1));
}

TEST(Cluster, PartitionFunctionMatchesSubsets) {
  for (int g = 2; g <= 4; ++g)
    for (int q = 1; q <= 10; ++q)
      for (int n = 0; n <= 4; ++n) EXPECT_EQ(partition_function(g, n, q), subsets_partition_function(g, n, q));
}

TEST(Cluster, CoefficientsSatisfyExponentialRelation) {
  // n Z(n) = sum_{j=1}^{n} j b(j) Z(n-j) holds exactly when sum b(n) z^n is
  // the logarithm of sum Z(n) z^n.
  for (int g = 2; g <= 3; ++g) {
    const int q = 8, N = 4;
    const auto b = cluster_coefficients(g, N, q);
    ASSERT_EQ(b.size(), static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
      StatePolynomial rhs(q);
      for (int j = 1; j <= n; ++j)
        rhs += Rational(j) * (b[static_cast<std::size_t>(j - 1)] * partition_function(g, n - j, q));
      EXPECT_EQ(Rational(n) * partition_function(g, n, q), rhs) << g << " " << n;
    }
  }
}

TEST(Cluster, SecondCoefficientExample) {
  const auto b = cluster_coefficients(2, 2, 5);
  EXPECT_EQ(b[0], partition_function(2, 1, 5));
  EXPECT_EQ(b[1].coefficient({{1, 2}}), Rational(-1, 2));
  EXPECT_EQ(b[1].coefficient({{1, 1}, {2, 1}}), -1);
  EXPECT_EQ(b[1].coefficient({{1, 1}, {3, 1}}), 0);
}

TEST(Cluster, TermForComposition) {
  EXPECT_EQ(render(term_for_composition(GComposition(2, {2}), 2)), "1 s(1)^2\n1 s(2)^2\n");
  EXPECT_EQ(render(term_for_composition(GComposition(2, {1, 1}), 3)), "1 s(1)*s(2)\n1 s(2)*s(3)\n");
  EXPECT_EQ(render(term_for_composition(GComposition(3, {1, 0, 1}), 4)), "1 s(1)*s(3)\n1 s(2)*s(4)\n");
}

TEST(Cluster, DecompositionMatchesClosedFormAndRebuilds) {
  for (auto [g, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 3}}) {
    const int q = g * n + 2;
    const auto parts = decompose_b(g, n, q);
    const auto compositions = g_compositions(g, n);
    EXPECT_EQ(parts.size(), compositions.size());
    StatePolynomial rebuilt(q);
    for (const auto& l : compositions) {
      ASSERT_TRUE(parts.count(l)) << g << " " << n;
      const Rational c = parts.at(l);
      EXPECT_EQ(c, (n % 2 ? 1 : -1) * closed_form_cg(l));
      rebuilt += c * term_for_composition(l, q);
    }
    EXPECT_EQ(rebuilt, cluster_coefficients(g, n, q).back());
  }
  EXPECT_THROW(decompose_b(2, 3, 5), DomainError);
}

TEST(Cluster, ClosedFormExamples) {
  EXPECT_EQ(closed_form_cg(GComposition(2, {2})), Rational(1, 2));
  EXPECT_EQ(closed_form_cg(GComposition(2, {1, 1})), 1);
  EXPECT_EQ(closed_form_cg(GComposition(3, {1, 0, 1})), 1);
}

TEST(Cluster, IdentityAndCensus) {
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 7; ++n) {
      const IdentitySum s = identity_sum(g, n);
      EXPECT_EQ(s.lhs, s.rhs) << g << " " << n;
      EXPECT_EQ(s.rhs, Rational(binomial(g * n, n), BigInt(g * n)));
      EXPECT_EQ(BigInt(g_compositions(g, n).size()), power(BigInt(g), static_cast<unsigned>(n - 1)));
    }
}

TEST(Cluster, CoefficientShape) {
  for (int g = 2; g <= 3; ++g) {
    const int q = 9;
    const auto b = cluster_coefficients(g, 4, q);
    for (int n = 1; n <= 4; ++n) {
      const BigInt l = lcm_upto(n);
      for (const auto& [m, c] : b[static_cast<std::size_t>(n - 1)].terms()) {
        EXPECT_EQ(degree(m), n);
        EXPECT_EQ(c.sign(), n % 2 ? 1 : -1);
        EXPECT_EQ(boost::multiprecision::denominator(Rational(c * l)), 1);
        // States of a connected cluster leave gaps of at most g-2 unused states.
        for (std::size_t i = 1; i < m.size(); ++i) EXPECT_LT(m[i].first - m[i - 1].first, g);
      }
    }
  }
}

TEST(Cluster, RejectsMixedStateCounts) {
  StatePolynomial a(3), b(4);
  EXPECT_THROW(a += b, DomainError);
  EXPECT_THROW(a.add_term({{4, 1}}, 1), DomainError);
}
