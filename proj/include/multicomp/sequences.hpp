#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "multicomp/core.hpp"
#include "multicomp/counting.hpp"
#include "multicomp/numeric.hpp"

namespace multicomp {

/// J(0) = 0, J(1) = 1, J(n) = J(n-1) + k J(n-2). k = 1 gives Fibonacci.
BigInt jacobsthal_k(int k, int n);

/// P(-k+2) = ... = P(0) = 0, P(1) = 1, P(n) = 2 P(n-1) + P(n-2) + ... + P(n-k).
/// Requires k >= 2; every n <= 0 maps to 0.
BigInt pell_k(int k, int n);

/// A part of a composition over {1, 1', 2, ..., k}. Ordered 1 < 1' < 2 < ... < k.
struct BPart {
  int value = 1;
  bool primed = false;

  friend auto operator<=>(const BPart&, const BPart&) = default;
};

/// Composition whose parts come from {1, 1', 2, ..., k}, with 1' weighing 1.
/// These are counted by pell_k(k, n + 1).
class BComposition {
 public:
  BComposition(int k, std::vector<BPart> parts);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<BPart>& parts() const noexcept { return parts_; }
  [[nodiscard]] int sum() const noexcept;

  friend auto operator<=>(const BComposition&, const BComposition&) = default;

 private:
  int k_;
  std::vector<BPart> parts_;
};

/// "1+1p+2"
std::string render(const BComposition& b);
/// [1,"1'",2]
std::string to_json(const BComposition& b);

/// Lazy lexicographic enumeration of BComposition of n.
class BStream {
 public:
  BStream(int k, int n);
  std::optional<BComposition> next();

 private:
  [[nodiscard]] int weight(int symbol) const noexcept { return symbol < 2 ? 1 : symbol; }

  int k_;
  int n_;
  std::vector<int> symbols_;  // 0 -> 1, 1 -> 1', m >= 2 -> m
  bool started_ = false;
  bool done_ = false;
};

BStream enumerate_B(int k, int n);

/// Adds 1 to every part, colors kept. Maps the multicompositions of sum
/// n+1-i with i parts (over all i) onto those of n+1 without a part 1.
ColoredComposition increment_parts(const ColoredComposition& c);
/// Inverse of increment_parts; throws DomainError if some part equals 1.
ColoredComposition decrement_parts(const ColoredComposition& c);

/// Reads c as a marker sequence and writes Join as 1' and Separate(m) as m.
/// A multicomposition of n-i with i zeros becomes a BComposition of n-1.
/// Requires k >= 2 and sum >= 2 (the single part 1 would map to the empty
/// composition).
BComposition to_b_composition(const ColoredComposition& c);
/// Inverse of to_b_composition: with h parts the image has sum h+1.
ZeroComposition from_b_composition(const BComposition& b);

/// Anti-diagonal sums of the positive-parts and zeros triangles:
///   positive_parts: sum_{i>=1} c_+(n+1-i, i)  == jacobsthal_k(k, n)
///   zeros:          sum_{i>=0} c_0(n-i, i)    == pell_k(k, n), k >= 2
BigInt diagonal_sum(int k, Statistic statistic, int n);

/// sum_{i>=1} k^(i-1) binom(n-1-i, i-1), the binomial indices taken literally.
/// Differs from jacobsthal_k by an index shift (3 vs 5 at k = 2, n = 4);
/// kept so the discrepancy stays checked.
BigInt jacobsthal_summation_formula(int k, int n);
/// sum_{i>=0} sum_{m=0}^{n-i} binom(n-i, m) multinomial(m, i, k-1), literally.
/// Differs from pell_k by an index shift (12 vs 5 at k = 2, n = 3).
BigInt pell_summation_formula(int k, int n);

}  // namespace multicomp
