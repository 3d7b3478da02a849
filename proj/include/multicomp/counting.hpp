#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multicomp/numeric.hpp"

namespace multicomp {

/// Coefficient of x^l in (1 + x + ... + x^k)^n; zero outside 0 <= l <= nk.
BigInt multinomial(int n, int l, int k);

/// All coefficients of (1 + x + ... + x^k)^n, by repeated polynomial
/// multiplication.
std::vector<BigInt> multinomial_row(int n, int k);

/// (k+1)^(n-1), the number of k-compositions of n.
BigInt count_total(int k, int n);

// Counts of k-compositions of n by statistic, closed forms. Out-of-range l
// gives 0.

/// l parts in the zero form (zeros included): multinomial(n-1, l-1, k).
BigInt count_all_parts(int k, int n, int l);
/// l positive parts: k^(l-1) * binom(n-1, l-1).
BigInt count_positive_parts(int k, int n, int l);
/// l zeros: sum over m of binom(n-1, m) * multinomial(m, l, k-1).
BigInt count_zeros(int k, int n, int l);

enum class Statistic { all_parts, positive_parts, zeros };

std::string_view statistic_name(Statistic s);
/// Accepts "all", "all_parts", "positive", "positive_parts", "zeros".
Statistic statistic_from_name(std::string_view name);

/// Rows 1..rows of a counting triangle, each built from the previous row by
/// the statistic's recurrence alone. Row n starts at l = first_index().
struct Triangle {
  int k = 1;
  Statistic statistic = Statistic::all_parts;
  std::vector<std::vector<BigInt>> rows;

  [[nodiscard]] int first_index() const noexcept { return statistic == Statistic::zeros ? 0 : 1; }
  /// Entry for (n, l) with 1-based n; 0 outside the row.
  [[nodiscard]] BigInt at(int n, int l) const;
};

/// Length of row n: nk-k+1, n, or (n-1)(k-1)+1.
int row_length(int k, Statistic statistic, int n);

Triangle triangle(int k, Statistic statistic, int rows);

/// Space-separated values, one row per line.
std::string triangle_text(const Triangle& t);
/// Header "n,l=<first>,..." then ragged rows "n,v,v,...".
std::string triangle_csv(const Triangle& t);
/// {"k":2,"statistic":"zeros","rows":[[1],[2,1],...]}
std::string triangle_json(const Triangle& t);

}  // namespace multicomp
