#pragma once

// Brute-force generators that share no code path with the library's
// enumeration, counting or bijections. Used to freeze expected values and to
// check image sets.

#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Every sequence of nonnegative ints with sum n whose first and last terms
/// are positive and whose zero runs are at most k-1 long.
inline std::set<std::vector<int>> zero_compositions(int k, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> terms;
  std::function<void(int, int)> grow = [&](int remaining, int run) {
    if (remaining == 0) {
      if (!terms.empty() && terms.back() > 0) out.insert(terms);
      return;
    }
    for (int t = terms.empty() ? 1 : 0; t <= remaining; ++t) {
      if (t == 0 && run + 1 > k - 1) continue;
      terms.push_back(t);
      grow(remaining - t, t == 0 ? run + 1 : 0);
      terms.pop_back();
    }
  };
  grow(n, 0);
  return out;
}

/// Every list of (value, color) with positive values summing to n, colors in
/// 1..k and the first color 1.
inline std::set<std::vector<std::pair<int, int>>> colored_compositions(int k, int n) {
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> parts;
  std::function<void(int)> grow = [&](int remaining) {
    if (remaining == 0) {
      out.insert(parts);
      return;
    }
    for (int v = 1; v <= remaining; ++v)
      for (int c = 1; c <= (parts.empty() ? 1 : k); ++c) {
        parts.emplace_back(v, c);
        grow(remaining - v);
        parts.pop_back();
      }
  };
  grow(n);
  return out;
}

/// Number of tuples in {0..k}^n with sum l.
inline long long multinomial_by_tuples(int n, int l, int k) {
  long long count = 0;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    int s = 0;
    for (int d : digits) s += d;
    if (s == l) ++count;
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == k) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return count;
}

/// Compositions of n over {1, 1', 2, ..., k}, 1' encoded as -1.
inline std::set<std::vector<int>> b_compositions(int k, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int)> grow = [&](int remaining) {
    if (remaining == 0) {
      out.insert(parts);
      return;
    }
    for (int p : {-1, 1, 2, 3, 4, 5, 6, 7, 8}) {
      const int w = p < 0 ? 1 : p;
      if (p > k || w > remaining) continue;
      parts.push_back(p);
      grow(remaining - w);
      parts.pop_back();
    }
  };
  grow(n);
  return out;
}

}  // namespace oracle
