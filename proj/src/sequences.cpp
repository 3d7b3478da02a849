#include "multicomp/sequences.hpp"

#include <deque>

#include "multicomp/errors.hpp"

namespace multicomp {

BigInt jacobsthal_k(int k, int n) {
  if (k < 1) throw DomainError("jacobsthal_k needs k >= 1");
  if (n < 0) throw DomainError("jacobsthal_k needs n >= 0");
  BigInt prev = 0;
  BigInt cur = 1;
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + k * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt pell_k(int k, int n) {
  if (k < 2) throw DomainError("pell_k needs k >= 2");
  if (n <= 0) return 0;
  // window holds P(m-k) .. P(m-1)
  std::deque<BigInt> window(static_cast<std::size_t>(k), BigInt(0));
  window.back() = 1;  // P(1)
  for (int m = 2; m <= n; ++m) {
    BigInt next = window.back();
    for (const BigInt& v : window) next += v;
    window.pop_front();
    window.push_back(std::move(next));
  }
  return window.back();
}

BComposition::BComposition(int k, std::vector<BPart> parts) : k_(k), parts_(std::move(parts)) {
  if (k_ < 2) throw DomainError("BComposition needs k >= 2");
  if (parts_.empty()) throw InvariantError("BComposition has no parts");
  for (const BPart& p : parts_) {
    if (p.value < 1 || p.value > k_) throw InvariantError("part outside 1..k");
    if (p.primed && p.value != 1) throw InvariantError("only 1 has a primed variant");
  }
}

int BComposition::sum() const noexcept {
  int s = 0;
  for (const BPart& p : parts_) s += p.value;
  return s;
}

std::string render(const BComposition& b) {
  std::string out;
  for (const BPart& p : b.parts()) {
    if (!out.empty()) out += '+';
    out += p.primed ? std::string("1p") : std::to_string(p.value);
  }
  return out;
}

std::string to_json(const BComposition& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.parts().size(); ++i) {
    if (i) out += ',';
    out += b.parts()[i].primed ? std::string("\"1'\"") : std::to_string(b.parts()[i].value);
  }
  return out + "]";
}

BStream::BStream(int k, int n) : k_(k), n_(n) {
  if (k < 2) throw DomainError("enumerate_B needs k >= 2");
  if (n < 1) throw DomainError("enumerate_B needs n >= 1");
}

std::optional<BComposition> BStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    symbols_.assign(static_cast<std::size_t>(n_), 0);
  } else {
    // Pop symbols until one can be replaced by a larger one that still fits,
    // then complete the remainder with the smallest symbol.
    int remaining = 0;
    bool found = false;
    while (!symbols_.empty() && !found) {
      const int symbol = symbols_.back();
      symbols_.pop_back();
      remaining += weight(symbol);
      const int bigger = symbol + 1;
      if (bigger <= k_ && weight(bigger) <= remaining) {
        symbols_.push_back(bigger);
        remaining -= weight(bigger);
        symbols_.insert(symbols_.end(), static_cast<std::size_t>(remaining), 0);
        found = true;
      }
    }
    if (!found) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<BPart> parts;
  parts.reserve(symbols_.size());
  for (int s : symbols_) parts.push_back(s == 1 ? BPart{1, true} : BPart{s == 0 ? 1 : s, false});
  return BComposition(k_, std::move(parts));
}

BStream enumerate_B(int k, int n) { return BStream(k, n); }

ColoredComposition increment_parts(const ColoredComposition& c) {
  std::vector<Part> parts = c.parts();
  for (Part& p : parts) ++p.value;
  return ColoredComposition(c.k(), std::move(parts));
}

ColoredComposition decrement_parts(const ColoredComposition& c) {
  std::vector<Part> parts = c.parts();
  for (Part& p : parts) {
    if (p.value == 1) throw DomainError("decrement_parts: composition has a part equal to 1");
    --p.value;
  }
  return ColoredComposition(c.k(), std::move(parts));
}

BComposition to_b_composition(const ColoredComposition& c) {
  if (c.k() < 2) throw DomainError("to_b_composition needs k >= 2");
  if (c.sum() < 2) throw DomainError("to_b_composition: the composition 1 has no markers");
  std::vector<BPart> parts;
  const MarkerSequence markers = to_markers(c);
  for (const Marker& m : markers.markers())
    parts.push_back(m.is_join() ? BPart{1, true} : BPart{m.color(), false});
  return BComposition(c.k(), std::move(parts));
}

ZeroComposition from_b_composition(const BComposition& b) {
  std::vector<Marker> markers;
  markers.reserve(b.parts().size());
  for (const BPart& p : b.parts()) markers.push_back(p.primed ? Marker::join() : Marker::separate(p.value));
  const int n = static_cast<int>(markers.size()) + 1;
  return to_zero_form(from_markers(MarkerSequence(b.k(), n, std::move(markers))));
}

BigInt diagonal_sum(int k, Statistic statistic, int n) {
  if (n < 1) throw DomainError("diagonal_sum needs n >= 1");
  BigInt total = 0;
  switch (statistic) {
    case Statistic::positive_parts:
      for (int i = 1; i <= n; ++i) total += count_positive_parts(k, n + 1 - i, i);
      return total;
    case Statistic::zeros:
      if (k < 2) throw DomainError("zeros diagonal sum needs k >= 2");
      for (int i = 0; i <= n - 1; ++i) total += count_zeros(k, n - i, i);
      return total;
    case Statistic::all_parts:
      break;
  }
  throw DomainError("diagonal_sum supports positive_parts and zeros");
}

BigInt jacobsthal_summation_formula(int k, int n) {
  BigInt total = 0;
  for (int i = 1; i <= n; ++i)
    total += power(BigInt(k), static_cast<unsigned>(i - 1)) * binomial(n - 1 - i, i - 1);
  return total;
}

BigInt pell_summation_formula(int k, int n) {
  BigInt total = 0;
  for (int i = 0; i <= n; ++i)
    for (int m = 0; m <= n - i; ++m) total += binomial(n - i, m) * multinomial(m, i, k - 1);
  return total;
}

}  // namespace multicomp
