#pragma once

#include <optional>
#include <string_view>

#include "multicomp/core.hpp"
#include "multicomp/numeric.hpp"

namespace multicomp {

// Restrictions act on the positive parts only; zeros never violate one.
enum class Restriction {
  none,
  one_two,  // every positive part is 1 or 2
  odd,      // every positive part is odd
  no_ones,  // no part equals 1
};

std::string_view restriction_name(Restriction r);
/// Accepts both "one_two" and the CLI spelling "one-two" (likewise "no-ones").
Restriction restriction_from_name(std::string_view name);

bool satisfies(const ColoredComposition& c, Restriction r);
bool satisfies(const ZeroComposition& z, Restriction r);

/// core::enumerate filtered by r, same order.
class RestrictedStream {
 public:
  RestrictedStream(int k, int n, Restriction r) : inner_(k, n), restriction_(r) {}

  std::optional<ColoredComposition> next() {
    while (auto c = inner_.next())
      if (satisfies(*c, restriction_)) return c;
    return std::nullopt;
  }

 private:
  CompositionStream inner_;
  Restriction restriction_;
};

RestrictedStream enumerate_restricted(int k, int n, Restriction r);

/// Count via the family's linear recurrence, bottom-up.
///   one_two: c(1)=1, c(2)=k+1, c(n) = k c(n-1) + k c(n-2)
///   odd:     c(1)=1, c(2)=k,   c(n) = k c(n-1) + c(n-2)
///   no_ones: c(1)=0, c(2)=c(3)=1, c(n) = c(n-1) + k c(n-2)
///   none:    (k+1)^(n-1)
BigInt count_restricted(int k, int n, Restriction r);

}  // namespace multicomp
