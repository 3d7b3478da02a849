#include "multicomp/restricted.hpp"

#include <string>

#include "multicomp/counting.hpp"
#include "multicomp/errors.hpp"

namespace multicomp {

namespace {

bool value_allowed(int value, Restriction r) {
  switch (r) {
    case Restriction::none:
      return true;
    case Restriction::one_two:
      return value == 1 || value == 2;
    case Restriction::odd:
      return value % 2 == 1;
    case Restriction::no_ones:
      return value != 1;
  }
  return false;
}

}  // namespace

std::string_view restriction_name(Restriction r) {
  switch (r) {
    case Restriction::none:
      return "none";
    case Restriction::one_two:
      return "one_two";
    case Restriction::odd:
      return "odd";
    case Restriction::no_ones:
      return "no_ones";
  }
  return "?";
}

Restriction restriction_from_name(std::string_view name) {
  if (name == "none") return Restriction::none;
  if (name == "one_two" || name == "one-two") return Restriction::one_two;
  if (name == "odd") return Restriction::odd;
  if (name == "no_ones" || name == "no-ones") return Restriction::no_ones;
  throw DomainError("unknown restriction '" + std::string(name) + "'");
}

bool satisfies(const ColoredComposition& c, Restriction r) {
  for (const Part& p : c.parts())
    if (!value_allowed(p.value, r)) return false;
  return true;
}

bool satisfies(const ZeroComposition& z, Restriction r) {
  for (int t : z.terms())
    if (t != 0 && !value_allowed(t, r)) return false;
  return true;
}

RestrictedStream enumerate_restricted(int k, int n, Restriction r) { return RestrictedStream(k, n, r); }

BigInt count_restricted(int k, int n, Restriction r) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (n < 1) throw DomainError("n must be >= 1");
  if (r == Restriction::none) return count_total(k, n);

  BigInt prev;  // c(n-2)
  BigInt cur;   // c(n-1)
  int start = 2;
  switch (r) {
    case Restriction::one_two:
      prev = 1, cur = k + 1;
      break;
    case Restriction::odd:
      prev = 1, cur = k;
      break;
    case Restriction::no_ones:
      if (n == 1) return 0;
      prev = 1, cur = 1, start = 3;
      break;
    case Restriction::none:
      break;
  }
  if (n < start) return prev;
  for (int m = start + 1; m <= n; ++m) {
    BigInt next;
    switch (r) {
      case Restriction::one_two:
        next = k * cur + k * prev;
        break;
      case Restriction::odd:
        next = k * cur + prev;
        break;
      default:
        next = cur + k * prev;
        break;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace multicomp
