#include "multicomp/series.hpp"

#include <algorithm>

#include "multicomp/errors.hpp"

namespace multicomp {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::size_t order)
    : coefficients_(std::move(coefficients)) {
  if (order == 0) throw DomainError("series order must be >= 1");
  coefficients_.resize(order);
}

PowerSeries PowerSeries::from_integers(const std::vector<BigInt>& coefficients, std::size_t order) {
  std::vector<Rational> rational(coefficients.begin(), coefficients.end());
  return PowerSeries(std::move(rational), order);
}

bool PowerSeries::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
}

std::vector<BigInt> PowerSeries::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(coefficients_.size());
  for (const Rational& c : coefficients_) {
    if (boost::multiprecision::denominator(c) != 1) throw DomainError("coefficient is not an integer");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < order; ++i) c[i] = a[i] + b[i];
  return PowerSeries(std::move(c), order);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < order; ++i) c[i] = a[i] - b[i];
  return PowerSeries(std::move(c), order);
}

PowerSeries operator*(const Rational& scalar, const PowerSeries& a) {
  std::vector<Rational> c(a.coefficients());
  for (Rational& v : c) v *= scalar;
  return PowerSeries(std::move(c), a.order());
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) c[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(c), order);
}

PowerSeries divide(const PowerSeries& num, const PowerSeries& den) {
  if (den[0] == 0) throw DomainError("denominator has zero constant term");
  const std::size_t order = std::min(num.order(), den.order());
  std::vector<Rational> s(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = num[n];
    for (std::size_t j = 1; j <= n; ++j) acc -= den[j] * s[n - j];
    s[n] = acc / den[0];
  }
  return PowerSeries(std::move(s), order);
}

PowerSeries expand_rational(const std::vector<BigInt>& numerator, const std::vector<BigInt>& denominator,
                            std::size_t order) {
  if (denominator.empty() || denominator.front() == 0)
    throw DomainError("denominator has zero constant term");
  return divide(PowerSeries::from_integers(numerator, order), PowerSeries::from_integers(denominator, order));
}

PowerSeries derivative(const PowerSeries& a) {
  const std::size_t order = std::max<std::size_t>(a.order() - 1, 1);
  std::vector<Rational> d(order);
  for (std::size_t i = 1; i < a.order(); ++i) d[i - 1] = a[i] * static_cast<long long>(i);
  return PowerSeries(std::move(d), order);
}

PowerSeries log(const PowerSeries& a) {
  if (a[0] != 1) throw DomainError("log needs constant term 1");
  std::vector<Rational> l(a.order());
  for (std::size_t n = 1; n < a.order(); ++n) {
    Rational acc = a[n] * static_cast<long long>(n);
    for (std::size_t j = 1; j < n; ++j) acc -= l[j] * static_cast<long long>(j) * a[n - j];
    l[n] = acc / static_cast<long long>(n);
  }
  return PowerSeries(std::move(l), a.order());
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::total:
      return "total";
    case Family::one_two:
      return "one_two";
    case Family::odd:
      return "odd";
    case Family::no_ones:
      return "no_ones";
  }
  return "?";
}

PowerSeries total_gf_colored_parts(int k, std::size_t order) {
  // x + x^2 + ... truncated at the requested order is exact to that order.
  std::vector<Rational> tail(order, Rational(1));
  tail[0] = 0;
  const PowerSeries parts(std::move(tail), order);
  const PowerSeries one({Rational(1)}, order);
  return divide(parts, one - Rational(k) * parts);
}

PowerSeries total_gf_closed(int k, std::size_t order) { return expand_rational({0, 1}, {1, -(k + 1)}, order); }

PowerSeries gf_coefficients(Family family, int k, std::size_t order) {
  if (k < 1) throw DomainError("k must be >= 1");
  switch (family) {
    case Family::total: {
      PowerSeries closed = total_gf_closed(k, order);
      if (closed != total_gf_colored_parts(k, order))
        throw VerificationError("colored-parts and closed forms of the total GF disagree");
      return closed;
    }
    case Family::one_two:
      return expand_rational({0, 1, 1}, {1, -k, -k}, order);
    case Family::odd:
      return expand_rational({0, 1}, {1, -k, -1}, order);
    case Family::no_ones:
      return expand_rational({0, 0, 1}, {1, -1, -k}, order);
  }
  throw DomainError("unknown family");
}

}  // namespace multicomp
