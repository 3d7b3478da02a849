#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "multicomp/numeric.hpp"

namespace multicomp {

/// Truncated formal power series in x with exact rational coefficients.
///
/// Holds the coefficients of x^0 .. x^(order-1). The truncation order is part
/// of the value; binary operations truncate to the smaller order.
class PowerSeries {
 public:
  /// Pads with zeros or truncates `coefficients` to `order` terms.
  PowerSeries(std::vector<Rational> coefficients, std::size_t order);

  static PowerSeries from_integers(const std::vector<BigInt>& coefficients, std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return coefficients_.size(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }

  /// True when every coefficient has denominator 1.
  [[nodiscard]] bool is_integral() const;
  /// Coefficients as integers; throws DomainError if some is not integral.
  [[nodiscard]] std::vector<BigInt> integer_coefficients() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& scalar, const PowerSeries& a);

/// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return multiply(a, b); }

/// s with den * s = num; throws DomainError if den[0] == 0.
PowerSeries divide(const PowerSeries& num, const PowerSeries& den);

/// Integer polynomials num / den expanded to `order` terms.
PowerSeries expand_rational(const std::vector<BigInt>& numerator, const std::vector<BigInt>& denominator,
                            std::size_t order);

/// Formal derivative; the result has order - 1 terms (at least 1).
PowerSeries derivative(const PowerSeries& a);

/// L with L(0) = 0 and a L' = a', by the coefficient recurrence
/// n L_n = n a_n - sum_{j=1}^{n-1} j L_j a_{n-j}. Requires a[0] == 1.
PowerSeries log(const PowerSeries& a);

enum class Family { total, one_two, odd, no_ones };

std::string_view family_name(Family f);

/// Total count GF built from the colored-parts description:
/// (sum_{i>=1} x^i) / (1 - k sum_{i>=1} x^i).
PowerSeries total_gf_colored_parts(int k, std::size_t order);
/// Total count GF in closed form x / (1 - (k+1) x).
PowerSeries total_gf_closed(int k, std::size_t order);

/// Counting GF of the family, coefficient n = count for sum n (coefficient 0
/// is 0). For Family::total both forms above are computed and must agree;
/// a mismatch throws VerificationError.
///   one_two  (x + x^2) / (1 - k(x + x^2))
///   odd      x / (1 - kx - x^2)
///   no_ones  x^2 / (1 - x - kx^2)
PowerSeries gf_coefficients(Family family, int k, std::size_t order);

}  // namespace multicomp
