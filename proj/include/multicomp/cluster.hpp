#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multicomp/core.hpp"
#include "multicomp/numeric.hpp"

namespace multicomp {

// Exclusion statistics use the g-indexing g = k + 1: a g-composition allows up
// to g-2 zeros between positive parts. The two conversions below are the only
// place that offset appears.
int colors_for_exclusion(int g);
int exclusion_for_colors(int k);

/// Product of Boltzmann factors s(state)^exponent, sorted by state, exponents
/// positive. The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<int, int>>;

Monomial multiply(const Monomial& a, const Monomial& b);
int degree(const Monomial& m);

/// Sparse polynomial with exact rational coefficients in the commuting
/// variables s(1) .. s(q). Zero coefficients are never stored.
class StatePolynomial {
 public:
  explicit StatePolynomial(int q);
  static StatePolynomial constant(int q, const Rational& value);

  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Adds value * m. States must lie in 1..q.
  void add_term(const Monomial& m, const Rational& value);

  StatePolynomial& operator+=(const StatePolynomial& other);
  StatePolynomial& operator-=(const StatePolynomial& other);
  friend StatePolynomial operator+(StatePolynomial a, const StatePolynomial& b) { return a += b; }
  friend StatePolynomial operator-(StatePolynomial a, const StatePolynomial& b) { return a -= b; }
  friend StatePolynomial operator*(const StatePolynomial& a, const StatePolynomial& b);
  friend StatePolynomial operator*(const Rational& scalar, const StatePolynomial& a);

  friend bool operator==(const StatePolynomial&, const StatePolynomial&) = default;

 private:
  void require_same_q(const StatePolynomial& other) const;

  int q_;
  std::map<Monomial, Rational> terms_;
};

/// "s(1)^2*s(3)", or "1" for the empty monomial.
std::string render(const Monomial& m);
/// One "coefficient monomial" term per line, in monomial order.
std::string render(const StatePolynomial& p);

/// Ordered parts, zeros allowed strictly inside, zero runs at most g-2.
class GComposition {
 public:
  GComposition(int g, std::vector<int> parts);

  [[nodiscard]] int g() const noexcept { return g_; }
  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int sum() const noexcept;

  friend auto operator<=>(const GComposition&, const GComposition&) = default;

 private:
  int g_;
  std::vector<int> parts_;
};

ZeroComposition to_zero_composition(const GComposition& c);
GComposition to_g_composition(const ZeroComposition& z);

/// All g-compositions of n, in core enumeration order.
std::vector<GComposition> g_compositions(int g, int n);

/// n-particle partition function with g-exclusion on q states:
///   sum over 1 <= k_n <= ... <= k_1 <= q - g(n-1) of prod_j s(k_j + g(n-j)).
/// Chosen states differ pairwise by at least g. Z(0) is the constant 1; the
/// sum is empty (zero) when q < g(n-1) + 1.
StatePolynomial partition_function(int g, int n, int q);

/// b(1) .. b(N) from log(sum_n Z(n) z^n) = sum_n b(n) z^n, truncated at z^N.
std::vector<StatePolynomial> cluster_coefficients(int g, int N, int q);

/// sum_{k=1}^{q} prod_{i=1}^{j} s(k + j - i)^{l_i}, summands that need a
/// state above q dropped. Zero parts leave a gap of unused states.
StatePolynomial term_for_composition(const GComposition& l, int q);

/// Expresses b(n) as sum_l coeff(l) * term_for_composition(l, q) by peeling
/// off monomials that start at state 1. Requires q >= g n (DomainError);
/// a nonzero residual throws VerificationError.
std::map<GComposition, Rational> decompose_b(int g, int n, int q);
/// Same, from an already computed b(n).
std::map<GComposition, Rational> decompose(const StatePolynomial& b, int g);

/// |coefficient| of term_for_composition(l) in b(n):
///   (l_1+...+l_{g-1}-1)! / (l_1!...l_{g-1}!) * prod_{i=1}^{j-g+1} binom(l_i+...+l_{i+g-1}-1, l_{i+g-1})
/// with l_i = 0 beyond the last part.
Rational closed_form_cg(const GComposition& l);

struct IdentitySum {
  Rational lhs;  // sum of closed_form_cg over all g-compositions of n
  Rational rhs;  // binom(gn, n) / (gn)
};

IdentitySum identity_sum(int g, int n);

}  // namespace multicomp
