#include "multicomp/cluster.hpp"

#include <algorithm>

#include "multicomp/errors.hpp"

namespace multicomp {

int colors_for_exclusion(int g) { return g - 1; }
int exclusion_for_colors(int k) { return k + 1; }

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  return out;
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& [state, exponent] : m) d += exponent;
  return d;
}

StatePolynomial::StatePolynomial(int q) : q_(q) {
  if (q < 1) throw DomainError("q must be >= 1");
}

StatePolynomial StatePolynomial::constant(int q, const Rational& value) {
  StatePolynomial p(q);
  p.add_term({}, value);
  return p;
}

Rational StatePolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void StatePolynomial::add_term(const Monomial& m, const Rational& value) {
  if (value == 0) return;
  for (const auto& [state, exponent] : m)
    if (state < 1 || state > q_ || exponent < 1) throw DomainError("monomial outside s(1..q)");
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void StatePolynomial::require_same_q(const StatePolynomial& other) const {
  if (other.q_ != q_) throw DomainError("state polynomials over different q");
}

StatePolynomial& StatePolynomial::operator+=(const StatePolynomial& other) {
  require_same_q(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

StatePolynomial& StatePolynomial::operator-=(const StatePolynomial& other) {
  require_same_q(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

StatePolynomial operator*(const StatePolynomial& a, const StatePolynomial& b) {
  a.require_same_q(b);
  StatePolynomial out(a.q_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

StatePolynomial operator*(const Rational& scalar, const StatePolynomial& a) {
  StatePolynomial out(a.q_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, scalar * c);
  return out;
}

std::string render(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [state, exponent] : m) {
    if (!out.empty()) out += '*';
    out += "s(" + std::to_string(state) + ")";
    if (exponent != 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

std::string render(const StatePolynomial& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) out += to_string(c) + " " + render(m) + "\n";
  return out;
}

GComposition::GComposition(int g, std::vector<int> parts) : g_(g), parts_(std::move(parts)) {
  if (g_ < 2) throw DomainError("g must be >= 2");
  // Same invariants as the zero form with k = g - 1.
  (void)ZeroComposition(colors_for_exclusion(g_), parts_);
}

int GComposition::sum() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

ZeroComposition to_zero_composition(const GComposition& c) {
  return ZeroComposition(colors_for_exclusion(c.g()), c.parts());
}

GComposition to_g_composition(const ZeroComposition& z) {
  return GComposition(exclusion_for_colors(z.k()), z.terms());
}

std::vector<GComposition> g_compositions(int g, int n) {
  if (g < 2) throw DomainError("g must be >= 2");
  std::vector<GComposition> out;
  CompositionStream stream(colors_for_exclusion(g), n);
  while (auto c = stream.next()) out.push_back(to_g_composition(to_zero_form(*c)));
  return out;
}

namespace {

// Fills chosen[depth..n-1] with k values <= upper, non-increasing.
void nested_sum(int g, int n, int depth, int upper, std::vector<int>& chosen, StatePolynomial& out) {
  if (depth == n) {
    Monomial m;
    m.reserve(chosen.size());
    // k_j + g(n-j) decreases in j; store ascending by state.
    for (int j = n; j >= 1; --j) m.emplace_back(chosen[static_cast<std::size_t>(j - 1)] + g * (n - j), 1);
    out.add_term(m, 1);
    return;
  }
  for (int k = 1; k <= upper; ++k) {
    chosen[static_cast<std::size_t>(depth)] = k;
    nested_sum(g, n, depth + 1, k, chosen, out);
  }
}

}  // namespace

StatePolynomial partition_function(int g, int n, int q) {
  if (g < 2) throw DomainError("g must be >= 2");
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) return StatePolynomial::constant(q, 1);
  StatePolynomial out(q);
  std::vector<int> chosen(static_cast<std::size_t>(n));
  nested_sum(g, n, 0, q - g * (n - 1), chosen, out);
  return out;
}

std::vector<StatePolynomial> cluster_coefficients(int g, int N, int q) {
  if (N < 1) throw DomainError("N must be >= 1");
  std::vector<StatePolynomial> z;
  for (int n = 0; n <= N; ++n) z.push_back(partition_function(g, n, q));

  // log with Z(0) = 1: n b(n) = n Z(n) - sum_{j=1}^{n-1} j b(j) Z(n-j)
  std::vector<StatePolynomial> b;
  for (int n = 1; n <= N; ++n) {
    StatePolynomial acc = Rational(n) * z[static_cast<std::size_t>(n)];
    for (int j = 1; j < n; ++j)
      acc -= Rational(j) * (b[static_cast<std::size_t>(j - 1)] * z[static_cast<std::size_t>(n - j)]);
    b.push_back(Rational(1, n) * acc);
  }
  return b;
}

StatePolynomial term_for_composition(const GComposition& l, int q) {
  StatePolynomial out(q);
  const int j = static_cast<int>(l.parts().size());
  for (int k = 1; k + j - 1 <= q; ++k) {
    Monomial m;
    for (int i = j; i >= 1; --i) {
      const int exponent = l.parts()[static_cast<std::size_t>(i - 1)];
      if (exponent > 0) m.emplace_back(k + j - i, exponent);
    }
    out.add_term(m, 1);
  }
  return out;
}

std::map<GComposition, Rational> decompose(const StatePolynomial& b, int g) {
  std::map<GComposition, Rational> out;
  StatePolynomial residual = b;
  while (!residual.is_zero()) {
    const auto it = std::find_if(residual.terms().begin(), residual.terms().end(),
                                 [](const auto& term) { return !term.first.empty() && term.first.front().first == 1; });
    if (it == residual.terms().end())
      throw VerificationError("residual has no monomial anchored at s(1): " + render(residual));
    const Monomial m = it->first;
    const int top = m.back().first;
    std::vector<int> parts(static_cast<std::size_t>(top), 0);
    for (const auto& [state, exponent] : m) parts[static_cast<std::size_t>(top - state)] = exponent;
    const Rational coefficient = it->second;
    GComposition key = [&] {
      try {
        return GComposition(g, parts);
      } catch (const InvariantError& e) {
        throw VerificationError(std::string("monomial ") + render(m) + " is not a g-composition: " + e.what());
      }
    }();
    residual -= coefficient * term_for_composition(key, residual.q());
    if (!out.emplace(std::move(key), coefficient).second)
      throw VerificationError("composition peeled twice from " + render(m));
  }
  return out;
}

std::map<GComposition, Rational> decompose_b(int g, int n, int q) {
  if (q < g * n) throw DomainError("decompose_b needs q >= g n");
  return decompose(cluster_coefficients(g, n, q).back(), g);
}

Rational closed_form_cg(const GComposition& l) {
  const int g = l.g();
  const auto& parts = l.parts();
  const int j = static_cast<int>(parts.size());
  auto part = [&](int i) { return i <= j ? parts[static_cast<std::size_t>(i - 1)] : 0; };

  int lead_sum = 0;
  BigInt lead_den = 1;
  for (int i = 1; i <= g - 1; ++i) {
    lead_sum += part(i);
    lead_den *= factorial(part(i));
  }
  Rational value(factorial(lead_sum - 1), lead_den);
  for (int i = 1; i <= j - g + 1; ++i) {
    int window = 0;
    for (int t = i; t <= i + g - 1; ++t) window += part(t);
    value *= Rational(binomial(window - 1, part(i + g - 1)));
  }
  return value;
}

IdentitySum identity_sum(int g, int n) {
  IdentitySum result;
  for (const GComposition& l : g_compositions(g, n)) result.lhs += closed_form_cg(l);
  result.rhs = Rational(binomial(static_cast<long long>(g) * n, n), BigInt(g * n));
  return result;
}

}  // namespace multicomp
