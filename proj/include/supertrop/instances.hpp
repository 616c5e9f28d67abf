#pragma once

#include <string>
#include <vector>

#include "supertrop/puiseux.hpp"
#include "supertrop/superval.hpp"
#include "supertrop/theta.hpp"
#include "supertrop/valuation.hpp"

namespace supertrop {

// ---- finite rings and the trivial valuation ----

/// 𝔽_p on {0..p-1}; p must be prime.
Semiring<int> prime_field(int p);
/// {0, 1} with max and min.
Semiring<int> boolean_semiring();
/// v(0) = 0, v(a) = 1 otherwise.
MValuation<int, int> trivial_valuation(int p);

// ---- integers, rationals, p-adic ----

Semiring<Integer> integers();
/// ℤ restricted to [-n, n] for exhaustive scans; sums may leave the window.
Semiring<Integer> integer_window(long n);
Semiring<Rational> rationals();

bool is_prime(long p);
/// Exponent of p in n ≠ 0.
long ord_p(const Integer& n, long p);
long ord_p(const Rational& q, long p);

MValuation<Integer, Theta> padic_valuation(long p);
MValuation<Rational, Theta> padic_valuation_q(long p);
/// The same valuation on an exhaustive window [-n, n].
MValuation<Integer, Theta> padic_valuation_window(long p, long n);

// ---- ℚ≥0 with v(a) = 1/a ----

Semiring<Rational> nonnegative_rationals();
/// T(ℚ>0): max and ordinary product.
Semiring<Rational> max_times_rationals();
MValuation<Rational, Rational> reciprocal_valuation();

// ---- the convex subgroup example ----

/// Element (a, b) of ℚ>0 × ℚ with product (a a', b + b') and lexicographic order.
struct LexPair {
  Rational a{1};
  Rational b{0};
  friend bool operator==(const LexPair&, const LexPair&) = default;
  friend bool operator<(const LexPair& x, const LexPair& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }
};
std::string to_string(const LexPair& x);

Monoid<LexPair> lex_group();
/// M = H ∪ 𝔞 inside Γ ∪ {0} where H = {1}×ℚ and 𝔞 = {x > H} ∪ {0}.
Semiring<std::optional<LexPair>> convex_domain();
/// H ∪ {0}.
Semiring<std::optional<LexPair>> convex_target();
MValuation<std::optional<LexPair>, std::optional<LexPair>> convex_subgroup_valuation();

// ---- Puiseux series ----

/// v(a) = ϑ^{ord a}, with the leading-term decision procedure for ~_v.
MValuation<PuiseuxSeries, Theta> puiseux_valuation();
/// φ̄_v: a ↦ ℓ(a) in STR(monomials, M\{0}, v).
Supervaluation<PuiseuxSeries, STElement<PuiseuxSeries, Theta>> leading_term_superval();
/// v̂: a ↦ leading t-power in D(M).
Supervaluation<PuiseuxSeries, STElement<Theta, Theta>> leading_power_superval();

/// a = num / den in the fraction field of the Puiseux ring.
struct PuiseuxFraction {
  PuiseuxSeries num;
  PuiseuxSeries den;
};
std::string to_string(const PuiseuxFraction& a);
PuiseuxFraction random_unit_fraction(Rng& rng);

/// For sampled units a = p/q: (ℓ(a) = 1) ⇔ (a ∈ 1 + 𝔪_v by truncated expansion at `order`) ⇔ a ~_v 1,
/// and a ∈ 𝔬_v^* ⇔ v(a) = 1.
Report check_leading_unit_group(const CheckConfig& cfg = {}, long order = 6);
/// Per-fraction verdicts behind the check above.
struct UnitVerdict {
  bool leading_one;
  bool expansion_one;
  bool close_to_one;
  bool valuation_unit;
  bool ring_unit;
};
UnitVerdict classify_unit(const PuiseuxFraction& a, long order = 6);

// ---- k[x] with the degree valuation ----

template <class F>
struct UnivariatePoly {
  std::vector<F> c;  // low to high, no trailing zeros

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == F(0)) c.pop_back();
  }
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;
  friend UnivariatePoly operator+(const UnivariatePoly& f, const UnivariatePoly& g) {
    UnivariatePoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), F(0));
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = r.c[i] + f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = r.c[i] + g.c[i];
    r.trim();
    return r;
  }
  friend UnivariatePoly operator*(const UnivariatePoly& f, const UnivariatePoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    UnivariatePoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, F(0));
    for (std::size_t i = 0; i < f.c.size(); ++i)
      for (std::size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    r.trim();
    return r;
  }
  std::string str() const {
    if (c.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c[i] == F(0)) continue;
      if (!out.empty()) out += " + ";
      std::string k = FieldTraits<F>::str(c[i]);
      if (i == 0) out += k;
      else out += (c[i] == F(1) ? std::string() : k + "*") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }
};

/// All polynomials over 𝔽_P of degree ≤ n, zero included.
template <int P>
std::vector<UnivariatePoly<Fp<P>>> polys_up_to(int n) {
  std::vector<UnivariatePoly<Fp<P>>> out;
  long total = 1;
  for (int i = 0; i <= n; ++i) total *= P;
  for (long code = 0; code < total; ++code) {
    UnivariatePoly<Fp<P>> f;
    for (long k = code; f.c.size() < static_cast<std::size_t>(n + 1); k /= P) f.c.push_back(Fp<P>(k % P));
    f.trim();
    out.push_back(f);
  }
  return out;
}

/// k[x] truncated to degree ≤ n for enumeration; products may exceed the window.
template <int P>
Semiring<UnivariatePoly<Fp<P>>> polynomial_ring_fp(int n) {
  using Q = UnivariatePoly<Fp<P>>;
  Semiring<Q> r;
  r.name = "F" + std::to_string(P) + "[x]";
  r.zero = Q{};
  r.one = Q{{Fp<P>(1)}};
  r.add = [](const Q& f, const Q& g) { return f + g; };
  r.mul = [](const Q& f, const Q& g) { return f * g; };
  r.show = [](const Q& f) { return f.str(); };
  r.elements = polys_up_to<P>(n);
  return r;
}

/// v(f) = ϑ^{-deg f}, v(0) = 0: degree grows with the value.
template <int P>
MValuation<UnivariatePoly<Fp<P>>, Theta> degree_valuation(int n) {
  using Q = UnivariatePoly<Fp<P>>;
  MValuation<Q, Theta> v;
  v.name = "deg";
  v.domain = polynomial_ring_fp<P>(n);
  v.target = theta_semiring();
  v.map = [](const Q& f) { return f.is_zero() ? Theta::bottom() : Theta(static_cast<long>(-f.degree())); };
  v.support_description = "{0}";
  return v;
}

}  // namespace supertrop
