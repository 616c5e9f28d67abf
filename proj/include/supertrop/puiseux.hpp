#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "supertrop/rational.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

/// Prime field element; P must be prime.
template <int P>
struct Fp {
  static_assert(P > 1);
  int v = 0;

  Fp() = default;
  Fp(long x) : v(static_cast<int>(((x % P) + P) % P)) {}

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
  friend Fp operator*(Fp a, Fp b) { return Fp(static_cast<long>(a.v) * b.v); }
  Fp operator-() const { return Fp(-v); }
  Fp inverse() const {
    if (v == 0) throw std::domain_error("division by zero in F_p");
    long r = 1, b = v;
    for (int e = P - 2; e; e >>= 1, b = b * b % P)
      if (e & 1) r = r * b % P;
    return Fp(r);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator<(Fp a, Fp b) { return a.v < b.v; }
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string str(const Rational& c) { return to_string(c); }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw std::domain_error("division by zero");
    return Rational(1) / c;
  }
  static Rational random(Rng& rng) {
    long q = std::uniform_int_distribution<long>(1, 3)(rng);
    long p = 0;
    while (p == 0) p = std::uniform_int_distribution<long>(-5, 5)(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
};

template <int P>
struct FieldTraits<Fp<P>> {
  static std::string str(const Fp<P>& c) { return std::to_string(c.v); }
  static Fp<P> inverse(const Fp<P>& c) { return c.inverse(); }
  static Fp<P> random(Rng& rng) { return Fp<P>(std::uniform_int_distribution<long>(1, P - 1)(rng)); }
};

/// Finitely supported Σ c_q t^q with exact rational exponents.
template <class F>
class BasicPuiseux {
 public:
  using Terms = std::map<Rational, F>;

  BasicPuiseux() = default;
  BasicPuiseux(long c) : BasicPuiseux(F(c), Rational(0)) {}
  BasicPuiseux(const F& c, const Rational& q) {
    Rational e = q;
    e.canonicalize();
    if (!(c == F(0))) terms_.emplace(e, c);
  }
  static BasicPuiseux monomial(const F& c, const Rational& q) { return BasicPuiseux(c, q); }
  static BasicPuiseux t(const Rational& q = Rational(1)) { return BasicPuiseux(F(1), q); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Minimal exponent; nullopt for the zero series.
  std::optional<Rational> ord() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  BasicPuiseux leading_term() const {
    if (terms_.empty()) return {};
    return BasicPuiseux(terms_.begin()->second, terms_.begin()->first);
  }
  F leading_coeff() const { return terms_.empty() ? F(0) : terms_.begin()->second; }
  bool is_monomial() const { return terms_.size() == 1; }

  /// b with a·b − 1 of order > `order`; a must be nonzero.
  BasicPuiseux truncated_inverse(const Rational& order) const {
    if (terms_.empty()) throw std::domain_error("inverse of the zero series");
    const Rational q = terms_.begin()->first;
    const F cinv = FieldTraits<F>::inverse(terms_.begin()->second);
    BasicPuiseux u;
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      u.terms_.emplace(Rational(it->first - q), it->second * cinv);
    BasicPuiseux w(1), power(1);
    if (!u.is_zero()) {
      const Rational delta = *u.ord();
      Rational steps = order / delta;
      mpz_class k = steps.get_num() / steps.get_den() + 1;
      BasicPuiseux neg_u = -u;
      for (long i = 0; i < k.get_si(); ++i) {
        power = (power * neg_u).truncate(order);
        if (power.is_zero()) break;
        w = w + power;
      }
    }
    return BasicPuiseux(cinv, Rational(-q)) * w;
  }

  /// Drops terms with exponent > order.
  BasicPuiseux truncate(const Rational& order) const {
    BasicPuiseux r;
    for (const auto& [q, c] : terms_) {
      if (q > order) break;
      r.terms_.emplace(q, c);
    }
    return r;
  }

  friend BasicPuiseux operator+(const BasicPuiseux& a, const BasicPuiseux& b) {
    BasicPuiseux r = a;
    for (const auto& [q, c] : b.terms_) r.accumulate(q, c);
    return r;
  }
  BasicPuiseux operator-() const {
    BasicPuiseux r;
    for (const auto& [q, c] : terms_) r.terms_.emplace(q, -c);
    return r;
  }
  friend BasicPuiseux operator-(const BasicPuiseux& a, const BasicPuiseux& b) { return a + (-b); }
  friend BasicPuiseux operator*(const BasicPuiseux& a, const BasicPuiseux& b) {
    BasicPuiseux r;
    for (const auto& [p, c] : a.terms_)
      for (const auto& [q, d] : b.terms_) r.accumulate(Rational(p + q), c * d);
    return r;
  }
  friend bool operator==(const BasicPuiseux& a, const BasicPuiseux& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [q, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs = FieldTraits<F>::str(c);
      if (q == 0) {
        out += cs;
        continue;
      }
      if (!(c == F(1))) out += cs + "*";
      out += "t";
      if (q != 1) out += "^" + exponent_string(q);
    }
    return out;
  }

 private:
  void accumulate(const Rational& q, const F& c) {
    auto it = terms_.find(q);
    if (it == terms_.end()) {
      if (!(c == F(0))) terms_.emplace(q, c);
      return;
    }
    it->second = it->second + c;
    if (it->second == F(0)) terms_.erase(it);
  }

  Terms terms_;
};

using PuiseuxSeries = BasicPuiseux<Rational>;

/// Random nonzero series: up to `max_terms` terms, exponents p/q with q ≤ 3 in [lo, lo + 3].
template <class F>
BasicPuiseux<F> random_series(Rng& rng, int max_terms = 3, long lo = -1) {
  int n = std::uniform_int_distribution<int>(1, max_terms)(rng);
  BasicPuiseux<F> s;
  while (s.is_zero())
    for (int i = 0; i < n; ++i) {
      long den = std::uniform_int_distribution<long>(1, 3)(rng);
      long num = std::uniform_int_distribution<long>(lo * den, (lo + 3) * den)(rng);
      Rational q(num, den);
      q.canonicalize();
      s = s + BasicPuiseux<F>(FieldTraits<F>::random(rng), q);
    }
  return s;
}

/// The Puiseux ring as a semiring structure (landmarks include 0, ±1, t, 1 + t).
template <class F>
Semiring<BasicPuiseux<F>> puiseux_ring() {
  using S = BasicPuiseux<F>;
  Semiring<S> r;
  r.name = "Puiseux series";
  r.zero = S();
  r.one = S(1);
  r.add = [](const S& a, const S& b) { return a + b; };
  r.mul = [](const S& a, const S& b) { return a * b; };
  r.show = [](const S& a) { return a.str(); };
  r.landmarks = {S(), S(1), S(-1), S::t(), S(1) + S::t(), S(-1) * S::t() + S::t(Rational(2)), S::t(Rational(1, 2))};
  r.sample = [](Rng& rng) {
    if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) return S();
    return random_series<F>(rng);
  };
  return r;
}

/// Parses a series literal such as "1 + 2*t^(3/2) + -1*t^2".
PuiseuxSeries parse_series(const std::string& text);

}  // namespace supertrop
