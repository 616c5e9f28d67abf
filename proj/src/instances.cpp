#include "supertrop/instances.hpp"

#include <stdexcept>

namespace supertrop {

Semiring<int> prime_field(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  Semiring<int> s;
  s.name = "F" + std::to_string(p);
  s.zero = 0;
  s.one = 1;
  s.add = [p](int a, int b) { return (a + b) % p; };
  s.mul = [p](int a, int b) { return (a * b) % p; };
  s.show = [](int a) { return std::to_string(a); };
  for (int i = 0; i < p; ++i) s.elements.push_back(i);
  return s;
}

Semiring<int> boolean_semiring() {
  Semiring<int> s;
  s.name = "B";
  s.zero = 0;
  s.one = 1;
  s.add = [](int a, int b) { return std::max(a, b); };
  s.mul = [](int a, int b) { return std::min(a, b); };
  s.show = [](int a) { return std::to_string(a); };
  s.elements = {0, 1};
  return s;
}

MValuation<int, int> trivial_valuation(int p) {
  MValuation<int, int> v;
  v.name = "triv_F" + std::to_string(p);
  v.domain = prime_field(p);
  v.target = boolean_semiring();
  v.map = [](int a) { return a == 0 ? 0 : 1; };
  v.support_description = "{0}";
  v.sv_oracle = [](int a, int b) { return a == b; };
  v.sv_representative = [](int a) { return a; };
  return v;
}

Semiring<Integer> integers() {
  Semiring<Integer> s;
  s.name = "Z";
  s.zero = 0;
  s.one = 1;
  s.add = [](const Integer& a, const Integer& b) { return Integer(a + b); };
  s.mul = [](const Integer& a, const Integer& b) { return Integer(a * b); };
  s.show = [](const Integer& a) { return to_string(a); };
  for (long x : {0, 1, -1, 2, 3, -2, 4, 6, 12, -8}) s.landmarks.emplace_back(x);
  s.sample = [](Rng& rng) {
    Integer x(std::uniform_int_distribution<long>(-1000, 1000)(rng));
    x <<= std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? std::uniform_int_distribution<unsigned>(0, 12)(rng) : 0u;
    return x;
  };
  return s;
}

Semiring<Integer> integer_window(long n) {
  auto s = integers();
  s.name = "Z[-" + std::to_string(n) + "," + std::to_string(n) + "]";
  s.elements.clear();
  for (long x = -n; x <= n; ++x) s.elements.emplace_back(x);
  return s;
}

Semiring<Rational> rationals() {
  Semiring<Rational> s;
  s.name = "Q";
  s.zero = 0;
  s.one = 1;
  s.add = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  s.mul = [](const Rational& a, const Rational& b) { return Rational(a * b); };
  s.show = [](const Rational& a) { return to_string(a); };
  s.landmarks = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(1, 9), Rational(-3, 4)};
  s.sample = [](Rng& rng) {
    Rational q(std::uniform_int_distribution<long>(-200, 200)(rng), std::uniform_int_distribution<long>(1, 200)(rng));
    q.canonicalize();
    return q;
  };
  return s;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long ord_p(const Integer& n, long p) {
  if (n == 0) throw std::domain_error("ord of 0");
  Integer m = abs(n);
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++k;
  }
  return k;
}

long ord_p(const Rational& q, long p) { return ord_p(Integer(q.get_num()), p) - ord_p(Integer(q.get_den()), p); }

namespace {

template <class N>
MValuation<N, Theta> padic_over(Semiring<N> domain, long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  MValuation<N, Theta> v;
  v.name = "v" + std::to_string(p);
  v.domain = std::move(domain);
  v.target = theta_semiring();
  v.map = [p](const N& a) { return a == 0 ? Theta::bottom() : Theta(ord_p(a, p)); };
  v.support_description = "{0}";
  // a ~ b iff b - a has strictly larger p-order than a
  v.sv_oracle = [p](const N& a, const N& b) {
    if (a == 0 || b == 0) return a == b;
    N d = a - b;
    return d == 0 || ord_p(d, p) > ord_p(a, p);
  };
  return v;
}

}  // namespace

MValuation<Integer, Theta> padic_valuation(long p) {
  auto v = padic_over(integers(), p);
  // class representative p^k·r with r the leading p-adic digit
  v.sv_representative = [p](const Integer& a) -> Integer {
    if (a == 0) return a;
    long k = ord_p(a, p);
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    Integer u = a / pk;
    Integer r = u % p;
    if (r < 0) r += p;
    return pk * r;
  };
  v.lift = [p](const Theta& m) -> std::optional<Integer> {
    if (m.is_bottom()) return Integer(0);
    const Rational& e = m.exponent();
    if (e.get_den() != 1 || e < 0) return std::nullopt;
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), e.get_num().get_ui());
    return pk;
  };
  return v;
}

MValuation<Rational, Theta> padic_valuation_q(long p) {
  auto v = padic_over(rationals(), p);
  v.lift = [p](const Theta& m) -> std::optional<Rational> {
    if (m.is_bottom()) return Rational(0);
    Rational e = m.exponent();
    if (e.get_den() != 1) return std::nullopt;
    Integer pk;
    long k = e.get_num().get_si();
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(Integer(1), pk) : Rational(pk);
  };
  return v;
}

MValuation<Integer, Theta> padic_valuation_window(long p, long n) {
  auto v = padic_valuation(p);
  v.domain = integer_window(n);
  return v;
}

Semiring<Rational> nonnegative_rationals() {
  auto s = rationals();
  s.name = "Q>=0";
  s.landmarks = {Rational(0), Rational(1), Rational(2), Rational(3), Rational(1, 2)};
  s.sample = [](Rng& rng) {
    Rational q(std::uniform_int_distribution<long>(0, 50)(rng), std::uniform_int_distribution<long>(1, 50)(rng));
    q.canonicalize();
    return q;
  };
  return s;
}

Semiring<Rational> max_times_rationals() {
  Semiring<Rational> s;
  s.name = "T(Q>0)";
  s.zero = 0;
  s.one = 1;
  s.add = [](const Rational& a, const Rational& b) { return a < b ? b : a; };
  s.mul = [](const Rational& a, const Rational& b) { return Rational(a * b); };
  s.show = [](const Rational& a) { return to_string(a); };
  s.landmarks = {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(1, 3)};
  s.sample = [](Rng& rng) {
    Rational q(std::uniform_int_distribution<long>(0, 50)(rng), std::uniform_int_distribution<long>(1, 50)(rng));
    q.canonicalize();
    return q;
  };
  return s;
}

MValuation<Rational, Rational> reciprocal_valuation() {
  MValuation<Rational, Rational> v;
  v.name = "reciprocal";
  v.domain = nonnegative_rationals();
  v.target = max_times_rationals();
  v.map = [](const Rational& a) { return a == 0 ? Rational(0) : Rational(1 / a); };
  v.support_description = "{0}";
  return v;
}

std::string to_string(const LexPair& x) { return "(" + to_string(x.a) + "," + to_string(x.b) + ")"; }

namespace {

LexPair lex(long a, long b) { return {Rational(a), Rational(b)}; }

Rational small_rational(Rng& rng, long bound) {
  Rational q(std::uniform_int_distribution<long>(-bound * 2, bound * 2)(rng), 2);
  q.canonicalize();
  return q;
}

using OptLex = std::optional<LexPair>;

std::string show_opt(const OptLex& x) { return x ? to_string(*x) : "0"; }

Semiring<OptLex> lex_semiring_base() {
  Semiring<OptLex> s;
  s.zero = std::nullopt;
  s.one = lex(1, 0);
  s.add = [](const OptLex& x, const OptLex& y) {
    if (!x) return y;
    if (!y) return x;
    return *x < *y ? y : x;
  };
  s.mul = [](const OptLex& x, const OptLex& y) -> OptLex {
    if (!x || !y) return std::nullopt;
    return LexPair{Rational(x->a * y->a), Rational(x->b + y->b)};
  };
  s.show = show_opt;
  return s;
}

}  // namespace

Monoid<LexPair> lex_group() {
  Monoid<LexPair> g;
  g.name = "Q>0 x Q lex";
  g.unit = lex(1, 0);
  g.mul = [](const LexPair& x, const LexPair& y) { return LexPair{Rational(x.a * y.a), Rational(x.b + y.b)}; };
  g.less = [](const LexPair& x, const LexPair& y) { return x < y; };
  g.show = [](const LexPair& x) { return to_string(x); };
  g.landmarks = {lex(1, 0), lex(2, 0), lex(1, 5), lex(1, -1), {Rational(1, 2), Rational(3)}};
  g.sample = [](Rng& rng) {
    static const Rational as[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(1), Rational(2), Rational(3)};
    return LexPair{as[std::uniform_int_distribution<int>(0, 5)(rng)], small_rational(rng, 5)};
  };
  return g;
}

Semiring<OptLex> convex_domain() {
  auto s = lex_semiring_base();
  s.name = "H u a";
  s.landmarks = {std::nullopt, lex(1, 0), lex(2, 0), lex(1, 5), lex(3, -1), lex(1, -2)};
  s.sample = [](Rng& rng) -> OptLex {
    static const Rational as[] = {Rational(1), Rational(1), Rational(2), Rational(3), Rational(5, 2)};
    if (std::uniform_int_distribution<int>(0, 7)(rng) == 0) return std::nullopt;
    return LexPair{as[std::uniform_int_distribution<int>(0, 4)(rng)], small_rational(rng, 5)};
  };
  return s;
}

Semiring<OptLex> convex_target() {
  auto s = lex_semiring_base();
  s.name = "H u 0";
  s.landmarks = {std::nullopt, lex(1, 0), lex(1, 5), lex(1, -2)};
  s.sample = [](Rng& rng) -> OptLex {
    if (std::uniform_int_distribution<int>(0, 7)(rng) == 0) return std::nullopt;
    return LexPair{Rational(1), small_rational(rng, 5)};
  };
  return s;
}

MValuation<OptLex, OptLex> convex_subgroup_valuation() {
  MValuation<OptLex, OptLex> v;
  v.name = "convex";
  v.domain = convex_domain();
  v.target = convex_target();
  v.map = [](const OptLex& x) -> OptLex {
    if (x && x->a == 1) return x;
    return std::nullopt;
  };
  v.support_description = "{x > H} u {0}";
  return v;
}

MValuation<PuiseuxSeries, Theta> puiseux_valuation() {
  MValuation<PuiseuxSeries, Theta> v;
  v.name = "v";
  v.domain = puiseux_ring<Rational>();
  v.target = theta_semiring();
  v.map = [](const PuiseuxSeries& a) { return a.is_zero() ? Theta::bottom() : Theta(*a.ord()); };
  v.support_description = "{0}";
  v.sv_oracle = [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.leading_term() == b.leading_term(); };
  v.sv_representative = [](const PuiseuxSeries& a) { return a.leading_term(); };
  v.lift = [](const Theta& m) -> std::optional<PuiseuxSeries> {
    if (m.is_bottom()) return PuiseuxSeries();
    return PuiseuxSeries::t(m.exponent());
  };
  return v;
}

Supervaluation<PuiseuxSeries, STElement<PuiseuxSeries, Theta>> leading_term_superval() {
  return initial_very_strong(puiseux_valuation()).phi;
}

Supervaluation<PuiseuxSeries, STElement<Theta, Theta>> leading_power_superval() {
  return hat_v(puiseux_valuation());
}

std::string to_string(const PuiseuxFraction& a) { return "(" + a.num.str() + ") / (" + a.den.str() + ")"; }

PuiseuxFraction random_unit_fraction(Rng& rng) {
  PuiseuxSeries q = random_series<Rational>(rng);
  PuiseuxSeries m;
  for (int i = std::uniform_int_distribution<int>(0, 2)(rng); i > 0; --i) {
    Rational e(std::uniform_int_distribution<long>(1, 6)(rng), std::uniform_int_distribution<long>(1, 3)(rng));
    e.canonicalize();
    m = m + PuiseuxSeries(FieldTraits<Rational>::random(rng), e);
  }
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return {q * (PuiseuxSeries(1) + m), q};
    case 1:
      return {q * (PuiseuxSeries(FieldTraits<Rational>::random(rng), Rational(0)) + m), q};
    default:
      return {random_series<Rational>(rng), q};
  }
}

UnitVerdict classify_unit(const PuiseuxFraction& a, long order) {
  if (a.num.is_zero() || a.den.is_zero()) throw AlgebraError("not invertible: " + to_string(a));
  const Rational op = *a.num.ord(), oq = *a.den.ord();
  const Rational gap = abs(op - oq);
  const Rational target(order);
  auto ratio = [&](const PuiseuxSeries& x, const PuiseuxSeries& y) {
    return (x * y.truncated_inverse(Rational(target + gap + 1))).truncate(target);
  };
  UnitVerdict u{};
  u.leading_one = a.num.leading_term() == a.den.leading_term();
  PuiseuxSeries s = ratio(a.num, a.den);
  PuiseuxSeries rest = s - PuiseuxSeries(1);
  u.expansion_one = rest.is_zero() || *rest.ord() > 0;
  PuiseuxSeries diff = a.num - a.den;
  u.close_to_one = diff.is_zero() || *diff.ord() > oq;
  u.valuation_unit = op == oq;
  PuiseuxSeries s_inv = ratio(a.den, a.num);
  u.ring_unit = !s.is_zero() && !s_inv.is_zero() && *s.ord() >= 0 && *s_inv.ord() >= 0;
  return u;
}

Report check_leading_unit_group(const CheckConfig& cfg, long order) {
  Report r;
  r.subject = "leading-term unit group of the Puiseux fractions";
  r.checked = {"leading term one iff expansion one", "leading term one iff a ~ 1", "ring unit iff value one"};
  Rng rng(cfg.seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    PuiseuxFraction a = random_unit_fraction(rng);
    UnitVerdict u = classify_unit(a, order);
    hits += u.leading_one;
    if (u.leading_one != u.expansion_one) r.fail("leading term one iff expansion one", {to_string(a)});
    if (u.leading_one != u.close_to_one) r.fail("leading term one iff a ~ 1", {to_string(a)});
    if (u.ring_unit != u.valuation_unit) r.fail("ring unit iff value one", {to_string(a)});
  }
  r.note_coverage(CheckMode::sampled, cfg.samples);
  r.info["equivalent_to_one"] = hits;
  r.info["truncation_order"] = order;
  return r;
}

}  // namespace supertrop
