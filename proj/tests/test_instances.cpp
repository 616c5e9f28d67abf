#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "supertrop/equiv_lattice.hpp"
#include "supertrop/instances.hpp"

using namespace supertrop;

namespace {

using S = PuiseuxSeries;

S t(long p, long q = 1) { return S::t(Rational(p, q)); }

// Σ c t^q over a raw exponent map, for building expected values without the library's +.
S series(std::initializer_list<std::pair<Rational, Rational>> terms) {
  S out;
  std::map<Rational, Rational> m;
  for (const auto& [q, c] : terms) m[q] += c;
  for (const auto& [q, c] : m) out = out + S(c, q);
  return out;
}

}  // namespace

TEST_CASE("Puiseux arithmetic") {
  S a = S(2) * t(1) + t(2);
  CHECK(a + S(-2) * t(1) == t(2));
  CHECK(a.leading_term() == S(2) * t(1));
  CHECK(*a.ord() == 1);
  CHECK(!S().ord());
  CHECK(S().leading_term().is_zero());

  S b = S(1) + t(1, 2);
  S sq = b * b;
  S expected = series({{0, 1}, {Rational(1, 2), 2}, {1, 1}});
  CHECK(sq == expected);
  for (Rational order : {Rational(0), Rational(1, 2), Rational(1)})
    CHECK((b * b).truncate(order) == (b.truncate(order) * b.truncate(order)).truncate(order));
  CHECK(sq.str() == "1 + 2*t^(1/2) + t");
  CHECK((-a).str() == "-2*t + -1*t^2");
  CHECK((a - a).is_zero());
}

TEST_CASE("series literals") {
  S s = parse_series("1 + 2*t^(3/2) + -1*t^2");
  CHECK(s == series({{0, 1}, {Rational(3, 2), 2}, {2, -1}}));
  CHECK(s.str() == "1 + 2*t^(3/2) + -1*t^2");
  CHECK(parse_series("t^(-1/3)") == t(-1, 3));
  CHECK(parse_series("3/4*t") == S(Rational(3, 4), Rational(1)));
  CHECK(parse_series("0").is_zero());
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    S x = random_series<Rational>(rng, 4);
    CHECK(parse_series(x.str()) == x);
  }
  CHECK_THROWS_AS(parse_series("1 + * t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series("t^(1/0)"), std::invalid_argument);
}

TEST_CASE("Puiseux ring laws and ord") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    S a = random_series<Rational>(rng), b = random_series<Rational>(rng), c = random_series<Rational>(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).leading_term() == a.leading_term() * b.leading_term());
    CHECK(*(a * b).ord() == *a.ord() + *b.ord());
    S s = a + b;
    if (!s.is_zero()) CHECK(*s.ord() >= std::min(*a.ord(), *b.ord()));
    if (*a.ord() != *b.ord()) CHECK(*s.ord() == std::min(*a.ord(), *b.ord()));
  }
  CHECK(check_semiring_axioms(puiseux_ring<Rational>()).ok());
}

TEST_CASE("truncated inverse") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    S a = random_series<Rational>(rng);
    for (long order : {2L, 5L}) {
      S r = a * a.truncated_inverse(Rational(order)) - S(1);
      CHECK((r.is_zero() || *r.ord() > order));
    }
  }
  S inv = (S(1) + t(1)).truncated_inverse(Rational(3));
  CHECK(inv == series({{0, 1}, {1, -1}, {2, 1}, {3, -1}}));
  CHECK_THROWS_AS(S().truncated_inverse(Rational(2)), std::domain_error);
}

TEST_CASE("series over F_p") {
  using F3 = Fp<3>;
  using T3 = BasicPuiseux<F3>;
  T3 x = T3(1) + T3::t();
  T3 cube = x * x * x;
  CHECK(cube == T3(1) + T3::t(Rational(3)));
  CHECK((F3(2) * F3(2)) == F3(1));
  CHECK(F3(2).inverse() == F3(2));
  CHECK(Fp<7>(3) / Fp<7>(5) * Fp<7>(5) == Fp<7>(3));
  CHECK_THROWS_AS(F3(0).inverse(), std::domain_error);
  CHECK(check_semiring_axioms(puiseux_ring<Fp<5>>()).ok());
}

TEST_CASE("Puiseux valuation and its supervaluations") {
  auto v = puiseux_valuation();
  CHECK(v(t(1, 2) + t(1)) == Theta(Rational(1, 2)));
  CHECK(v(S()) == Theta::bottom());
  CHECK(check_mvaluation(v).ok());
  CHECK(is_strong(v).ok());

  auto phibar = leading_term_superval();
  auto x = phibar(S(2) * t(1) + t(3));
  CHECK(is_tan(x));
  CHECK(tan_value(x) == S(2) * t(1));
  CHECK(phibar(S()) == phibar.target.zero);
  CHECK(check_supervaluation(phibar).ok());
  CHECK(check_supervaluation(phibar).info["kind"] == "tangible");

  auto hat = leading_power_superval();
  auto h = hat(S(2) * t(1) + t(3));
  CHECK(is_tan(h));
  CHECK(tan_value(h) == Theta(1L));
  CHECK(check_supervaluation(hat).ok());

  // both cover v
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    S a = v.domain.sample(rng);
    auto ep = phibar.target.nu(phibar(a));
    auto eh = hat.target.nu(hat(a));
    if (a.is_zero()) {
      CHECK(is_zero(ep));
      CHECK(is_zero(eh));
      continue;
    }
    CHECK(gh_value(ep) == v(a));
    CHECK(gh_value(eh) == v(a));
  }
}

TEST_CASE("p-adic valuations") {
  CHECK(padic_valuation(2)(12) == Theta(2L));
  CHECK(padic_valuation_q(3)(Rational(1, 9)) == Theta(-2L));
  CHECK(padic_valuation_q(3)(Rational(18, 5)) == Theta(2L));
  CHECK(ord_p(Rational(1, 9), 3) == -2);
  CHECK_THROWS_AS(padic_valuation(4), std::invalid_argument);
  CHECK_THROWS_AS(ord_p(Integer(0), 2), std::domain_error);

  auto v = padic_valuation_window(2, 200);
  auto r = is_strong(v);
  CHECK(r.ok());
  CHECK(r.mode == CheckMode::exhaustive);
  CHECK(r.points == 401u * 401u);
  for (long a = -200; a <= 200; a += 7)
    for (long b = -200; b <= 200; b += 3) {
      if (a == 0 || b == 0 || a + b == 0) continue;
      int oa = testing::ord2_by_division(std::abs(a)), ob = testing::ord2_by_division(std::abs(b));
      if (oa != ob) CHECK(testing::ord2_by_division(std::abs(a + b)) == std::min(oa, ob));
      CHECK(v(a + b) == Theta(long(testing::ord2_by_division(std::abs(a + b)))));
    }

  auto lift = padic_valuation(3).lift;
  CHECK(*lift(Theta(2L)) == 9);
  CHECK(!lift(Theta(-1L)));
  CHECK(*padic_valuation_q(3).lift(Theta(-2L)) == Rational(1, 9));
}

TEST_CASE("degree valuation on F_p[x]") {
  using P = UnivariatePoly<Fp<2>>;
  auto v = degree_valuation<2>(3);
  P x2_plus_1{{Fp<2>(1), Fp<2>(0), Fp<2>(1)}};
  CHECK(v(x2_plus_1) == Theta(-2L));
  CHECK(v(P{{Fp<2>(1)}}) == Theta::unit());
  CHECK(v(P{}) == Theta::bottom());
  CHECK(x2_plus_1.str() == "x^2 + 1");
  CHECK(polys_up_to<2>(3).size() == 16);
  CHECK(polys_up_to<3>(2).size() == 27);
}

TEST_CASE("F-classes of k[x] are constant multiples") {
  using P = UnivariatePoly<Fp<3>>;
  auto polys = polys_up_to<3>(3);
  std::vector<P> nonzero;
  for (const auto& f : polys)
    if (!f.is_zero()) nonzero.push_back(f);
  std::vector<P> constants = {P{{Fp<3>(1)}}, P{{Fp<3>(2)}}};
  auto rel = orbit_relation(nonzero, constants, [](const P& a, const P& b) { return a * b; });
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = 0; j < nonzero.size(); ++j) {
      bool multiple = nonzero[j] == nonzero[i] || nonzero[j] == P{{Fp<3>(2)}} * nonzero[i];
      CHECK(rel[i][j] == multiple);
    }
  auto classes = partition_of(rel);
  std::map<int, int> per_degree;
  for (const auto& block : classes.blocks()) ++per_degree[nonzero[block.front()].degree()];
  for (int n = 0; n <= 3; ++n) {
    long expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;
    CHECK(per_degree[n] == expected);
  }

  // S_e of U(v): elements x with x𝒯 ⊆ 𝒯 and ex = e are the nonzero constants
  auto v = degree_valuation<3>(3);
  auto u = initial_cover(v).structure;
  std::vector<P> s_e;
  for (const auto& f : nonzero) {
    auto ef = u.nu(u.tangible(f));
    bool keeps = true;
    for (const auto& g : nonzero) keeps = keeps && is_tan(u.mul(u.tangible(f), u.tangible(g)));
    if (keeps && ef == u.nu(u.one())) s_e.push_back(f);
  }
  CHECK(s_e == constants);
}

TEST_CASE("reciprocal valuation") {
  auto v = reciprocal_valuation();
  CHECK(v(2) == Rational(1, 2));
  CHECK(v(0) == 0);
  CHECK(v.target.leq(v(3), v.target.add(v(1), v(2))));
  CHECK(check_mvaluation(v).ok());
}

TEST_CASE("convex subgroup valuation") {
  auto v = convex_subgroup_valuation();
  LexPair h{Rational(1), Rational(5)}, big{Rational(2), Rational(0)};
  CHECK(v(h) == h);
  CHECK(v(big) == std::nullopt);
  CHECK(to_string(h) == "(1,5)");
  CHECK(check_ordered_monoid(lex_group()).ok());
  CHECK(check_semiring_axioms(convex_domain()).ok());
  CHECK(check_bipotent(convex_domain()).ok());
}

TEST_CASE("finite fields and the trivial valuation") {
  CHECK(check_semiring_axioms(prime_field(5)).ok());
  CHECK_THROWS_AS(prime_field(6), std::invalid_argument);
  auto v = trivial_valuation(5);
  CHECK(check_mvaluation(v).ok());
  CHECK(is_strong(v).ok());
  CHECK(!is_strict(v).ok());
}

TEST_CASE("leading-term units of Puiseux fractions") {
  auto one_plus_t = classify_unit({S(1) + t(1), S(1)});
  CHECK(one_plus_t.leading_one);
  CHECK(one_plus_t.expansion_one);
  CHECK(one_plus_t.close_to_one);

  auto ratio = classify_unit({S(1) + t(1), S(1) + S(2) * t(1)});
  CHECK(ratio.leading_one);
  CHECK(ratio.expansion_one);
  CHECK(ratio.close_to_one);
  CHECK(ratio.ring_unit);
  CHECK(ratio.valuation_unit);

  auto two = classify_unit({S(2) + t(1), S(1)});
  CHECK(!two.leading_one);
  CHECK(!two.expansion_one);
  CHECK(!two.close_to_one);
  CHECK(two.ring_unit);

  auto small = classify_unit({t(1), S(1)});
  CHECK(!small.valuation_unit);
  CHECK(!small.ring_unit);
  CHECK_THROWS_AS(classify_unit({S(), S(1)}), AlgebraError);

  auto r = check_leading_unit_group();
  CHECK(r.ok());
  CHECK(r.info["equivalent_to_one"].get<std::size_t>() > 0);
  CHECK(r.info["equivalent_to_one"].get<std::size_t>() < 1000);
}
