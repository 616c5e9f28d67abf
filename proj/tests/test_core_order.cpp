#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "supertrop/theta.hpp"

using namespace supertrop;

namespace {

Monoid<Rational> additive_rationals() {
  Monoid<Rational> g;
  g.name = "(Q,+)";
  g.unit = 0;
  g.mul = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  g.less = [](const Rational& a, const Rational& b) { return a < b; };
  g.show = [](const Rational& a) { return to_string(a); };
  g.landmarks = {Rational(0), Rational(1), Rational(-1), Rational(3, 2)};
  g.sample = [](Rng& rng) { return random_exponent(rng, 20, 4); };
  return g;
}

// {1, g} with 1 < g and g·g = g.
Monoid<int> two_chain() {
  Monoid<int> g;
  g.name = "{1,g}";
  g.unit = 0;
  g.mul = [](const int& a, const int& b) { return std::max(a, b); };
  g.less = [](const int& a, const int& b) { return a < b; };
  g.show = [](const int& a) { return std::string(a ? "g" : "1"); };
  g.elements = {0, 1};
  return g;
}

Monoid<int> cyclic(int n) {
  Monoid<int> g;
  g.name = "Z/" + std::to_string(n);
  g.unit = 0;
  g.mul = [n](const int& a, const int& b) { return (a + b) % n; };
  g.less = [](const int& a, const int& b) { return a < b; };
  g.show = [](const int& a) { return std::to_string(a); };
  for (int i = 0; i < n; ++i) g.elements.push_back(i);
  return g;
}

}  // namespace

TEST_CASE("max-plus over Q is bipotent") {
  auto t = tg_from_monoid(additive_rationals());
  using E = std::optional<Rational>;
  CHECK(t.add(E(3), E(5)) == E(5));
  CHECK(t.mul(E(3), E(5)) == E(8));
  CHECK(t.add(E(), E(-7)) == E(-7));
  CHECK(t.mul(E(), E(4)) == E());
  CHECK(induced_order(t, E(3), E(5)) == Relation::less);
  CHECK(check_bipotent(t).ok());
  CHECK(check_semiring_axioms(t).ok());
  auto r = check_order_compatibility(t);
  CHECK(r.ok());
  CHECK(r.mode == CheckMode::sampled);
}

TEST_CASE("zero is below everything in the induced order") {
  for (auto name : {"z2", "z4", "d_1g", "nil_tangible", "nonbipotent4", "boolean"}) {
    auto s = as_semiring(testing::table(name));
    for (int x : s.elements) {
      auto rel = induced_order(s, s.zero, x);
      CHECK((rel == Relation::less || rel == Relation::equal));
    }
  }
}

TEST_CASE("non-bipotent table has an incomparable pair") {
  auto t = testing::table("nonbipotent4");
  auto s = as_semiring(t);
  CHECK(check_semiring_axioms(t).ok());
  int p = t.index_of("p"), q = t.index_of("q");
  CHECK(induced_order(s, p, q) == Relation::incomparable);
  auto b = check_bipotent(t);
  CHECK(b.has_witness("bipotent", {"p", "q"}));
  CHECK(!check_order_compatibility(s).ok());
}

TEST_CASE("trivial monoid gives the two-element semiring") {
  Monoid<int> g;
  g.unit = 0;
  g.mul = [](const int&, const int&) { return 0; };
  g.less = [](const int&, const int&) { return false; };
  g.elements = {0};
  auto t = tg_from_monoid(g);
  CHECK(t.elements.size() == 2);
  CHECK(t.add(t.one, t.one) == t.one);
  CHECK(check_bipotent(t).ok());
  CHECK(check_semiring_axioms(t).ok());
}

TEST_CASE("theta powers add by smaller exponent") {
  auto s = theta_powers(6);
  CHECK(s.add(Theta(2L), Theta(3L)) == Theta(2L));
  for (long p = 0; p <= 6; ++p)
    for (long q = 0; q <= 6; ++q) {
      Theta m = s.add(Theta(p), Theta(q));
      CHECK(m.exponent() == std::min(p, q));
      CHECK(s.mul(Theta(p), Theta(q)).exponent() == p + q);
    }
  CHECK(check_bipotent(s).ok());
  CHECK(check_order_compatibility(s).ok());
}

TEST_CASE("T(G) round trip recovers the monoid") {
  for (const auto& g : {two_chain()}) {
    auto back = strip_zero(tg_from_monoid(g));
    REQUIRE(back.elements == g.elements);
    for (int x : g.elements) {
      CHECK(back.show(x) == g.show(x));
      for (int y : g.elements) {
        CHECK(back.mul(x, y) == g.mul(x, y));
        CHECK(back.less(x, y) == g.less(x, y));
      }
    }
  }
  auto q = additive_rationals();
  auto back = strip_zero(tg_from_monoid(q));
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto x = q.sample(rng), y = q.sample(rng);
    CHECK(back.mul(x, y) == q.mul(x, y));
    CHECK(back.less(x, y) == q.less(x, y));
  }
}

TEST_CASE("T(G) rejects an incompatible order") {
  // Z/3 with the numeric order: 1 < 2 but 1+1 = 2 > 2+1 = 0.
  try {
    tg_from_monoid(cyclic(3));
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& e) {
    CHECK(e.report().violates("compatible"));
  }
  Monoid<int> unordered = cyclic(3);
  unordered.less = nullptr;
  CHECK_THROWS_AS(tg_from_monoid(unordered), AlgebraError);
}

TEST_CASE("T({1,g}) table is bipotent") {
  auto t = tabulate(tg_from_monoid(two_chain()));
  CHECK(t.names == std::vector<std::string>{"0", "1", "g"});
  CHECK(check_semiring_axioms(t).ok());
  CHECK(check_bipotent(t).ok());
}

TEST_CASE("boolean semiring") {
  auto t = testing::table("boolean");
  CHECK(check_semiring_axioms(t).ok());
  CHECK(check_bipotent(t).ok());
}

TEST_CASE("Z/2 fixture reports its tangible pair") {
  auto t = testing::table("z2");
  CHECK(check_semiring_axioms(t).ok());
  auto r = check_bipotent(t);
  CHECK(r.has_witness("bipotent", {"1", "g"}));
  CHECK(r.has_witness("bipotent", {"g", "1"}));
  CHECK(r.has_witness("bipotent", {"1", "1"}));
  CHECK(r.witnesses.size() == 4);
}

TEST_CASE("corrupted addition entry is detected") {
  auto good = testing::table("z4");
  auto bad = testing::table("z4_mutated");
  CHECK(check_semiring_axioms(good).ok());
  int diff = 0;
  for (int i = 0; i < good.size(); ++i)
    for (int j = 0; j < good.size(); ++j) diff += good.add[i][j] != bad.add[i][j];
  REQUIRE(diff == 1);
  auto r = check_semiring_axioms(bad);
  CHECK(!r.ok());
  CHECK((r.violates("distributive") || r.violates("add associative")));
}

TEST_CASE("D({1,g}) with g idempotent is not distributive") {
  auto r = check_semiring_axioms(testing::table("d_1g"));
  CHECK(r.has_witness("distributive", {"g", "1", "g"}));
}

TEST_CASE("zero semiring") {
  auto t = testing::table("zero");
  CHECK(t.size() == 1);
  CHECK(check_semiring_axioms(t).ok());
  CHECK(check_bipotent(t).ok());
}

TEST_CASE("malformed tables") {
  FiniteSemiringTable t;
  t.names = {"0", "1"};
  t.one = 1;
  t.add = {{0, 1}, {1, 1}};
  t.mul = {{0, 0}};
  CHECK_THROWS_AS(t.validate(), AlgebraError);
  t.mul = {{0, 0}, {0, 5}};
  CHECK_THROWS_AS(t.validate(), AlgebraError);
  CHECK_THROWS_AS(testing::table("malformed"), nlohmann::json::parse_error);
  CHECK_THROWS_AS(table_from_json(nlohmann::json{{"names", {"0"}}}), AlgebraError);
  CHECK_THROWS(testing::table("no_such_fixture"));
}

TEST_CASE("table json round trip") {
  auto t = testing::table("z4");
  CHECK(table_from_json(to_json(t)) == t);
}

TEST_CASE("theta arithmetic distributes exactly") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Theta p(random_exponent(rng, 50, 7)), q(random_exponent(rng, 50, 7)), r(random_exponent(rng, 50, 7));
    CHECK(p * (q + r) == p * q + p * r);
  }
  CHECK(Theta::bottom() < Theta(100L));
  CHECK(Theta(3L) < Theta(2L));
  CHECK(Theta(Rational(1, 2)).str() == "th^(1/2)");
  CHECK(check_semiring_axioms(theta_semiring()).ok());
  CHECK(check_order_compatibility(theta_semiring()).ok());
}
