#include "doctest.h"
#include "helpers.hpp"
#include "supertrop/instances.hpp"
#include "supertrop/superval.hpp"

using namespace supertrop;

namespace {

const char* kValid[] = {"z2", "z4", "nil_tangible", "boolean", "allghost", "tg_chain", "zero"};

Monoid<Rational> additive_rationals() {
  Monoid<Rational> g;
  g.name = "(Q,+)";
  g.unit = 0;
  g.mul = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  g.less = [](const Rational& a, const Rational& b) { return a < b; };
  g.show = [](const Rational& a) { return to_string(a); };
  g.landmarks = {Rational(0), Rational(2), Rational(-1, 3)};
  g.sample = [](Rng& rng) { return random_exponent(rng, 10, 3); };
  return g;
}

Monoid<int> trivial_monoid() {
  Monoid<int> g;
  g.name = "1";
  g.unit = 0;
  g.mul = [](const int&, const int&) { return 0; };
  g.less = [](const int&, const int&) { return false; };
  g.show = [](const int&) { return std::string("1"); };
  g.elements = {0};
  return g;
}

using DQ = STRStructure<Rational, Rational>;
using EQ = DQ::Element;

}  // namespace

TEST_CASE("D(Q) addition and multiplication") {
  DQ d = d_of(additive_rationals());
  EQ a = d.tangible(3), b = d.tangible(5);
  CHECK(st_add(d, a, a) == d.ghost(3));
  CHECK(st_add(d, a, d.ghost(5)) == d.ghost(5));
  CHECK(st_add(d, a, d.ghost(3)) == d.ghost(3));
  CHECK(st_add(d, d.ghost(2), a) == a);
  CHECK(st_add(d, a, b) == b);
  CHECK(st_add(d, a, d.zero()) == a);
  CHECK(st_add(d, d.zero(), d.ghost(7)) == d.ghost(7));
  CHECK(st_mul(d, d.ghost(3), b) == d.ghost(8));
  CHECK(st_mul(d, a, d.ghost(5)) == d.ghost(8));
  CHECK(st_mul(d, d.ghost(3), d.ghost(5)) == d.ghost(8));
  CHECK(st_mul(d, a, b) == d.tangible(8));
  CHECK(st_mul(d, d.one(), d.ghost(4)) == d.ghost(4));
  CHECK(st_mul(d, d.zero(), a) == d.zero());
  CHECK(ghost_map(d, a) == d.ghost(3));
  CHECK(ghost_map(d, d.zero()) == d.zero());
  CHECK(d.tangible(3) != d.ghost(3));

  auto s = d.semiring();
  CHECK(check_semiring_axioms(s).ok());
  auto r = check_supertropical_axioms(s);
  CHECK(r.ok());
  CHECK(r.mode == CheckMode::sampled);
  CHECK(tangible_closed_check(s).ok());
}

TEST_CASE("D({1}) is {0, 1, e}") {
  auto d = d_of(trivial_monoid());
  auto t = tabulate(d.semiring());
  CHECK(t.names == std::vector<std::string>{"0", "1", "1^nu"});
  auto u = FiniteSupertropical::from_table(t);
  CHECK(u.name(u.e) == "1^nu");
  CHECK(u.table.mul[u.e][u.table.one] == u.e);
  CHECK(check_semiring_axioms(t).ok());
  auto r = check_supertropical_axioms(u);
  CHECK(r.ok());
  CHECK(r.mode == CheckMode::exhaustive);
  CHECK(tangible_closed_check(u).ok());
}

TEST_CASE("STR over Z minus 0 with the 2-adic value") {
  auto v = padic_valuation(2);
  auto s = str_construct<Integer, Theta>(tangible_part(v), nonzero_monoid(v.target), v.map);
  auto six = s.tangible(6), two = s.tangible(2);
  CHECK(s.mul(six, two) == s.tangible(12));
  CHECK(s.nu(six) == s.ghost(Theta(1L)));
  CHECK(s.mul(s.tangible(3), s.tangible(5)) == s.tangible(15));
  CHECK(s.nu(s.tangible(15)) == s.ghost(Theta(0L)));
  for (long n = 1; n <= 100; ++n) {
    CHECK(s.nu(s.tangible(n)) == s.ghost(Theta(long(testing::ord2_by_division(n)))));
    CHECK(s.nu(s.tangible(-n)) == s.ghost(Theta(long(testing::ord2_by_division(n)))));
  }
  // tangibles of different value: the larger value wins, so 3 + 2 = 3
  CHECK(s.add(s.tangible(3), s.tangible(2)) == s.tangible(3));
  CHECK(s.add(s.tangible(3), s.tangible(5)) == s.ghost(Theta(0L)));
  auto u = s.semiring();
  CHECK(check_supertropical_axioms(u).ok());
  CHECK(check_semiring_axioms(u).ok());
}

TEST_CASE("STR rejects bad hypotheses") {
  Monoid<int> idem;
  idem.name = "{1,g}";
  idem.unit = 0;
  idem.mul = [](const int& a, const int& b) { return std::max(a, b); };
  idem.less = [](const int& a, const int& b) { return a < b; };
  idem.show = [](const int& a) { return std::string(a ? "g" : "1"); };
  idem.elements = {0, 1};
  try {
    d_of(idem);
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& e) {
    CHECK(e.report().has_witness("G cancellative", {"1", "g", "g"}));
  }
  auto g = additive_rationals();
  try {
    str_construct<Rational, Rational>(g, g, [](const Rational& x) { return Rational(x + 1); });
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& e) {
    CHECK(e.report().violates("v(1)=1"));
  }
}

TEST_CASE("ghost map is idempotent and vanishes only at zero") {
  for (auto name : kValid) {
    auto u = testing::supertropical(name);
    for (int x = 0; x < u.size(); ++x) {
      CHECK(u.nu[u.nu[x]] == u.nu[x]);
      CHECK((u.nu[x] == u.table.zero) == (x == u.table.zero));
    }
  }
}

TEST_CASE("supertropical axioms on fixtures") {
  for (auto name : kValid) {
    CAPTURE(name);
    CHECK(check_semiring_axioms(testing::table(name)).ok());
    CHECK(check_supertropical_axioms(testing::supertropical(name)).ok());
  }
  auto z2 = check_supertropical_axioms(testing::supertropical("z2"));
  CHECK(z2.info["e"] == "e");
  CHECK(z2.info["tangible"] == nlohmann::json{"1", "g"});
  CHECK(z2.info["ghost"] == nlohmann::json{"e"});
  CHECK(z2.info["ghost_semiring"] == false);

  auto b = check_supertropical_axioms(testing::supertropical("boolean"));
  CHECK(b.ok());
  CHECK(b.info["ghost_semiring"] == true);
  CHECK(b.info["tangible"].empty());
}

TEST_CASE("one broken ghost fiber sum is reported") {
  auto r = check_supertropical_axioms(testing::supertropical("z4_mutated"));
  CHECK(r.witnesses.size() == 1);
  CHECK(r.has_witness("ghost fiber sum", {"1", "g"}));
}

TEST_CASE("non-idempotent e and off-fiber sums") {
  // Z/3 as a ring: 1+1 = 2, 1+1+1+1 = 1
  FiniteSemiringTable t;
  t.names = {"0", "1", "2"};
  t.one = 1;
  t.add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  auto r = check_supertropical_axioms(t);
  CHECK(r.violates("e idempotent"));
  auto nb = check_supertropical_axioms(testing::table("nonbipotent4"));
  CHECK(nb.has_witness("bipotent off fiber", {"p", "q"}));
}

TEST_CASE("declared e and nu are cross-checked") {
  auto j = to_json(testing::supertropical("z2"));
  CHECK(check_supertropical_axioms(supertropical_from_json(j)).ok());
  j["e"] = "g";
  auto r = check_supertropical_axioms(supertropical_from_json(j));
  CHECK(r.has_witness("declared e/nu", {"e"}));
  j = to_json(testing::table("z2"));
  j["nu"] = {0, 1, 2, 3};
  CHECK(check_supertropical_axioms(supertropical_from_json(j)).has_witness("declared e/nu", {"nu"}));
}

TEST_CASE("addition is recovered from multiplication and the ghost order") {
  for (auto name : kValid) {
    auto u = testing::supertropical(name);
    CAPTURE(name);
    CHECK(rebuild_addition(u) == u.table.add);
  }
}

TEST_CASE("ghost map is a strict m-valuation") {
  for (auto name : kValid) {
    auto u = testing::supertropical(name);
    auto s = u.semiring();
    MValuation<int, int> nu;
    nu.name = "nu";
    nu.domain = s;
    nu.target = ghost_ideal_semiring(s);
    nu.map = [s](const int& x) { return s.nu(x); };
    CAPTURE(name);
    CHECK(check_mvaluation(nu).ok());
    CHECK(is_strict(nu).ok());
  }
}

TEST_CASE("subsemirings of fixtures are supertropical") {
  for (auto name : kValid) {
    auto t = testing::table(name);
    for (const auto& sub : subsemirings(t)) {
      auto r = restrict_table(t, sub);
      CAPTURE(name);
      CHECK(check_supertropical_axioms(r).ok());
    }
  }
  // Z/4 has {0,1,g2,e} besides itself and {0,1,e}
  CHECK(subsemirings(testing::table("z4")).size() == 3);
  CHECK_THROWS_AS(restrict_table(testing::table("z4"), {0, 1, 2}), AlgebraError);
}

TEST_CASE("ghost ideal is bipotent") {
  for (auto name : kValid) {
    auto g = ghost_ideal(testing::supertropical(name));
    CAPTURE(name);
    CHECK(check_semiring_axioms(g).ok());
    CHECK(check_bipotent(g).ok());
  }
  auto g = ghost_ideal(testing::supertropical("z2"));
  CHECK(g.names == std::vector<std::string>{"0", "e"});
}

TEST_CASE("tangible closure") {
  auto r = tangible_closed_check(testing::supertropical("nil_tangible"));
  CHECK(r.has_witness("tangibles closed", {"t", "t"}));
  CHECK(tangible_closed_check(testing::supertropical("z4")).ok());
  auto u = initial_cover(padic_valuation(2)).phi.target;
  auto pr = tangible_closed_check(u);
  CHECK(pr.ok());
  CHECK(pr.mode == CheckMode::sampled);
}
