#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "supertrop/equiv_lattice.hpp"
#include "supertrop/instances.hpp"

using namespace supertrop;

namespace {

const char* kFixtures[] = {"z2", "z4", "nil_tangible", "boolean", "allghost", "tg_chain", "zero"};

// isomorphism of tables by trying every bijection
bool isomorphic(const FiniteSemiringTable& a, const FiniteSemiringTable& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = p[a.zero] == b.zero && p[a.one] == b.one;
    for (int x = 0; x < a.size() && ok; ++x)
      for (int y = 0; y < a.size() && ok; ++y)
        ok = p[a.add[x][y]] == b.add[p[x]][p[y]] && p[a.mul[x][y]] == b.mul[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// every set partition of {0..n-1}
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> l(n, 0);
  std::function<void(int, int)> rec = [&](int i, int next) {
    if (i == n) {
      out.emplace_back(l);
      return;
    }
    for (int b = 0; b <= next; ++b) {
      l[i] = b;
      rec(i + 1, std::max(next, b + 1));
    }
  };
  if (n == 0) out.emplace_back(l);
  else rec(0, 0);
  return out;
}

// subgroups of the tangible unit group by subset scan, without the library enumerator
std::vector<std::set<int>> subgroups_brute(const FiniteSupertropical& u) {
  auto te = t_e(u);
  std::vector<std::set<int>> out;
  int n = static_cast<int>(te.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(te[i]);
    if (!s.count(u.table.one)) continue;
    bool closed = true;
    for (int a : s)
      for (int b : s) closed = closed && s.count(u.table.mul[a][b]);
    if (closed) out.push_back(s);
  }
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_submonoid(const FiniteSupertropical& u, const std::vector<int>& g) {
  if (std::find(g.begin(), g.end(), u.table.one) == g.end()) return false;
  for (int a : g)
    for (int b : g)
      if (std::find(g.begin(), g.end(), u.table.mul[a][b]) == g.end()) return false;
  return true;
}

std::vector<std::vector<int>> submonoids_of_s(const FiniteSupertropical& u) {
  auto s = s_of(u);
  std::set<std::vector<int>> out;
  int n = static_cast<int>(s.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> g;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) g.push_back(s[i]);
    if (is_submonoid(u, g)) out.insert(sorted(g));
  }
  return {out.begin(), out.end()};
}

Partition blocks(const FiniteSupertropical& u, const std::vector<std::vector<std::string>>& names) {
  std::vector<std::vector<int>> b;
  for (const auto& blk : names) {
    b.emplace_back();
    for (const auto& n : blk) b.back().push_back(u.table.index_of(n));
  }
  return Partition::from_blocks(u.size(), b);
}

}  // namespace

TEST_CASE("partitions") {
  auto p = Partition::from_blocks(5, {{3, 1}});
  CHECK(p.labels() == std::vector<int>{0, 1, 2, 1, 3});
  CHECK(p.block_count() == 4);
  CHECK(p == Partition(std::vector<int>{7, 2, 9, 2, 4}));
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}, {4}});
  CHECK(Partition::diagonal(5).refines(p));
  CHECK(!p.refines(Partition::diagonal(5)));
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 2}}), std::out_of_range);
}

TEST_CASE("join is the transitive closure of the union") {
  auto parts = all_partitions(5);
  REQUIRE(parts.size() == 52);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      // closure by repeated squaring of the relation matrix
      std::vector<std::vector<bool>> r(5, std::vector<bool>(5));
      for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) r[x][y] = a.same(x, y) || b.same(x, y);
      for (int k = 0; k < 5; ++k)
        for (int x = 0; x < 5; ++x)
          for (int y = 0; y < 5; ++y) r[x][y] = r[x][y] || (r[x][k] && r[k][y]);
      auto j = join(a, b), m = meet(a, b);
      for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
          CHECK(j.same(x, y) == r[x][y]);
          CHECK(m.same(x, y) == (a.same(x, y) && b.same(x, y)));
        }
    }
}

TEST_CASE("MFCE checks") {
  for (auto name : kFixtures) {
    auto u = testing::supertropical(name);
    CAPTURE(name);
    CHECK(check_mfce(u, Partition::diagonal(u.size())).ok());
    CHECK(check_mfce(u, e_nu(u)).ok());
  }
  auto z2 = testing::supertropical("z2");
  auto cross = load_partition(testing::fixture_path("z2_cross_partition"), z2);
  auto r = check_mfce(z2, cross);
  CHECK(!r.violates("fiber conserving"));
  CHECK(r.has_witness("multiplicative", {"1", "e", "g"}));
  CHECK(load_partition(testing::fixture_path("z2_et_partition"), z2) == e_t(z2));
  CHECK_THROWS_AS(partition_from_json(nlohmann::json{{"blocks", {{"1", "q"}}}}, z2), AlgebraError);
  CHECK_THROWS_AS(partition_from_json(nlohmann::json{{"blocks", {{"1", "g"}, {"g"}}}}, z2), AlgebraError);
  CHECK_THROWS_AS(check_mfce(z2, Partition::diagonal(3)), std::invalid_argument);

  // D({1,g}): joining each tangible with its own ghost conserves fibers and is multiplicative
  auto d = testing::supertropical("d_1g");
  CHECK(check_mfce(d, blocks(d, {{"1", "1^nu"}, {"g", "g^nu"}})).ok());
  auto across = check_mfce(d, blocks(d, {{"1", "g"}}));
  CHECK(across.has_witness("fiber conserving", {"1", "g"}));
}

TEST_CASE("quotients by MFCE relations") {
  for (auto name : kFixtures) {
    auto u = testing::supertropical(name);
    CAPTURE(name);
    auto same = quotient(u, Partition::diagonal(u.size()));
    CHECK(same.u.table == u.table);

    auto g = quotient(u, e_nu(u));
    CHECK(tangible_elements(g.u).empty());
    CHECK(isomorphic(g.u.table, ghost_ideal(u)));

    auto ghosts = ghost_elements(u);
    for (const auto& e : enumerate_mfce(u)) {
      auto q = quotient(u, e);
      CHECK(check_supertropical_axioms(q.u).ok());
      std::set<int> images;
      for (int m : ghosts) images.insert(q.projection[m]);
      CHECK(images.size() == ghosts.size());
      CHECK(ghost_elements(q.u).size() == ghosts.size());
      Transmission<int, int> pi{"pi", u.semiring(), q.u.semiring(), [q](const int& x) { return q.projection[x]; }};
      auto r = check_transmission(pi);
      CHECK(r.ok());
      CHECK(r.info["homomorphism"] == true);
    }
  }
  CHECK_THROWS_AS(quotient(testing::supertropical("z2"), load_partition(testing::fixture_path("z2_cross_partition"),
                                                                         testing::supertropical("z2"))),
                  AlgebraError);
}

TEST_CASE("induced maps on quotients are transmissions") {
  for (auto name : {"z2", "z4", "nil_tangible"}) {
    auto u = testing::supertropical(name);
    auto mfce = enumerate_mfce(u);
    for (const auto& e : mfce) {
      auto q = quotient(u, e);
      auto blocks = e.blocks();
      // ν respects every MFCE relation
      auto eu = ghost_ideal_semiring(u.semiring());
      Transmission<int, int> nubar{"nu bar", q.u.semiring(), eu,
                                   [u, blocks](const int& b) { return u.nu[blocks[b].front()]; }};
      CAPTURE(name);
      CHECK(check_transmission(nubar).ok());
      for (const auto& e2 : mfce) {
        if (!e.refines(e2)) continue;
        auto q2 = quotient(u, e2);
        Transmission<int, int> beta{"beta", q.u.semiring(), q2.u.semiring(),
                                    [q2, blocks](const int& b) { return q2.projection[blocks[b].front()]; }};
        CHECK(check_transmission(beta).ok());
      }
    }
  }
}

TEST_CASE("E_t and E_L") {
  auto d1 = FiniteSupertropical::from_table(tabulate(d_of(nonzero_monoid(boolean_semiring())).semiring()));
  CHECK(e_t(d1) == Partition::diagonal(d1.size()));

  auto u = initial_cover_table(trivial_valuation(5));
  auto et = e_t(u);
  auto tan = tangible_elements(u);
  REQUIRE(tan.size() == 4);
  for (int a : tan)
    for (int b : tan) CHECK(et.same(a, b));
  for (int g : ghost_elements(u)) CHECK(et.blocks()[et.block_of(g)].size() == 1);
  // U(v)/E_t is D(M) with M = {0, 1}
  CHECK(isomorphic(quotient(u, et).u.table, d1.table));

  auto z2 = testing::supertropical("z2");
  CHECK(e_L(z2, {z2.e}) == Partition::diagonal(4));

  auto ex = testing::supertropical("nil_tangible");
  int e = ex.table.index_of("e"), a = ex.table.index_of("a"), t = ex.table.index_of("t");
  auto el = e_L(ex, {e, a});
  CHECK(el == Partition::diagonal(ex.size()));
  auto q = quotient(ex, el);
  CHECK(tangible_closed_check(q.u).has_witness("tangibles closed", {"t", "t"}));
  auto ea = e_L(ex, {e});
  CHECK(ea.same(t, a));
  CHECK(check_mfce(ex, ea).ok());
  try {
    e_L(ex, {a});
    FAIL("expected AlgebraError");
  } catch (const AlgebraError& err) {
    CHECK(err.report().violates("complement absorbing"));
  }
  CHECK_THROWS_AS(e_L(ex, {t}), AlgebraError);
}

TEST_CASE("orbital relations") {
  auto z2 = testing::supertropical("z2");
  CHECK(orbital(z2, {z2.table.one}) == Partition::diagonal(4));
  auto all = orbital(z2, tangible_elements(z2));
  CHECK(to_string(all, z2) == "{0} {1,g} {e}");
  for (auto name : {"z2", "z4"}) {
    auto u = testing::supertropical(name);
    auto s = s_of(u);
    CHECK(sorted(s) == sorted(tangible_elements(u)));
    CHECK(orbital(u, s).block_count() == 3);
  }
}

TEST_CASE("saturation") {
  for (auto name : {"z2", "z4", "nil_tangible", "tg_chain", "allghost"}) {
    auto u = testing::supertropical(name);
    auto s = s_of(u);
    CAPTURE(name);
    for (const auto& g : submonoids_of_s(u)) {
      auto gs = sorted(saturate(u, g));
      CHECK(sorted(saturate(u, gs)) == gs);
      CHECK(orbital(u, g) == orbital(u, gs));
      for (int x : g) CHECK(std::count(gs.begin(), gs.end(), x) == 1);
      auto se = s_e(u);
      bool in_se = std::all_of(g.begin(), g.end(), [&](int x) { return std::count(se.begin(), se.end(), x); });
      if (in_se)
        for (int x : gs) CHECK(std::count(se.begin(), se.end(), x) == 1);
      if (tangibles_form_group(u)) CHECK(gs == g);
    }
  }
}

TEST_CASE("G_E") {
  auto z2 = testing::supertropical("z2");
  CHECK(g_of(z2, Partition::diagonal(4)) == std::vector<int>{z2.table.one});
  CHECK(sorted(g_of(z2, e_nu(z2))) == sorted(t_e(z2)));
  CHECK(t_e(z2).size() == 2);

  for (auto name : {"z2", "z4", "nil_tangible", "tg_chain"}) {
    auto u = testing::supertropical(name);
    CAPTURE(name);
    auto monoids = submonoids_of_s(u);
    for (const auto& h : monoids) CHECK(sorted(g_of(u, orbital(u, h))) == sorted(saturate(u, h)));
    for (const auto& e : enumerate_mfce(u)) {
      auto ge = g_of(u, e);
      CHECK(sorted(saturate(u, ge)) == sorted(ge));
      auto se = s_e(u);
      for (int x : ge) CHECK(std::count(se.begin(), se.end(), x) == 1);
      auto best = orbital(u, ge);
      CHECK(best.refines(e));
      for (const auto& h : monoids) {
        auto eh = orbital(u, h);
        if (eh.refines(e)) CHECK(eh.refines(best));
      }
    }
  }
}

TEST_CASE("meet and join of MFCE relations") {
  for (auto name : kFixtures) {
    auto u = testing::supertropical(name);
    auto mfce = enumerate_mfce(u);
    auto diag = Partition::diagonal(u.size());
    CAPTURE(name);
    for (const auto& a : mfce) {
      CHECK(meet(a, a) == a);
      CHECK(join(a, a) == a);
      CHECK(join(diag, a) == a);
      for (const auto& b : mfce) {
        auto m = meet(a, b), j = join(a, b);
        CHECK(check_mfce(u, m).ok());
        CHECK(check_mfce(u, j).ok());
        CHECK(std::count(mfce.begin(), mfce.end(), m) == 1);
        CHECK(std::count(mfce.begin(), mfce.end(), j) == 1);
        CHECK(meet(a, join(a, b)) == a);
        CHECK(join(a, meet(a, b)) == a);
      }
    }
  }

  // E(G1) v E(G2) = E(<G1 u G2>) on Z/4
  auto z4 = testing::supertropical("z4");
  auto groups = subgroups_brute(z4);
  REQUIRE(groups.size() == 3);
  for (const auto& g1 : groups)
    for (const auto& g2 : groups) {
      std::vector<int> a(g1.begin(), g1.end()), b(g2.begin(), g2.end()), both = a;
      both.insert(both.end(), b.begin(), b.end());
      CHECK(join(orbital(z4, a), orbital(z4, b)) == orbital(z4, submonoid_generated(z4, both)));
    }
}

TEST_CASE("enumeration of MFCE relations") {
  auto z2 = testing::supertropical("z2");
  auto m = enumerate_mfce(z2);
  REQUIRE(m.size() == 3);
  CHECK(std::count(m.begin(), m.end(), Partition::diagonal(4)) == 1);
  CHECK(std::count(m.begin(), m.end(), e_t(z2)) == 1);
  CHECK(std::count(m.begin(), m.end(), e_nu(z2)) == 1);
  CHECK(enumerate_mfce(testing::supertropical("z4")).size() == 4);
  CHECK(enumerate_mfce(testing::supertropical("allghost")).size() == 1);
  CHECK_THROWS_AS(enumerate_mfce(z2, 3), BoundExceeded);

  // against a scan of all set partitions
  for (auto name : kFixtures) {
    auto u = testing::supertropical(name);
    std::vector<Partition> brute;
    for (const auto& p : all_partitions(u.size()))
      if (check_mfce(u, p).ok()) brute.push_back(p);
    std::sort(brute.begin(), brute.end());
    CAPTURE(name);
    CHECK(enumerate_mfce(u) == brute);
  }
}

TEST_CASE("MFCE relations match subgroups of the tangible unit group") {
  for (auto name : {"z2", "z4"}) {
    auto u = testing::supertropical(name);
    REQUIRE(tangibles_form_group(u));
    auto mfce = enumerate_mfce(u);
    auto groups = subgroups_brute(u);
    auto enu = e_nu(u);
    std::vector<Partition> rest;
    for (const auto& e : mfce)
      if (e != enu) rest.push_back(e);
    CAPTURE(name);
    REQUIRE(rest.size() == groups.size());
    std::set<Partition> images;
    for (const auto& h : groups) {
      auto e = orbital(u, std::vector<int>(h.begin(), h.end()));
      images.insert(e);
      auto back = g_of(u, e);
      CHECK(std::set<int>(back.begin(), back.end()) == h);
      for (const auto& h2 : groups) {
        bool sub = std::includes(h2.begin(), h2.end(), h.begin(), h.end());
        CHECK(sub == e.refines(orbital(u, std::vector<int>(h2.begin(), h2.end()))));
      }
    }
    CHECK(std::set<Partition>(rest.begin(), rest.end()) == images);
    for (const auto& e : rest) CHECK(orbital(u, g_of(u, e)) == e);
    CHECK(subgroups_of(u, t_e(u)).size() == groups.size());
  }
}

TEST_CASE("saturated submonoids and orbital relations correspond") {
  for (auto name : {"z2", "z4", "nil_tangible", "tg_chain"}) {
    auto u = testing::supertropical(name);
    std::vector<std::vector<int>> sat;
    for (const auto& g : submonoids_of_s(u))
      if (sorted(saturate(u, g)) == g) sat.push_back(g);
    CAPTURE(name);
    for (const auto& h1 : sat) {
      CHECK(sorted(g_of(u, orbital(u, h1))) == h1);
      for (const auto& h2 : sat) {
        bool sub = std::includes(h2.begin(), h2.end(), h1.begin(), h1.end());
        CHECK(sub == orbital(u, h1).refines(orbital(u, h2)));
      }
    }
  }
}

TEST_CASE("orbital meet data is recorded") {
  for (auto name : {"z2", "z4", "nil_tangible"}) {
    auto j = orbital_meet_data(testing::supertropical(name));
    CHECK(j["meet_orbital"].get<int>() + static_cast<int>(j["non_orbital_meets"].size()) == j["pairs"].get<int>());
  }
}

TEST_CASE("the lattice of covers") {
  auto z2 = testing::supertropical("z2");
  auto c = cov_lattice(z2);
  CHECK(c.elements.size() == 3);
  CHECK(c.hasse.size() == 2);
  CHECK(c.height() == 2);
  CHECK(c.elements[c.top] == Partition::diagonal(4));
  CHECK(c.elements[c.bottom] == e_nu(z2));
  auto dot = c.dot(z2);
  CHECK(dot.find("label=\"phi_v\"") != std::string::npos);
  CHECK(dot.find("label=\"v\"") != std::string::npos);
  CHECK(c.to_json(z2)["partitions"].size() == 3);

  auto z4 = cov_lattice(testing::supertropical("z4"));
  CHECK(z4.elements.size() == 4);
  CHECK(z4.height() == 3);
  auto one = cov_lattice(testing::supertropical("allghost"));
  CHECK(one.elements.size() == 1);
  CHECK(one.dot(testing::supertropical("allghost")).find("phi_v = v") != std::string::npos);

  // F_5^* is cyclic of order 4, so U(v) for the trivial valuation is the Z/4 fixture
  auto u = initial_cover_table(trivial_valuation(5));
  CHECK(isomorphic(u.table, testing::table("z4")));
  auto cv = cov_lattice(trivial_valuation(5));
  CHECK(cv.elements.size() == z4.elements.size());
  CHECK(cv.height() == z4.height());
  CHECK(cv.hasse.size() == z4.hasse.size());
}

TEST_CASE("supremum of covers") {
  auto v = trivial_valuation(3);
  auto phi = initial_finite_cover(v);
  REQUIRE(isomorphic(phi.target.table, testing::table("z2")));
  auto mfce = enumerate_mfce(phi.target);
  REQUIRE(mfce.size() == 3);

  CHECK(isomorphic_over_M(sup_cover({phi}), phi).ok());
  for (const auto& e1 : mfce)
    for (const auto& e2 : mfce) {
      auto a = quotient_cover(phi, e1), b = quotient_cover(phi, e2);
      nlohmann::json info;
      auto s = sup_cover({a, b}, &info);
      auto r = isomorphic_over_M(s, quotient_cover(phi, meet(e1, e2)));
      CHECK(r.ok());
      CHECK(check_supertropical_axioms(s.target).ok());
      CHECK(check_dominance(s.superval(), a.superval()).ok());
      CHECK(check_dominance(s.superval(), b.superval()).ok());
    }
  std::vector<FiniteCover> every;
  for (const auto& e : mfce) every.push_back(quotient_cover(phi, e));
  CHECK(isomorphic_over_M(sup_cover(every), phi).ok());
  CHECK(!isomorphic_over_M(quotient_cover(phi, e_nu(phi.target)), phi).ok());
}

TEST_CASE("very strong quotients of the initial cover") {
  for (int p : {3, 5, 7}) {
    auto v = trivial_valuation(p);
    REQUIRE(is_strong(v).ok());
    auto phi = initial_finite_cover(v);
    auto& u = phi.target;
    // E(v) from a1 + c1 = a2 + c2 with v(ci) < v(ai), scanned over the field
    auto el = v.domain.elements;
    std::vector<int> lab(u.size());
    std::iota(lab.begin(), lab.end(), 0);
    for (int a1 : el)
      for (int a2 : el) {
        if (v(a1) == 0 || v(a2) == 0) continue;
        bool related = false;
        for (int c1 : el)
          for (int c2 : el)
            if (v.target.less(v(c1), v(a1)) && v.target.less(v(c2), v(a2)) &&
                v.domain.add(a1, c1) == v.domain.add(a2, c2))
              related = true;
        if (related) lab[phi.image[a2]] = lab[phi.image[a1]];
      }
    Partition ev(lab);
    CHECK(ev == Partition::diagonal(u.size()));
    for (const auto& e : enumerate_mfce(u)) {
      bool very = is_very_strong(quotient_cover(phi, e).superval()).ok();
      CAPTURE(p);
      CHECK(very == ev.refines(e));
    }
  }
}
