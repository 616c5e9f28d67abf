#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

enum class Relation { less, equal, greater, incomparable };

std::string to_string(Relation r);

/// a <= b iff a + b = b; four-valued because the relation is only partial in general.
template <class T>
Relation induced_order(const Semiring<T>& r, const T& a, const T& b) {
  if (a == b) return Relation::equal;
  bool le = r.add(a, b) == b;
  bool ge = r.add(a, b) == a;
  if (le) return Relation::less;
  if (ge) return Relation::greater;
  return Relation::incomparable;
}

template <class G>
Report check_ordered_monoid(const Monoid<G>& g, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = g.name.empty() ? "ordered monoid" : g.name;
  r.checked = {"associative", "commutative", "unit", "total order", "compatible"};
  auto s = [&](const G& x) { return show(g, x); };
  for_each_point(g, cfg, r, [&](const G& x) {
    if (!(g.mul(x, g.unit) == x)) r.fail("unit", {s(x)});
    if (g.less && g.less(x, x)) r.fail("total order", {s(x)}, "irreflexivity");
  });
  for_each_pair(g, cfg, r, [&](const G& x, const G& y) {
    if (!(g.mul(x, y) == g.mul(y, x))) r.fail("commutative", {s(x), s(y)});
    if (g.less) {
      int n = int(g.less(x, y)) + int(g.less(y, x)) + int(x == y);
      if (n != 1) r.fail("total order", {s(x), s(y)}, "trichotomy");
    }
  });
  for_each_triple(g, cfg, r, [&](const G& x, const G& y, const G& z) {
    if (!(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)))) r.fail("associative", {s(x), s(y), s(z)});
    if (!g.less) return;
    if (g.less(x, y) && g.less(y, z) && !g.less(x, z)) r.fail("total order", {s(x), s(y), s(z)}, "transitivity");
    if (g.less(x, y) || x == y) {
      auto a = g.mul(z, x), b = g.mul(z, y);
      if (g.less(b, a)) r.fail("compatible", {s(x), s(y), s(z)}, "x <= y but zx > zy");
    }
  });
  return r;
}

/// T(G): adjoin a bottom 0 and add by max. nullopt is the new zero.
template <class G>
Semiring<std::optional<G>> tg_from_monoid(const Monoid<G>& g, const CheckConfig& cfg = {}) {
  if (!g.less) throw AlgebraError("T(G) needs an ordered monoid");
  auto rep = check_ordered_monoid(g, cfg);
  if (!rep.ok()) throw AlgebraError("not an ordered monoid: " + rep.witnesses.front().rule, rep);
  using E = std::optional<G>;
  Semiring<E> t;
  t.name = "T(" + (g.name.empty() ? std::string("G") : g.name) + ")";
  t.zero = std::nullopt;
  t.one = g.unit;
  auto less = g.less;
  auto mul = g.mul;
  t.add = [less](const E& a, const E& b) -> E {
    if (!a) return b;
    if (!b) return a;
    return less(*a, *b) ? b : a;
  };
  t.mul = [mul](const E& a, const E& b) -> E {
    if (!a || !b) return std::nullopt;
    return mul(*a, *b);
  };
  auto sh = g.show;
  t.show = [sh](const E& a) { return a ? (sh ? sh(*a) : std::string("?")) : std::string("0"); };
  if (g.finite()) {
    t.elements.push_back(std::nullopt);
    for (const auto& x : g.elements) t.elements.push_back(x);
  }
  t.landmarks.push_back(std::nullopt);
  for (const auto& x : g.landmarks) t.landmarks.push_back(x);
  if (g.sample) {
    auto smp = g.sample;
    t.sample = [smp](Rng& rng) -> E {
      if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) return std::nullopt;
      return smp(rng);
    };
  }
  return t;
}

/// R \ {0} with the order recovered from a + b = b.
template <class G>
Monoid<G> strip_zero(const Semiring<std::optional<G>>& r) {
  Monoid<G> g;
  g.name = r.name + " minus 0";
  g.unit = *r.one;
  g.mul = [r](const G& a, const G& b) { return *r.mul(a, b); };
  g.less = [r](const G& a, const G& b) { return !(a == b) && r.add(a, b) == std::optional<G>(b); };
  g.show = [r](const G& a) { return r.show(a); };
  for (const auto& x : r.elements)
    if (x) g.elements.push_back(*x);
  for (const auto& x : r.landmarks)
    if (x) g.landmarks.push_back(*x);
  if (r.sample) {
    auto smp = r.sample;
    g.sample = [smp](Rng& rng) {
      for (;;)
        if (auto x = smp(rng)) return *x;
    };
  }
  return g;
}

template <class T>
Report check_semiring_axioms(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name.empty() ? "semiring" : s.name;
  r.checked = {"add associative", "add commutative", "mul associative", "mul commutative",
               "distributive", "zero neutral", "one neutral", "zero absorbing"};
  auto sh = [&](const T& x) { return show(s, x); };
  for_each_point(s, cfg, r, [&](const T& x) {
    if (!(s.add(x, s.zero) == x) || !(s.add(s.zero, x) == x)) r.fail("zero neutral", {sh(x)});
    if (!(s.mul(x, s.one) == x) || !(s.mul(s.one, x) == x)) r.fail("one neutral", {sh(x)});
    if (!(s.mul(x, s.zero) == s.zero) || !(s.mul(s.zero, x) == s.zero)) r.fail("zero absorbing", {sh(x)});
  });
  for_each_pair(s, cfg, r, [&](const T& x, const T& y) {
    if (!(s.add(x, y) == s.add(y, x))) r.fail("add commutative", {sh(x), sh(y)});
    if (!(s.mul(x, y) == s.mul(y, x))) r.fail("mul commutative", {sh(x), sh(y)});
  });
  for_each_triple(s, cfg, r, [&](const T& x, const T& y, const T& z) {
    if (!(s.add(s.add(x, y), z) == s.add(x, s.add(y, z)))) r.fail("add associative", {sh(x), sh(y), sh(z)});
    if (!(s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)))) r.fail("mul associative", {sh(x), sh(y), sh(z)});
    if (!(s.mul(x, s.add(y, z)) == s.add(s.mul(x, y), s.mul(x, z))))
      r.fail("distributive", {sh(x), sh(y), sh(z)});
  });
  return r;
}

template <class T>
Report check_bipotent(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name.empty() ? "semiring" : s.name;
  r.checked = {"bipotent"};
  for_each_pair(s, cfg, r, [&](const T& a, const T& b) {
    auto c = s.add(a, b);
    if (!(c == a) && !(c == b)) r.fail("bipotent", {show(s, a), show(s, b)}, "a+b = " + show(s, c));
  });
  return r;
}

/// The conclusions of the bipotent-order proposition: totality and compatibility with + and ·.
template <class T>
Report check_order_compatibility(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name.empty() ? "semiring" : s.name;
  r.checked = {"total", "compatible add", "compatible mul"};
  auto sh = [&](const T& x) { return show(s, x); };
  for_each_pair(s, cfg, r, [&](const T& a, const T& b) {
    if (induced_order(s, a, b) == Relation::incomparable) r.fail("total", {sh(a), sh(b)});
  });
  for_each_triple(s, cfg, r, [&](const T& a, const T& b, const T& c) {
    if (!s.leq(a, b)) return;
    if (!s.leq(s.mul(a, c), s.mul(b, c))) r.fail("compatible mul", {sh(a), sh(b), sh(c)});
    if (!s.leq(s.add(a, c), s.add(b, c))) r.fail("compatible add", {sh(a), sh(b), sh(c)});
  });
  return r;
}

/// Explicit finite semiring given by index tables; the shared file format of the CLI and fixtures.
struct FiniteSemiringTable {
  std::vector<std::string> names;
  int zero = 0;
  int one = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
  /// Throws AlgebraError on ragged or out-of-range tables.
  void validate() const;
  bool operator==(const FiniteSemiringTable&) const = default;
};

FiniteSemiringTable table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteSemiringTable& t);
FiniteSemiringTable load_table(const std::string& path);

/// Element i of the result is index i of the table.
Semiring<int> as_semiring(const FiniteSemiringTable& t);

Report check_semiring_axioms(const FiniteSemiringTable& t);
Report check_bipotent(const FiniteSemiringTable& t);

/// Tabulates a finite semiring; elements are ordered as in `s.elements`, labels from `s.show`.
template <class T>
FiniteSemiringTable tabulate(const Semiring<T>& s) {
  if (!s.finite()) throw AlgebraError("tabulate needs a finite carrier");
  const auto& el = s.elements;
  auto idx = [&](const T& x) {
    auto it = std::find(el.begin(), el.end(), x);
    if (it == el.end()) throw AlgebraError("carrier not closed: " + show(s, x));
    return static_cast<int>(it - el.begin());
  };
  FiniteSemiringTable t;
  for (const auto& x : el) t.names.push_back(show(s, x));
  t.zero = idx(s.zero);
  t.one = idx(s.one);
  auto n = el.size();
  t.add.assign(n, std::vector<int>(n));
  t.mul.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i][j] = idx(s.add(el[i], el[j]));
      t.mul[i][j] = idx(s.mul(el[i], el[j]));
    }
  return t;
}

}  // namespace supertrop
