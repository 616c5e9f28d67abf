#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supertrop/core_order.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

template <class T>
struct Tan {
  T value;
  bool operator==(const Tan&) const = default;
};

template <class G>
struct Gh {
  G value;
  bool operator==(const Gh&) const = default;
};

/// Zero | Tangible(t) | Ghost(m). Equality is structural, so Tan(a) never equals Gh(m).
template <class T, class G>
using STElement = std::variant<std::monostate, Tan<T>, Gh<G>>;

template <class T, class G>
bool is_zero(const STElement<T, G>& x) { return std::holds_alternative<std::monostate>(x); }
template <class T, class G>
bool is_tan(const STElement<T, G>& x) { return std::holds_alternative<Tan<T>>(x); }
template <class T, class G>
bool is_gh(const STElement<T, G>& x) { return std::holds_alternative<Gh<G>>(x); }
template <class T, class G>
const T& tan_value(const STElement<T, G>& x) { return std::get<Tan<T>>(x).value; }
template <class T, class G>
const G& gh_value(const STElement<T, G>& x) { return std::get<Gh<G>>(x).value; }

/// STR(T, G, v): tangibles T, ghosts G (ordered, cancellative), v: T -> G.
template <class T, class G>
struct STRStructure {
  using Element = STElement<T, G>;

  std::string name;
  Monoid<T> tangibles;
  Monoid<G> ghosts;
  std::function<G(const T&)> v;

  Element zero() const { return std::monostate{}; }
  Element one() const { return Tan<T>{tangibles.unit}; }
  Element tangible(const T& t) const { return Tan<T>{t}; }
  Element ghost(const G& g) const { return Gh<G>{g}; }

  /// ν(x) = e·x; zero for zero.
  Element nu(const Element& x) const {
    if (is_tan(x)) return Gh<G>{v(tan_value(x))};
    return x;
  }

  Element add(const Element& x, const Element& y) const {
    if (is_zero(x)) return y;
    if (is_zero(y)) return x;
    G gx = gh_value(nu(x)), gy = gh_value(nu(y));
    if (ghosts.less(gy, gx)) return x;
    if (ghosts.less(gx, gy)) return y;
    return Gh<G>{gx};
  }

  Element mul(const Element& x, const Element& y) const {
    if (is_zero(x) || is_zero(y)) return std::monostate{};
    if (is_tan(x) && is_tan(y)) return Tan<T>{tangibles.mul(tan_value(x), tan_value(y))};
    return Gh<G>{ghosts.mul(gh_value(nu(x)), gh_value(nu(y)))};
  }

  std::string show(const Element& x) const {
    if (is_zero(x)) return "0";
    if (is_tan(x)) return supertrop::show(tangibles, tan_value(x));
    return supertrop::show(ghosts, gh_value(x)) + "^nu";
  }

  Semiring<Element> semiring() const {
    Semiring<Element> s;
    s.name = name.empty() ? "STR" : name;
    s.zero = zero();
    s.one = one();
    auto self = *this;
    s.add = [self](const Element& a, const Element& b) { return self.add(a, b); };
    s.mul = [self](const Element& a, const Element& b) { return self.mul(a, b); };
    s.show = [self](const Element& a) { return self.show(a); };
    if (tangibles.finite() && ghosts.finite()) {
      s.elements.push_back(zero());
      for (const auto& t : tangibles.elements) s.elements.push_back(tangible(t));
      for (const auto& g : ghosts.elements) s.elements.push_back(ghost(g));
    }
    s.landmarks.push_back(zero());
    for (const auto& t : tangibles.landmarks) s.landmarks.push_back(tangible(t));
    for (const auto& g : ghosts.landmarks) s.landmarks.push_back(ghost(g));
    if (tangibles.sample && ghosts.sample) {
      s.sample = [self](Rng& rng) -> Element {
        int k = std::uniform_int_distribution<int>(0, 15)(rng);
        if (k == 0) return std::monostate{};
        if (k < 10) return Tan<T>{self.tangibles.sample(rng)};
        return Gh<G>{self.ghosts.sample(rng)};
      };
    }
    return s;
  }
};

/// Validates the STR hypotheses (v(1) = 1, v multiplicative, G ordered and cancellative) and
/// returns the structure; throws AlgebraError with the failing report otherwise.
template <class T, class G>
STRStructure<T, G> str_construct(Monoid<T> t, Monoid<G> g, std::function<G(const T&)> v,
                                 const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "STR hypotheses";
  r.checked = {"v(1)=1", "v multiplicative", "G cancellative"};
  if (!g.less) throw AlgebraError("STR needs an ordered ghost monoid");
  auto go = check_ordered_monoid(g, cfg);
  r.merge(go);
  if (!(v(t.unit) == g.unit)) r.fail("v(1)=1", {show(t, t.unit)}, "v(1) = " + show(g, v(t.unit)));
  for_each_pair(t, cfg, r, [&](const T& a, const T& b) {
    if (!(v(t.mul(a, b)) == g.mul(v(a), v(b)))) r.fail("v multiplicative", {show(t, a), show(t, b)});
  });
  for_each_triple(g, cfg, r, [&](const G& x, const G& y, const G& z) {
    if (!(x == y) && g.mul(x, z) == g.mul(y, z)) r.fail("G cancellative", {show(g, x), show(g, y), show(g, z)});
  });
  if (!r.ok()) throw AlgebraError("STR hypotheses fail: " + r.witnesses.front().rule, r);
  STRStructure<T, G> s;
  s.name = "STR(" + (t.name.empty() ? std::string("T") : t.name) + ", " + (g.name.empty() ? std::string("G") : g.name) + ")";
  s.tangibles = std::move(t);
  s.ghosts = std::move(g);
  s.v = std::move(v);
  return s;
}

/// D(G) = STR(G, G, id).
template <class G>
STRStructure<G, G> d_of(const Monoid<G>& g, const CheckConfig& cfg = {}) {
  auto s = str_construct<G, G>(g, g, [](const G& x) { return x; }, cfg);
  s.name = "D(" + (g.name.empty() ? std::string("G") : g.name) + ")";
  return s;
}

template <class T, class G>
STElement<T, G> st_add(const STRStructure<T, G>& s, const STElement<T, G>& x, const STElement<T, G>& y) {
  return s.add(x, y);
}
template <class T, class G>
STElement<T, G> st_mul(const STRStructure<T, G>& s, const STElement<T, G>& x, const STElement<T, G>& y) {
  return s.mul(x, y);
}
template <class T, class G>
STElement<T, G> ghost_map(const STRStructure<T, G>& s, const STElement<T, G>& x) {
  return s.nu(x);
}

/// The addition rule of the reconstruction theorem: a if ea > eb, b if ea < eb, ea if equal,
/// using only multiplication and the order of the ghost ideal (`ghost_leq`).
template <class T, class Leq>
T st_add_rule(const Semiring<T>& s, const T& a, const T& b, Leq&& ghost_leq) {
  if (a == s.zero) return b;
  if (b == s.zero) return a;
  T ea = s.nu(a), eb = s.nu(b);
  if (ea == eb) return ea;
  return ghost_leq(ea, eb) ? b : a;
}

template <class T>
Report check_supertropical_axioms(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name.empty() ? "semiring" : s.name;
  r.checked = {"e idempotent", "ghost fiber sum", "bipotent off fiber"};
  auto sh = [&](const T& x) { return show(s, x); };
  T e = s.e();
  if (!(s.add(e, e) == e)) r.fail("e idempotent", {sh(s.one)}, "1+1 = " + sh(e) + ", 1+1+1+1 = " + sh(s.add(e, e)));
  for_each_pair(s, cfg, r, [&](const T& a, const T& b) {
    T aa = s.add(a, a), bb = s.add(b, b), ab = s.add(a, b);
    if (aa == bb) {
      if (!(ab == aa)) r.fail("ghost fiber sum", {sh(a), sh(b)}, "a+b = " + sh(ab) + ", a+a = " + sh(aa));
    } else if (!(ab == a) && !(ab == b)) {
      r.fail("bipotent off fiber", {sh(a), sh(b)}, "a+b = " + sh(ab));
    }
  });
  r.info["e"] = sh(e);
  r.info["ghost_semiring"] = (e == s.one);
  if (s.finite()) {
    auto tangible = nlohmann::json::array(), ghost = nlohmann::json::array();
    for (const auto& x : s.elements) {
      if (s.is_tangible(x)) tangible.push_back(sh(x));
      else if (!(x == s.zero)) ghost.push_back(sh(x));
    }
    r.info["tangible"] = tangible;
    r.info["ghost"] = ghost;
  }
  return r;
}

/// 𝒯·𝒯 ⊆ 𝒯, and when that holds, e𝒯 cancellative.
template <class T>
Report tangible_closed_check(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name.empty() ? "semiring" : s.name;
  r.checked = {"tangibles closed", "eT cancellative"};
  auto sh = [&](const T& x) { return show(s, x); };
  for_each_pair(s, cfg, r, [&](const T& a, const T& b) {
    if (s.is_tangible(a) && s.is_tangible(b) && !s.is_tangible(s.mul(a, b)))
      r.fail("tangibles closed", {sh(a), sh(b)}, "product " + sh(s.mul(a, b)));
  });
  if (!r.ok()) return r;
  for_each_triple(s, cfg, r, [&](const T& a, const T& b, const T& c) {
    if (!s.is_tangible(a) || !s.is_tangible(b) || !s.is_tangible(c)) return;
    T ea = s.nu(a), eb = s.nu(b), ec = s.nu(c);
    if (!(ea == eb) && s.mul(ea, ec) == s.mul(eb, ec)) r.fail("eT cancellative", {sh(a), sh(b), sh(c)});
  });
  return r;
}

/// A finite supertropical semiring given by table, with e = 1+1 and ν(x) = ex.
struct FiniteSupertropical {
  FiniteSemiringTable table;
  int e = 0;
  std::vector<int> nu;
  /// Values read from a document, kept for cross-checking against the recomputation.
  std::optional<int> declared_e;
  std::optional<std::vector<int>> declared_nu;

  static FiniteSupertropical from_table(FiniteSemiringTable t);
  Semiring<int> semiring() const { return as_semiring(table); }
  int size() const { return table.size(); }
  bool is_tangible(int x) const { return nu[x] != x; }
  bool is_ghost(int x) const { return x != table.zero && nu[x] == x; }
  const std::string& name(int x) const { return table.names[x]; }
};

FiniteSupertropical supertropical_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteSupertropical& u);
FiniteSupertropical load_supertropical(const std::string& path);

/// Runs the axiom suite; also cross-checks declared "e"/"nu" fields.
Report check_supertropical_axioms(const FiniteSupertropical& u);
Report check_supertropical_axioms(const FiniteSemiringTable& t);

/// Recomputes the addition table from (mul, e, ghost order) by the three-way rule.
std::vector<std::vector<int>> rebuild_addition(const FiniteSupertropical& u);

Report tangible_closed_check(const FiniteSupertropical& u);

/// Restriction of the table to the ghost ideal eU, with one = e.
FiniteSemiringTable ghost_ideal(const FiniteSupertropical& u);

/// Restriction to a subset closed under both operations containing 0 and 1.
FiniteSemiringTable restrict_table(const FiniteSemiringTable& t, const std::vector<int>& subset);

/// All subsets containing 0 and 1 closed under + and · (exponential; carriers up to ~16).
std::vector<std::vector<int>> subsemirings(const FiniteSemiringTable& t);

}  // namespace supertrop
