#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "supertrop/instances.hpp"
#include "supertrop/poly.hpp"
#include "supertrop/superval.hpp"

namespace supertrop {

/// x ⊨ y: x = y + z for some z ∈ eU. Tangible x needs x = y; zero x needs y = 0; ghost x needs ν(x) ≥ ν(y).
template <class U>
bool gs(const Semiring<U>& u, const U& x, const U& y) {
  if (u.is_tangible(x)) return x == y;
  if (x == u.zero) return y == u.zero;
  return u.leq(u.nu(y), u.nu(x));
}

/// Antisymmetry, transitivity, and compatibility of ⊨ with + and ·.
template <class U>
Report check_gs_laws(const Semiring<U>& u, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "ghost surpassing on " + u.name;
  r.checked = {"antisymmetric", "transitive", "add compatible", "mul compatible"};
  auto sh = [&](const U& x) { return show(u, x); };
  for_each_triple(u, cfg, r, [&](const U& x, const U& y, const U& z) {
    bool xy = gs(u, x, y);
    if (xy && gs(u, y, x) && !(x == y)) r.fail("antisymmetric", {sh(x), sh(y)});
    if (xy && gs(u, y, z) && !gs(u, x, z)) r.fail("transitive", {sh(x), sh(y), sh(z)});
    if (xy && !gs(u, u.add(x, z), u.add(y, z))) r.fail("add compatible", {sh(x), sh(y), sh(z)});
    if (xy && !gs(u, u.mul(x, z), u.mul(y, z))) r.fail("mul compatible", {sh(x), sh(y), sh(z)});
  });
  return r;
}

/// y ⊨ x in the upper-bound sense: y = x + a for some a, by scanning a finite carrier.
template <class T>
bool ub(const Semiring<T>& s, const T& x, const T& y) {
  if (!s.finite()) throw AlgebraError("ub needs a finite carrier or an instance oracle");
  for (const auto& a : s.elements)
    if (s.add(x, a) == y) return true;
  return false;
}

/// x + a + b = x ⇒ x + a = x.
template <class T>
Report check_ub_semiring(const Semiring<T>& s, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = s.name;
  r.checked = {"upper bound"};
  for_each_triple(s, cfg, r, [&](const T& x, const T& a, const T& b) {
    if (s.add(s.add(x, a), b) == x && !(s.add(x, a) == x)) r.fail("upper bound", {show(s, x), show(s, a), show(s, b)});
  });
  return r;
}

Report check_ub_semiring(const FiniteSemiringTable& t);

struct CornerReport {
  std::vector<std::string> point;
  std::vector<Multidegree> dominating;
  std::string max;
  bool zero_max = false;
  bool in_locus = false;

  nlohmann::json to_json() const;
};

/// Argmax of the monomials of g at b. A point where every monomial vanishes counts as in the locus.
template <class M>
CornerReport corner_query(const Semiring<M>& m, const Polynomial<M>& g, const std::vector<M>& b) {
  if (b.size() != g.nvars) throw std::invalid_argument("arity mismatch");
  CornerReport c;
  for (const auto& x : b) c.point.push_back(show(m, x));
  M best = m.zero;
  for (const auto& [d, coef] : g.terms) {
    M val = m.mul(coef, monomial_value(m, d, b));
    if (m.less(best, val)) {
      best = val;
      c.dominating.clear();
    }
    if (val == best) c.dominating.push_back(d);
  }
  c.max = show(m, best);
  c.zero_max = best == m.zero;
  c.in_locus = c.zero_max || c.dominating.size() >= 2;
  return c;
}

/// ε_b(f) ∈ eU ∪ {0}.
template <class U>
bool root_query(const Semiring<U>& u, const Polynomial<U>& f, const std::vector<U>& b) {
  return u.in_ghost_ideal(evaluate(u, f, b));
}

/// Root with every coordinate in 𝒯(U) ∪ {0}.
template <class U>
bool tangible_root_query(const Semiring<U>& u, const Polynomial<U>& f, const std::vector<U>& b) {
  for (const auto& x : b)
    if (!(x == u.zero) && !u.is_tangible(x)) return false;
  return root_query(u, f, b);
}

/// Coefficients of g lifted tangibly into D(M).
template <class M>
Polynomial<STElement<M, M>> tangible_lift(const Polynomial<M>& g) {
  Polynomial<STElement<M, M>> r{g.nvars, {}};
  for (const auto& [d, c] : g.terms) r.terms.emplace(d, Tan<M>{c});
  return r;
}

template <class M>
std::vector<STElement<M, M>> tangible_lift(const Semiring<M>& m, const std::vector<M>& b) {
  std::vector<STElement<M, M>> r;
  for (const auto& x : b) r.push_back(x == m.zero ? STElement<M, M>{} : STElement<M, M>{Tan<M>{x}});
  return r;
}

template <class R, class U>
std::vector<U> map_each(const Supervaluation<R, U>& phi, const std::vector<R>& a) {
  std::vector<U> r;
  for (const auto& x : a) r.push_back(phi(x));
  return r;
}

template <class R, class M>
std::vector<M> map_each(const MValuation<R, M>& v, const std::vector<R>& a) {
  std::vector<M> r;
  for (const auto& x : a) r.push_back(v(x));
  return r;
}

/// ε_{φ(a)}(φ̃(f)) ⊨ φ(ε_a(f)); φ is assumed tangibly additive (checked separately).
template <class R, class U>
Report kapranov_gs_check(const Supervaluation<R, U>& phi, const Polynomial<R>& f, const std::vector<R>& a) {
  Report r;
  r.subject = "gs after evaluation";
  r.checked = {"gs"};
  const auto& T = phi.target;
  U left = evaluate(T, coeff_map(T, phi.map, f), map_each(phi, a));
  U right = phi(evaluate(phi.domain, f, a));
  if (!gs(T, left, right)) r.fail("gs", {poly_string(phi.domain, f)}, show(T, left) + " vs " + show(T, right));
  r.info["left"] = show(T, left);
  r.info["right"] = show(T, right);
  r.note_coverage(CheckMode::exhaustive, 1);
  return r;
}

/// v(a) ∈ Corn(ṽ(f)) for a root a of f; throws "a is not a root" otherwise.
template <class R, class M>
Report kapranov_corner_check(const MValuation<R, M>& v, const Polynomial<R>& f, const std::vector<R>& a) {
  if (!(evaluate(v.domain, f, a) == v.domain.zero)) throw AlgebraError("a is not a root");
  Report r;
  r.subject = "corner locus contains v(root)";
  r.checked = {"corner"};
  auto vf = coeff_map(v.target, v.map, f);
  auto c = corner_query(v.target, vf, map_each(v, a));
  if (!c.in_locus) r.fail("corner", {poly_string(v.domain, f)}, "dominating " + std::to_string(c.dominating.size()));
  r.info["corner"] = c.to_json();
  r.note_coverage(CheckMode::exhaustive, 1);
  return r;
}

/// IQV1-IQV4 with ≤ the order induced by +; strict IQV3 cases are listed in info["strict_IQV3"].
template <class A, class N>
Report check_iq_valuation(const Semiring<A>& domain, const Semiring<N>& target, std::function<N(const A&)> w,
                          const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "iq-valuation";
  r.checked = {"target idempotent", "IQV1", "IQV2", "IQV3", "IQV4"};
  auto sa = [&](const A& x) { return show(domain, x); };
  for_each_point(target, cfg, r, [&](const N& x) {
    if (!(target.add(x, x) == x)) r.fail("target idempotent", {show(target, x)});
  });
  if (!(w(domain.zero) == target.zero)) r.fail("IQV1", {sa(domain.zero)});
  if (!(w(domain.one) == target.one)) r.fail("IQV2", {sa(domain.one)}, "w(1) = " + show(target, w(domain.one)));
  auto& strict = r.info["strict_IQV3"] = nlohmann::json::array();
  for_each_pair(domain, cfg, r, [&](const A& f, const A& g) {
    N lhs = w(domain.mul(f, g)), rhs = target.mul(w(f), w(g));
    if (!target.leq(lhs, rhs)) r.fail("IQV3", {sa(f), sa(g)});
    else if (!(lhs == rhs) && strict.size() < 8) strict.push_back({sa(f), sa(g)});
    if (!target.leq(w(domain.add(f, g)), target.add(w(f), w(g)))) r.fail("IQV4", {sa(f), sa(g)});
  });
  return r;
}

/// ṽ: R[λ] → M[λ].
template <class R, class M>
std::function<Polynomial<M>(const Polynomial<R>&)> coeff_valuation(const MValuation<R, M>& v) {
  return [v](const Polynomial<R>& f) { return coeff_map(v.target, v.map, f); };
}

/// ε_a∘ṽ as an m-valuation on R[λ].
template <class R, class M>
MValuation<Polynomial<R>, M> eval_valuation(const MValuation<R, M>& v, const std::vector<M>& a, unsigned deg = 4,
                                            unsigned max_terms = 6) {
  MValuation<Polynomial<R>, M> w;
  w.name = "eval o " + v.name + "~";
  w.domain = polynomial_semiring(v.domain, static_cast<unsigned>(a.size()), deg, max_terms);
  w.target = v.target;
  w.map = [v, a](const Polynomial<R>& f) { return evaluate(v.target, coeff_map(v.target, v.map, f), a); };
  return w;
}

/// ε_a∘φ̃ as a supervaluation on R[λ].
template <class R, class U>
Supervaluation<Polynomial<R>, U> eval_superval(const Supervaluation<R, U>& phi, const std::vector<U>& a,
                                               unsigned deg = 4, unsigned max_terms = 6) {
  Supervaluation<Polynomial<R>, U> s;
  s.name = "eval o " + phi.name + "~";
  s.domain = polynomial_semiring(phi.domain, static_cast<unsigned>(a.size()), deg, max_terms);
  s.target = phi.target;
  s.map = [phi, a](const Polynomial<R>& f) { return evaluate(phi.target, coeff_map(phi.target, phi.map, f), a); };
  return s;
}

/// Every a_i must be v of some recorded element: the instance lift, else a landmark or sample.
template <class R, class M>
void require_image(const MValuation<R, M>& v, const std::vector<M>& a, const CheckConfig& cfg) {
  for (const auto& m : a) {
    if (v.lift && v.lift(m)) continue;
    bool found = false;
    for (const auto& c : v.domain.landmarks) found = found || v(c) == m;
    if (!found && v.domain.sample) {
      Rng rng(cfg.seed);
      for (std::size_t i = 0; i < cfg.samples && !found; ++i) found = v(v.domain.sample(rng)) == m;
    }
    if (!found) throw AlgebraError("a outside the recorded image of " + v.name + ": " + show(v.target, m));
  }
}

/// V1-V4, multiplicativity and the strong rule for ε_a∘ṽ on sampled polynomial pairs.
template <class R, class M>
Report eval_strong_check(const MValuation<R, M>& v, const std::vector<M>& a, const CheckConfig& cfg = {}) {
  require_image(v, a, cfg);
  auto w = eval_valuation(v, a);
  auto r = check_mvaluation(w, cfg);
  r.merge(is_strong(w, cfg));
  r.subject = w.name;
  return r;
}

/// ε_a∘φ̃ is a strong supervaluation covering ε_{ea}∘ṽ.
template <class R, class U>
Report eval_superval_check(const Supervaluation<R, U>& phi, const std::vector<U>& a, const CheckConfig& cfg = {}) {
  auto s = eval_superval(phi, a);
  auto r = check_supervaluation(s, cfg);
  r.merge(is_strong_superval(s, cfg));
  auto v = cover_of(phi);
  std::vector<U> ea;
  for (const auto& x : a) ea.push_back(phi.target.nu(x));
  auto w = eval_valuation(v, ea);
  r.checked.push_back("covers eval o v~");
  for_each_point(s.domain, cfg, r, [&](const Polynomial<R>& f) {
    if (!(phi.target.nu(s(f)) == w(f))) r.fail("covers eval o v~", {show(s.domain, f)});
  });
  r.subject = s.name;
  return r;
}

/// For `trials` sampled (f, g, c): a = v(c) and ε_a∘ṽ is multiplicative and strong on (f, g).
template <class R, class M>
Report eval_strong_trials(const MValuation<R, M>& v, unsigned nvars, std::size_t trials, const CheckConfig& cfg = {},
                          unsigned deg = 4, unsigned max_terms = 6) {
  Report r;
  r.subject = "eval o " + v.name + "~ on sampled triples";
  r.checked = {"V3", "strong"};
  Rng rng(cfg.seed);
  auto P = polynomial_semiring(v.domain, nvars, deg, max_terms);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<R> c;
    for (unsigned i = 0; i < nvars; ++i) c.push_back(v.domain.sample(rng));
    auto a = map_each(v, c);
    auto f = random_poly(v.domain, rng, nvars, deg, max_terms);
    auto g = random_poly(v.domain, rng, nvars, deg, max_terms);
    auto w = [&](const Polynomial<R>& h) { return evaluate(v.target, coeff_map(v.target, v.map, h), a); };
    M wf = w(f), wg = w(g);
    std::string sa;
    for (const auto& x : a) sa += (sa.empty() ? "" : ",") + show(v.target, x);
    if (!(w(P.mul(f, g)) == v.target.mul(wf, wg))) r.fail("V3", {show(P, f), show(P, g), sa});
    if (!(wf == wg) && !(w(P.add(f, g)) == v.target.add(wf, wg))) r.fail("strong", {show(P, f), show(P, g), sa});
  }
  r.note_coverage(CheckMode::sampled, trials);
  return r;
}

/// x ∧ y = xy/(x+y) with 0 ∧ x = 0; checks (x∨y)(x∧y) = xy, both distributive laws, a(x∧y) = ax ∧ ay.
template <class T>
Report semifield_lattice_check(const Semiring<T>& s, std::function<T(const T&)> inverse, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "semifield lattice on " + s.name;
  r.checked = {"join times meet", "join distributes", "meet distributes", "meet translation"};
  auto meet_ = [&](const T& x, const T& y) {
    if (x == s.zero || y == s.zero) return s.zero;
    return s.mul(s.mul(x, y), inverse(s.add(x, y)));
  };
  auto sh = [&](const T& x) { return show(s, x); };
  for_each_triple(s, cfg, r, [&](const T& x, const T& y, const T& z) {
    if (!(s.mul(s.add(x, y), meet_(x, y)) == s.mul(x, y))) r.fail("join times meet", {sh(x), sh(y)});
    if (!(s.add(x, meet_(y, z)) == meet_(s.add(x, y), s.add(x, z)))) r.fail("join distributes", {sh(x), sh(y), sh(z)});
    if (!(meet_(x, s.add(y, z)) == s.add(meet_(x, y), meet_(x, z)))) r.fail("meet distributes", {sh(x), sh(y), sh(z)});
    if (!(s.mul(z, meet_(x, y)) == meet_(s.mul(z, x), s.mul(z, y)))) r.fail("meet translation", {sh(z), sh(x), sh(y)});
  });
  return r;
}

// ---- manufactured-root experiments ----

struct KapranovConfig {
  std::string instance = "puiseux";  // puiseux | padic
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  unsigned deg = 4;
  unsigned vars = 3;
  /// Perturb the root before checking, so the precondition should reject.
  bool fault_injection = false;
};

/// Runs the corner and gs checks on f = Σ g_i(λ_i − a_i); the JSON summary is deterministic.
nlohmann::json run_kapranov(const KapranovConfig& cfg);

}  // namespace supertrop
