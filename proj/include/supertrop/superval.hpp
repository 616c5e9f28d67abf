#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supertrop/supertropical.hpp"
#include "supertrop/valuation.hpp"

namespace supertrop {

template <class R, class U>
struct Supervaluation {
  std::string name;
  Semiring<R> domain;
  Semiring<U> target;
  std::function<U(const R&)> map;

  U operator()(const R& x) const { return map(x); }
};

/// The ghost ideal eU as a bipotent semiring with unit e.
template <class U>
Semiring<U> ghost_ideal_semiring(const Semiring<U>& u) {
  Semiring<U> m = u;
  m.name = "e" + (u.name.empty() ? std::string("U") : u.name);
  m.one = u.e();
  m.elements.clear();
  for (const auto& x : u.elements)
    if (u.in_ghost_ideal(x)) m.elements.push_back(x);
  m.landmarks.clear();
  for (const auto& x : u.landmarks) {
    U g = u.nu(x);
    if (std::find(m.landmarks.begin(), m.landmarks.end(), g) == m.landmarks.end()) m.landmarks.push_back(g);
  }
  if (u.sample) {
    auto smp = u.sample;
    m.sample = [smp, u](Rng& rng) { return u.nu(smp(rng)); };
  }
  return m;
}

/// v = e∘φ.
template <class R, class U>
MValuation<R, U> cover_of(const Supervaluation<R, U>& phi) {
  MValuation<R, U> v;
  v.name = "e o " + phi.name;
  v.domain = phi.domain;
  v.target = ghost_ideal_semiring(phi.target);
  auto t = phi.target;
  auto f = phi.map;
  v.map = [t, f](const R& a) { return t.nu(f(a)); };
  return v;
}

/// SV1-SV4, plus the tangible / ghost / neither classification in info["kind"].
template <class R, class U>
Report check_supervaluation(const Supervaluation<R, U>& phi, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = phi.name;
  r.checked = {"SV1", "SV2", "SV3", "SV4"};
  const auto& D = phi.domain;
  const auto& T = phi.target;
  auto sr = [&](const R& x) { return show(D, x); };
  if (!(phi(D.zero) == T.zero)) r.fail("SV1", {sr(D.zero)});
  if (!(phi(D.one) == T.one)) r.fail("SV2", {sr(D.one)}, "phi(1) = " + show(T, phi(D.one)));
  bool all_tangible = true, all_ghost = true;
  for_each_point(D, cfg, r, [&](const R& a) {
    U x = phi(a);
    if (T.is_ghost(x)) all_tangible = false;
    if (T.is_tangible(x)) all_ghost = false;
  });
  for_each_pair(D, cfg, r, [&](const R& a, const R& b) {
    U pa = phi(a), pb = phi(b);
    if (!(phi(D.mul(a, b)) == T.mul(pa, pb))) r.fail("SV3", {sr(a), sr(b)});
    if (!T.leq(T.nu(phi(D.add(a, b))), T.nu(T.add(pa, pb)))) r.fail("SV4", {sr(a), sr(b)});
  });
  r.info["kind"] = all_tangible ? "tangible" : all_ghost ? "ghost" : "neither";
  return r;
}

/// SV5: φ(a)+φ(b) tangible ⇒ φ(a)+φ(b) = φ(a+b).
template <class R, class U>
Report is_tangibly_additive(const Supervaluation<R, U>& phi, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = phi.name;
  r.checked = {"SV5"};
  const auto& T = phi.target;
  for_each_pair(phi.domain, cfg, r, [&](const R& a, const R& b) {
    U s = T.add(phi(a), phi(b));
    if (T.is_tangible(s) && !(s == phi(phi.domain.add(a, b))))
      r.fail("SV5", {show(phi.domain, a), show(phi.domain, b)},
             "sum " + show(T, s) + ", phi(a+b) = " + show(T, phi(phi.domain.add(a, b))));
  });
  return r;
}

/// SV5*: eφ(a) < eφ(b) ⇒ φ(a+b) = φ(b).
template <class R, class U>
Report is_very_strong(const Supervaluation<R, U>& phi, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = phi.name;
  r.checked = {"SV5*"};
  const auto& T = phi.target;
  for_each_pair(phi.domain, cfg, r, [&](const R& a, const R& b) {
    U pa = phi(a), pb = phi(b);
    if (T.less(T.nu(pa), T.nu(pb)) && !(phi(phi.domain.add(a, b)) == pb))
      r.fail("SV5*", {show(phi.domain, a), show(phi.domain, b)});
  });
  return r;
}

/// Strong supervaluation: tangibly additive with a strong cover.
template <class R, class U>
Report is_strong_superval(const Supervaluation<R, U>& phi, const CheckConfig& cfg = {}) {
  auto r = is_tangibly_additive(phi, cfg);
  r.merge(is_strong(cover_of(phi), cfg));
  return r;
}

/// D1-D3 for φ ≥ ψ.
template <class R, class U, class V>
Report check_dominance(const Supervaluation<R, U>& phi, const Supervaluation<R, V>& psi,
                       const CheckConfig& cfg = {}) {
  Report r;
  r.subject = phi.name + " over " + psi.name;
  r.checked = {"D1", "D2", "D3"};
  const auto& U_ = phi.target;
  const auto& V_ = psi.target;
  auto sr = [&](const R& x) { return show(phi.domain, x); };
  for_each_point(phi.domain, cfg, r, [&](const R& a) {
    if (U_.in_ghost_ideal(phi(a)) && !V_.in_ghost_ideal(psi(a))) r.fail("D3", {sr(a)});
  });
  for_each_pair(phi.domain, cfg, r, [&](const R& a, const R& b) {
    U pa = phi(a), pb = phi(b);
    V qa = psi(a), qb = psi(b);
    if (pa == pb && !(qa == qb)) r.fail("D1", {sr(a), sr(b)});
    if (U_.leq(U_.nu(pa), U_.nu(pb)) && !V_.leq(V_.nu(qa), V_.nu(qb))) r.fail("D2", {sr(a), sr(b)});
  });
  return r;
}

/// Two-sided dominance, the equivalence of covers.
template <class R, class U, class V>
Report equivalent_covers(const Supervaluation<R, U>& phi, const Supervaluation<R, V>& psi,
                         const CheckConfig& cfg = {}) {
  auto r = check_dominance(phi, psi, cfg);
  auto back = check_dominance(psi, phi, cfg);
  for (auto& w : back.witnesses) w.rule += " reverse";
  for (auto& c : back.checked) c += " reverse";
  r.merge(back);
  r.subject = phi.name + " ~ " + psi.name;
  return r;
}

template <class U, class V>
struct Transmission {
  std::string name;
  Semiring<U> source;
  Semiring<V> target;
  std::function<V(const U&)> map;

  V operator()(const U& x) const { return map(x); }
  /// α restricted to eU.
  V ghost_part(const U& x) const { return map(source.nu(x)); }
};

/// TM1-TM5, the additivity cases for equal ghost values and tangible sums, and whether α is a
/// semiring homomorphism (info["homomorphism"], info["ghost_injective"]).
template <class U, class V>
Report check_transmission(const Transmission<U, V>& alpha, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = alpha.name;
  r.checked = {"TM1", "TM2", "TM3", "TM4", "TM5", "equal fiber additive", "tangible sum additive",
               "injective ghost part"};
  const auto& S = alpha.source;
  const auto& T = alpha.target;
  auto su = [&](const U& x) { return show(S, x); };
  if (!(alpha(S.zero) == T.zero)) r.fail("TM1", {su(S.zero)});
  if (!(alpha(S.one) == T.one)) r.fail("TM2", {su(S.one)});
  if (!(alpha(S.e()) == T.e())) r.fail("TM4", {su(S.e())}, "alpha(e) = " + show(T, alpha(S.e())));
  bool hom = true, ghost_injective = true;
  for_each_pair(S, cfg, r, [&](const U& x, const U& y) {
    V ax = alpha(x), ay = alpha(y);
    if (!(alpha(S.mul(x, y)) == T.mul(ax, ay))) r.fail("TM3", {su(x), su(y)});
    V sum = T.add(ax, ay), img = alpha(S.add(x, y));
    bool additive = sum == img;
    if (!additive) hom = false;
    if (S.in_ghost_ideal(x) && S.in_ghost_ideal(y) && !additive) r.fail("TM5", {su(x), su(y)});
    if (S.nu(x) == S.nu(y) && !additive) r.fail("equal fiber additive", {su(x), su(y)});
    if (T.is_tangible(sum) && !additive) r.fail("tangible sum additive", {su(x), su(y)});
    U gx = S.nu(x), gy = S.nu(y);
    if (!(gx == gy) && alpha(gx) == alpha(gy)) ghost_injective = false;
  });
  if (ghost_injective && !hom) r.fail("injective ghost part", {}, "ghost part injective but alpha not additive");
  r.info["homomorphism"] = hom;
  r.info["ghost_injective"] = ghost_injective;
  return r;
}

template <class R, class U, class V>
Supervaluation<R, V> compose(const Transmission<U, V>& alpha, const Supervaluation<R, U>& phi) {
  Supervaluation<R, V> out;
  out.name = alpha.name + " o " + phi.name;
  out.domain = phi.domain;
  out.target = alpha.target;
  out.map = [alpha, phi](const R& a) { return alpha(phi(a)); };
  return out;
}

template <class U, class V, class W>
Transmission<U, W> compose(const Transmission<V, W>& beta, const Transmission<U, V>& alpha) {
  Transmission<U, W> out;
  out.name = beta.name + " o " + alpha.name;
  out.source = alpha.source;
  out.target = beta.target;
  out.map = [alpha, beta](const U& x) { return beta(alpha(x)); };
  return out;
}

template <class U>
Transmission<U, U> identity_transmission(const Semiring<U>& u) {
  return {"id", u, u, [](const U& x) { return x; }};
}

template <class U>
Transmission<U, U> ghost_transmission(const Semiring<U>& u) {
  return {"nu", u, ghost_ideal_semiring(u), [u](const U& x) { return u.nu(x); }};
}

/// The identity of U viewed as a supervaluation on U; it covers ν_U.
template <class U>
Supervaluation<U, U> identity_superval(const Semiring<U>& u) {
  return {"id", u, u, [](const U& x) { return x; }};
}

/// The unique α with ψ = α∘φ and α∘ν = ν∘α, glued from β: φ(a) ↦ ψ(a) and γ: eφ(a) ↦ eψ(a).
/// Needs a finite domain (exhaustive dominance evidence) and φ surjective onto φ(R) ∪ eφ(R) = U.
template <class R, class U, class V>
Transmission<U, V> derive_transmission(const Supervaluation<R, U>& phi, const Supervaluation<R, V>& psi) {
  if (!phi.domain.finite() || !phi.target.finite())
    throw AlgebraError("insufficient evidence: dominance can only be sampled on this instance");
  auto dom = check_dominance(phi, psi);
  if (dom.mode != CheckMode::exhaustive) throw AlgebraError("insufficient evidence: dominance was sampled");
  if (!dom.ok()) throw AlgebraError("phi does not dominate psi", dom);
  const auto& U_ = phi.target;
  const auto& V_ = psi.target;
  std::vector<std::pair<U, V>> table;
  auto lookup = [&](const U& x) -> std::pair<U, V>* {
    for (auto& p : table)
      if (p.first == x) return &p;
    return nullptr;
  };
  std::vector<R> from;
  auto put = [&](const U& x, const V& y, const R& a) {
    if (auto* p = lookup(x)) {
      if (!(p->second == y)) {
        Report r;
        r.subject = "transmission gluing";
        r.checked = {"well defined"};
        r.fail("well defined", {show(phi.domain, from[p - table.data()]), show(phi.domain, a)});
        throw AlgebraError("transmission not well defined", r);
      }
      return;
    }
    table.emplace_back(x, y);
    from.push_back(a);
  };
  for (const auto& a : phi.domain.elements) put(phi(a), psi(a), a);
  for (const auto& a : phi.domain.elements) put(U_.nu(phi(a)), V_.nu(psi(a)), a);
  for (const auto& x : U_.elements)
    if (!lookup(x)) throw AlgebraError("phi is not surjective: " + show(U_, x) + " is not in phi(R) u e*phi(R)");
  Transmission<U, V> alpha;
  alpha.name = "alpha(" + psi.name + ", " + phi.name + ")";
  alpha.source = U_;
  alpha.target = V_;
  alpha.map = [table](const U& x) {
    for (const auto& p : table)
      if (p.first == x) return p.second;
    throw AlgebraError("transmission undefined at this element");
  };
  return alpha;
}

/// The endomorphism fixing fibers over L and ghosting the others. L is a predicate on eU \ {0};
/// it must contain e, be multiplicatively closed, and satisfy M·(M\L) ⊆ M\L.
template <class U>
Transmission<U, U> fiber_contraction_L(const Semiring<U>& u, std::function<bool(const U&)> L,
                                       const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "fiber contraction";
  r.checked = {"e in L", "L closed", "complement absorbing"};
  auto m = ghost_ideal_semiring(u);
  auto inL = [&](const U& x) { return !(x == u.zero) && L(x); };
  if (!inL(u.e())) r.fail("e in L", {show(u, u.e())});
  for_each_pair(m, cfg, r, [&](const U& x, const U& y) {
    if (x == u.zero || y == u.zero) return;
    U xy = u.mul(x, y);
    if (inL(x) && inL(y) && !inL(xy)) r.fail("L closed", {show(u, x), show(u, y)});
    if (!inL(y) && inL(xy)) r.fail("complement absorbing", {show(u, x), show(u, y)});
  });
  if (!r.ok()) throw AlgebraError("L violates the fiber contraction hypotheses: " + r.witnesses.front().rule, r);
  Transmission<U, U> alpha;
  alpha.name = "alpha_L";
  alpha.source = u;
  alpha.target = u;
  alpha.map = [u, L](const U& x) {
    U ex = u.nu(x);
    if (ex == u.zero || L(ex)) return x;
    return ex;
  };
  return alpha;
}

/// Nonzero elements of a bipotent semiring as an ordered monoid.
template <class M>
Monoid<M> nonzero_monoid(const Semiring<M>& m) {
  Monoid<M> g;
  g.name = m.name + " minus 0";
  g.unit = m.one;
  g.mul = m.mul;
  g.less = [m](const M& a, const M& b) { return m.less(a, b); };
  g.show = m.show;
  for (const auto& x : m.elements)
    if (!(x == m.zero)) g.elements.push_back(x);
  for (const auto& x : m.landmarks)
    if (!(x == m.zero)) g.landmarks.push_back(x);
  if (m.sample) {
    auto smp = m.sample;
    auto z = m.zero;
    g.sample = [smp, z](Rng& rng) {
      for (;;) {
        M x = smp(rng);
        if (!(x == z)) return x;
      }
    };
  }
  return g;
}

/// R \ 𝔮 as a multiplicative monoid (order unused).
template <class R, class M>
Monoid<R> tangible_part(const MValuation<R, M>& v) {
  Monoid<R> t;
  t.name = v.domain.name + " minus supp";
  t.unit = v.domain.one;
  t.mul = v.domain.mul;
  t.show = v.domain.show;
  for (const auto& x : v.domain.elements)
    if (!v.in_support(x)) t.elements.push_back(x);
  for (const auto& x : v.domain.landmarks)
    if (!v.in_support(x)) t.landmarks.push_back(x);
  if (v.domain.sample) {
    auto smp = v.domain.sample;
    t.sample = [smp, v](Rng& rng) {
      for (;;) {
        R x = smp(rng);
        if (!v.in_support(x)) return x;
      }
    };
  }
  return t;
}

template <class R, class M>
struct InitialCover {
  STRStructure<R, M> structure;
  Supervaluation<R, STElement<R, M>> phi;
};

/// U(v) = STR(R\𝔮, M\{0}, v) and φ_v(a) = a for a outside the support, 0 inside.
template <class R, class M>
InitialCover<R, M> initial_cover(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  auto t = tangible_part(v);
  auto g = nonzero_monoid(v.target);
  auto map = v.map;
  auto s = str_construct<R, M>(t, g, [map](const R& a) { return map(a); }, cfg);
  s.name = "U(" + v.name + ")";
  Supervaluation<R, STElement<R, M>> phi;
  phi.name = "phi_" + v.name;
  phi.domain = v.domain;
  phi.target = s.semiring();
  phi.map = [v](const R& a) -> STElement<R, M> {
    if (v.in_support(a)) return std::monostate{};
    return Tan<R>{a};
  };
  return {std::move(s), std::move(phi)};
}

/// D(M) for a cancellative bipotent semiring M.
template <class M>
STRStructure<M, M> d_of_semiring(const Semiring<M>& m, const CheckConfig& cfg = {}) {
  auto s = d_of(nonzero_monoid(m), cfg);
  s.name = "D(" + m.name + ")";
  return s;
}

/// v̂: the tangible lift of v into D(M).
template <class R, class M>
Supervaluation<R, STElement<M, M>> hat_v(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  auto d = d_of_semiring(v.target, cfg);
  Supervaluation<R, STElement<M, M>> h;
  h.name = "hat " + v.name;
  h.domain = v.domain;
  h.target = d.semiring();
  h.map = [v](const R& a) -> STElement<M, M> {
    M x = v(a);
    if (x == v.target.zero) return std::monostate{};
    return Tan<M>{x};
  };
  return h;
}

/// s∘v for a tangible multiplicative section s of the ghost map; `ghost_of` embeds M into eU.
template <class R, class M, class U>
Supervaluation<R, U> tangible_section_cover(std::function<U(const M&)> s, std::function<U(const M&)> ghost_of,
                                            const Semiring<U>& u, const MValuation<R, M>& v,
                                            const CheckConfig& cfg = {}) {
  Report r;
  r.subject = "tangible section";
  r.checked = {"s(0)=0", "s(1)=1", "s multiplicative", "nu o s = id", "s tangible"};
  const auto& M_ = v.target;
  if (!(s(M_.zero) == u.zero)) r.fail("s(0)=0", {show(M_, M_.zero)});
  if (!(s(M_.one) == u.one)) r.fail("s(1)=1", {show(M_, M_.one)});
  for_each_point(M_, cfg, r, [&](const M& x) {
    if (!(u.nu(s(x)) == ghost_of(x))) r.fail("nu o s = id", {show(M_, x)});
    if (u.is_ghost(s(x))) r.fail("s tangible", {show(M_, x)});
  });
  for_each_pair(M_, cfg, r, [&](const M& x, const M& y) {
    if (!(s(M_.mul(x, y)) == u.mul(s(x), s(y)))) r.fail("s multiplicative", {show(M_, x), show(M_, y)});
  });
  if (!r.ok()) throw AlgebraError("not a tangible multiplicative section: " + r.witnesses.front().rule, r);
  Supervaluation<R, U> out;
  out.name = "s o " + v.name;
  out.domain = v.domain;
  out.target = u;
  out.map = [s, v](const R& a) { return s(v(a)); };
  return out;
}

/// a ~_v b via the instance oracle.
template <class R, class M>
std::function<bool(const R&, const R&)> sv_relation(const MValuation<R, M>& v) {
  if (!v.sv_oracle) throw AlgebraError("unsupported: " + v.name + " has no decision procedure for ~_v");
  return v.sv_oracle;
}

/// Ū(v) = STR(R̄ \ 𝔮̄, M\{0}, v̄) and φ̄_v(a) = [a]_v, classes stored by representative.
template <class R, class M>
InitialCover<R, M> initial_very_strong(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  if (!v.sv_oracle || !v.sv_representative)
    throw AlgebraError("unsupported: " + v.name + " has no decision procedure for ~_v");
  auto rep = v.sv_representative;
  auto t = tangible_part(v);
  t.name = "classes of " + t.name;
  for (auto& x : t.landmarks) x = rep(x);
  for (auto& x : t.elements) x = rep(x);
  auto mul = t.mul;
  t.mul = [mul, rep](const R& a, const R& b) { return rep(mul(a, b)); };
  if (t.sample) {
    auto smp = t.sample;
    t.sample = [smp, rep](Rng& rng) { return rep(smp(rng)); };
  }
  auto map = v.map;
  auto s = str_construct<R, M>(t, nonzero_monoid(v.target), [map](const R& a) { return map(a); }, cfg);
  s.name = "Ubar(" + v.name + ")";
  Supervaluation<R, STElement<R, M>> phi;
  phi.name = "phibar_" + v.name;
  phi.domain = v.domain;
  phi.target = s.semiring();
  phi.map = [v, rep](const R& a) -> STElement<R, M> {
    if (v.in_support(a)) return std::monostate{};
    return Tan<R>{rep(a)};
  };
  return {std::move(s), std::move(phi)};
}

}  // namespace supertrop
