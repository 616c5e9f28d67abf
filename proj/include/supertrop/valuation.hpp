#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supertrop/core_order.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

/// An m-valuation v: R -> M into a bipotent semiring.
template <class R, class M>
struct MValuation {
  std::string name;
  Semiring<R> domain;
  Semiring<M> target;
  std::function<M(const R&)> map;
  /// Extra points of v⁻¹(0) to pair against in sensitivity checks; domain points are used otherwise.
  Carrier<R> support_points;
  /// Explicit description of the support when one is known, e.g. "{0}".
  std::string support_description;
  /// Decision procedure for a ~_v b (same class modulo strictly smaller values), when one exists.
  std::function<bool(const R&, const R&)> sv_oracle;
  /// A canonical member of the ~_v class of a.
  std::function<R(const R&)> sv_representative;
  /// Some c with v(c) = m, or nullopt outside the image; optional.
  std::function<std::optional<R>(const M&)> lift;

  M operator()(const R& x) const { return map(x); }
  bool in_support(const R& x) const { return map(x) == target.zero; }
};

template <class R, class M>
Report check_mvaluation(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name;
  r.checked = {"V1", "V2", "V3", "V4"};
  const auto& R_ = v.domain;
  const auto& M_ = v.target;
  auto sr = [&](const R& x) { return show(R_, x); };
  if (!(v(R_.zero) == M_.zero)) r.fail("V1", {sr(R_.zero)}, "v(0) = " + show(M_, v(R_.zero)));
  if (!(v(R_.one) == M_.one)) r.fail("V2", {sr(R_.one)}, "v(1) = " + show(M_, v(R_.one)));
  for_each_pair(R_, cfg, r, [&](const R& x, const R& y) {
    M vx = v(x), vy = v(y);
    if (!(v(R_.mul(x, y)) == M_.mul(vx, vy))) r.fail("V3", {sr(x), sr(y)});
    M vs = v(R_.add(x, y));
    if (!M_.leq(vs, M_.add(vx, vy)))
      r.fail("V4", {sr(x), sr(y)}, "v(x+y) = " + show(M_, vs) + " exceeds " + show(M_, M_.add(vx, vy)));
  });
  return r;
}

/// V5: v(x+y) = v(x) + v(y) for all pairs.
template <class R, class M>
Report is_strict(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name;
  r.checked = {"V5"};
  for_each_pair(v.domain, cfg, r, [&](const R& x, const R& y) {
    M lhs = v(v.domain.add(x, y)), rhs = v.target.add(v(x), v(y));
    if (!(lhs == rhs))
      r.fail("V5", {show(v.domain, x), show(v.domain, y)},
             "v(x+y) = " + show(v.target, lhs) + ", v(x)+v(y) = " + show(v.target, rhs));
  });
  return r;
}

/// v(a+b) = max(v(a), v(b)) whenever v(a) != v(b).
template <class R, class M>
Report is_strong(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name;
  r.checked = {"strong"};
  for_each_pair(v.domain, cfg, r, [&](const R& a, const R& b) {
    M va = v(a), vb = v(b);
    if (va == vb) return;
    M lhs = v(v.domain.add(a, b)), rhs = v.target.add(va, vb);
    if (!(lhs == rhs))
      r.fail("strong", {show(v.domain, a), show(v.domain, b)},
             "v(a+b) = " + show(v.target, lhs) + ", max = " + show(v.target, rhs));
  });
  return r;
}

template <class R, class M>
std::function<bool(const R&)> support(const MValuation<R, M>& v) {
  return [v](const R& x) { return v.in_support(x); };
}

/// Support closed under +, absorbing ·, with multiplicatively closed complement.
template <class R, class M>
Report check_support_prime(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name;
  r.checked = {"support additive", "support absorbing", "complement multiplicative"};
  auto sr = [&](const R& x) { return show(v.domain, x); };
  auto visit = [&](const R& x, const R& y) {
    bool zx = v.in_support(x), zy = v.in_support(y);
    if (zx && zy && !v.in_support(v.domain.add(x, y))) r.fail("support additive", {sr(x), sr(y)});
    if (zy && !v.in_support(v.domain.mul(x, y))) r.fail("support absorbing", {sr(x), sr(y)});
    if (!zx && !zy && v.in_support(v.domain.mul(x, y))) r.fail("complement multiplicative", {sr(x), sr(y)});
  };
  for_each_pair(v.domain, cfg, r, visit);
  if (v.support_points.finite() || !v.support_points.landmarks.empty() || v.support_points.sample) {
    for_each_point(v.domain, cfg, r, [&](const R& x) {
      for_each_point(v.support_points, cfg, r, [&](const R& z) { visit(x, z); });
    });
  }
  return r;
}

/// v(x + z) = v(x) for x in R and z in the support.
template <class R, class M>
Report is_insensitive(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name;
  r.checked = {"insensitive"};
  auto visit = [&](const R& x, const R& z) {
    if (!v.in_support(z)) return;
    if (!(v(v.domain.add(x, z)) == v(x)))
      r.fail("insensitive", {show(v.domain, x), show(v.domain, z)},
             "v(x+z) = " + show(v.target, v(v.domain.add(x, z))) + ", v(x) = " + show(v.target, v(x)));
  };
  bool extra = v.support_points.finite() || !v.support_points.landmarks.empty() || v.support_points.sample;
  if (extra) {
    CheckConfig inner = cfg;
    inner.samples = std::max<std::size_t>(1, cfg.samples / 32);
    for_each_point(v.domain, inner, r, [&](const R& x) {
      for_each_point(v.support_points, inner, r, [&](const R& z) { visit(x, z); });
    });
  }
  for_each_pair(v.domain, cfg, r, visit);
  return r;
}

/// v ≥ w: v(a) ≤ v(b) ⇒ w(a) ≤ w(b). When both are strong, the weaker equality criterion
/// (v(a) = v(b) ⇒ w(a) = w(b)) is evaluated too and must agree with the outcome.
template <class R, class M, class N>
Report dominates_mval(const MValuation<R, M>& v, const MValuation<R, N>& w, const CheckConfig& cfg = {}) {
  Report r;
  r.subject = v.name + " over " + w.name;
  r.checked = {"dominance"};
  bool equality_criterion = true;
  for_each_pair(v.domain, cfg, r, [&](const R& a, const R& b) {
    M va = v(a), vb = v(b);
    N wa = w(a), wb = w(b);
    if (v.target.leq(va, vb) && !w.target.leq(wa, wb))
      r.fail("dominance", {show(v.domain, a), show(v.domain, b)},
             "v: " + show(v.target, va) + " <= " + show(v.target, vb) + ", w: " + show(w.target, wa) + " > " +
                 show(w.target, wb));
    if (va == vb && !(wa == wb)) equality_criterion = false;
  });
  bool strong_both = is_strong(v, cfg).ok() && is_strong(w, cfg).ok();
  r.info["equality_criterion"] = equality_criterion;
  r.info["both_strong"] = strong_both;
  if (strong_both) {
    r.checked.push_back("equality criterion agrees");
    if (equality_criterion != r.ok())
      r.fail("equality criterion agrees", {}, equality_criterion ? "criterion holds, dominance fails"
                                                                  : "dominance holds, criterion fails");
  }
  return r;
}

/// γ_{w,v}: the map with w = γ∘v, as an association on the recorded image of v.
template <class M, class N>
struct GammaMap {
  std::vector<std::pair<M, N>> table;
  Report checks;

  bool defined_at(const M& m) const {
    for (const auto& [a, b] : table)
      if (a == m) return true;
    return false;
  }
  N operator()(const M& m) const {
    for (const auto& [a, b] : table)
      if (a == m) return b;
    throw AlgebraError("gamma undefined outside the recorded image");
  }
};

template <class R, class M, class N>
GammaMap<M, N> gamma_of(const MValuation<R, M>& v, const MValuation<R, N>& w, const CheckConfig& cfg = {}) {
  GammaMap<M, N> g;
  Report& r = g.checks;
  r.subject = "gamma of " + w.name + " over " + v.name;
  r.checked = {"well defined", "0 to 0", "1 to 1", "multiplicative", "order preserving"};
  std::vector<R> witness;
  auto record = [&](const R& a) {
    M m = v(a);
    N n = w(a);
    for (std::size_t i = 0; i < g.table.size(); ++i) {
      if (!(g.table[i].first == m)) continue;
      if (!(g.table[i].second == n)) {
        r.fail("well defined", {show(v.domain, witness[i]), show(v.domain, a)});
        throw AlgebraError("v does not dominate w: gamma is not well defined", r);
      }
      return;
    }
    g.table.emplace_back(m, n);
    witness.push_back(a);
  };
  record(v.domain.zero);
  record(v.domain.one);
  for_each_point(v.domain, cfg, r, record);
  for (const auto& x : v.domain.landmarks) record(x);
  if (!(g(v.target.zero) == w.target.zero)) r.fail("0 to 0", {show(v.target, v.target.zero)});
  if (!(g(v.target.one) == w.target.one)) r.fail("1 to 1", {show(v.target, v.target.one)});
  for (const auto& [a, ga] : g.table)
    for (const auto& [b, gb] : g.table) {
      M ab = v.target.mul(a, b);
      if (g.defined_at(ab) && !(g(ab) == w.target.mul(ga, gb)))
        r.fail("multiplicative", {show(v.target, a), show(v.target, b)});
      if (v.target.leq(a, b) && !w.target.leq(ga, gb)) r.fail("order preserving", {show(v.target, a), show(v.target, b)});
    }
  return g;
}

/// γ∘v as an m-valuation into N.
template <class R, class M, class N>
MValuation<R, N> compose(const GammaMap<M, N>& g, const MValuation<R, M>& v, Semiring<N> target) {
  MValuation<R, N> w;
  w.name = "gamma o " + v.name;
  w.domain = v.domain;
  w.target = std::move(target);
  w.map = [g, v](const R& x) { return g(v(x)); };
  return w;
}

}  // namespace supertrop
