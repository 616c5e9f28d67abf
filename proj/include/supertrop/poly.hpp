#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertrop/puiseux.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

using Multidegree = std::vector<unsigned>;

unsigned total_degree(const Multidegree& d);
Multidegree add_degrees(const Multidegree& a, const Multidegree& b);
/// "x1^2*x3", or "1" for the zero tuple.
std::string monomial_string(const Multidegree& d);

/// Graded lexicographic order.
struct GradedLex {
  bool operator()(const Multidegree& a, const Multidegree& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse polynomial in n variables; zero coefficients are never stored.
template <class S>
struct Polynomial {
  unsigned nvars = 0;
  std::map<Multidegree, S, GradedLex> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

template <class S>
Polynomial<S> constant_poly(const Semiring<S>& s, unsigned n, const S& c) {
  Polynomial<S> f{n, {}};
  if (!(c == s.zero)) f.terms.emplace(Multidegree(n, 0), c);
  return f;
}

/// c·λ_i (i is zero based).
template <class S>
Polynomial<S> variable_poly(const Semiring<S>& s, unsigned n, unsigned i, const S& c) {
  if (i >= n) throw std::out_of_range("variable index");
  Polynomial<S> f{n, {}};
  Multidegree d(n, 0);
  d[i] = 1;
  if (!(c == s.zero)) f.terms.emplace(d, c);
  return f;
}

template <class S>
void add_term(const Semiring<S>& s, Polynomial<S>& f, const Multidegree& d, const S& c) {
  if (d.size() != f.nvars) throw std::invalid_argument("arity mismatch");
  auto it = f.terms.find(d);
  if (it == f.terms.end()) {
    if (!(c == s.zero)) f.terms.emplace(d, c);
    return;
  }
  it->second = s.add(it->second, c);
  if (it->second == s.zero) f.terms.erase(it);
}

template <class S>
Polynomial<S> poly_add(const Semiring<S>& s, const Polynomial<S>& f, const Polynomial<S>& g) {
  if (f.nvars != g.nvars) throw std::invalid_argument("arity mismatch");
  Polynomial<S> r = f;
  for (const auto& [d, c] : g.terms) add_term(s, r, d, c);
  return r;
}

template <class S>
Polynomial<S> poly_mul(const Semiring<S>& s, const Polynomial<S>& f, const Polynomial<S>& g) {
  if (f.nvars != g.nvars) throw std::invalid_argument("arity mismatch");
  Polynomial<S> r{f.nvars, {}};
  for (const auto& [d, c] : f.terms)
    for (const auto& [e, k] : g.terms) add_term(s, r, add_degrees(d, e), s.mul(c, k));
  return r;
}

/// Applies `map` to each coefficient, dropping terms sent to the target's zero.
template <class S, class T, class Map>
Polynomial<T> coeff_map(const Semiring<T>& t, Map&& map, const Polynomial<S>& f) {
  Polynomial<T> r{f.nvars, {}};
  for (const auto& [d, c] : f.terms) {
    T x = map(c);
    if (!(x == t.zero)) r.terms.emplace(d, x);
  }
  return r;
}

template <class S>
S monomial_value(const Semiring<S>& s, const Multidegree& d, const std::vector<S>& a) {
  S r = s.one;
  for (std::size_t i = 0; i < d.size(); ++i) r = s.mul(r, s.pow(a[i], d[i]));
  return r;
}

/// ε_a(f) in S's arithmetic.
template <class S>
S evaluate(const Semiring<S>& s, const Polynomial<S>& f, const std::vector<S>& a) {
  if (a.size() != f.nvars) throw std::invalid_argument("arity mismatch: polynomial in " + std::to_string(f.nvars) +
                                                       " variables evaluated at a " + std::to_string(a.size()) + "-tuple");
  S r = s.zero;
  for (const auto& [d, c] : f.terms) r = s.add(r, s.mul(c, monomial_value(s, d, a)));
  return r;
}

template <class S>
std::string poly_string(const Semiring<S>& s, const Polynomial<S>& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string c = show(s, it->second);
    bool unit_degree = total_degree(it->first) == 0;
    if (unit_degree) {
      out += c;
    } else if (it->second == s.one) {
      out += monomial_string(it->first);
    } else {
      out += "(" + c + ")*" + monomial_string(it->first);
    }
  }
  return out;
}

/// Random polynomial: total degree ≤ deg, at most `max_terms` terms, coefficients from s.sample.
template <class S>
Polynomial<S> random_poly(const Semiring<S>& s, Rng& rng, unsigned n, unsigned deg, unsigned max_terms) {
  Polynomial<S> f{n, {}};
  unsigned k = std::uniform_int_distribution<unsigned>(1, max_terms)(rng);
  for (unsigned i = 0; i < k; ++i) {
    Multidegree d(n, 0);
    unsigned budget = std::uniform_int_distribution<unsigned>(0, deg)(rng);
    for (unsigned j = 0; j < budget && n > 0; ++j) ++d[std::uniform_int_distribution<unsigned>(0, n - 1)(rng)];
    add_term(s, f, d, s.sample(rng));
  }
  return f;
}

/// S[λ_1..λ_n] as a semiring; samples have degree ≤ deg and ≤ max_terms terms.
template <class S>
Semiring<Polynomial<S>> polynomial_semiring(const Semiring<S>& s, unsigned n, unsigned deg = 4,
                                            unsigned max_terms = 6) {
  using P = Polynomial<S>;
  Semiring<P> r;
  r.name = s.name + "[lambda]";
  r.zero = P{n, {}};
  r.one = constant_poly(s, n, s.one);
  r.add = [s](const P& f, const P& g) { return poly_add(s, f, g); };
  r.mul = [s](const P& f, const P& g) { return poly_mul(s, f, g); };
  r.show = [s](const P& f) { return poly_string(s, f); };
  for (const auto& c : s.landmarks) r.landmarks.push_back(constant_poly(s, n, c));
  if (n > 0)
    for (const auto& c : s.landmarks)
      if (!(c == s.zero)) r.landmarks.push_back(poly_add(s, variable_poly(s, n, 0, s.one), constant_poly(s, n, c)));
  if (s.sample) r.sample = [s, n, deg, max_terms](Rng& rng) { return random_poly(s, rng, n, deg, max_terms); };
  return r;
}

/// Parses the polynomial grammar (series coefficients, variables x1..xn) into `nvars` variables;
/// nvars = 0 means "as many as the largest index used".
Polynomial<PuiseuxSeries> parse_polynomial(const std::string& text, unsigned nvars = 0);

}  // namespace supertrop
