#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supertrop/report.hpp"

namespace supertrop {

using Rng = std::mt19937_64;

struct CheckConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  /// Finite carriers up to this size are scanned exhaustively for triple laws.
  std::size_t exhaustive_triples = 64;
};

class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
  AlgebraError(const std::string& what, Report r) : std::runtime_error(what), report_(std::move(r)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Element access shared by every structure: a finite enumeration when one exists,
/// otherwise landmark points followed by seeded random draws.
template <class T>
struct Carrier {
  std::function<std::string(const T&)> show;
  std::vector<T> elements;
  std::vector<T> landmarks;
  std::function<T(Rng&)> sample;

  bool finite() const { return !elements.empty(); }
};

template <class T>
struct Semiring : Carrier<T> {
  std::string name;
  T zero{};
  T one{};
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;

  T e() const { return add(one, one); }
  T nu(const T& x) const { return mul(e(), x); }
  bool leq(const T& a, const T& b) const { return add(a, b) == b; }
  bool less(const T& a, const T& b) const { return leq(a, b) && !(a == b); }
  /// In eU, i.e. fixed by the ghost map; includes zero.
  bool in_ghost_ideal(const T& x) const { return nu(x) == x; }
  bool is_ghost(const T& x) const { return !(x == zero) && in_ghost_ideal(x); }
  bool is_tangible(const T& x) const { return !in_ghost_ideal(x); }
  T pow(T x, unsigned k) const {
    T r = one;
    for (; k; k >>= 1, x = mul(x, x))
      if (k & 1) r = mul(r, x);
    return r;
  }
};

template <class T>
struct Monoid : Carrier<T> {
  std::string name;
  T unit{};
  std::function<T(const T&, const T&)> mul;
  /// Strict total order; empty for an unordered monoid.
  std::function<bool(const T&, const T&)> less;
};

namespace detail {

template <class T>
std::vector<T> pool(const Carrier<T>& c, Rng& rng, std::size_t n) {
  std::vector<T> out = c.landmarks;
  if (c.sample)
    for (std::size_t i = 0; i < n; ++i) out.push_back(c.sample(rng));
  return out;
}

}  // namespace detail

/// Visits single elements: all of them for finite carriers, otherwise landmarks then samples.
template <class T, class F>
void for_each_point(const Carrier<T>& c, const CheckConfig& cfg, Report& r, F&& f) {
  if (c.finite()) {
    for (const auto& x : c.elements) f(x);
    r.note_coverage(CheckMode::exhaustive, c.elements.size());
    return;
  }
  Rng rng(cfg.seed);
  auto pts = detail::pool(c, rng, cfg.samples);
  for (const auto& x : pts) f(x);
  r.note_coverage(CheckMode::sampled, pts.size());
}

/// Visits ordered pairs: exhaustive on finite carriers; otherwise all landmark pairs then
/// `cfg.samples` random pairs.
template <class T, class F>
void for_each_pair(const Carrier<T>& c, const CheckConfig& cfg, Report& r, F&& f) {
  if (c.finite()) {
    for (const auto& x : c.elements)
      for (const auto& y : c.elements) f(x, y);
    r.note_coverage(CheckMode::exhaustive, c.elements.size() * c.elements.size());
    return;
  }
  for (const auto& x : c.landmarks)
    for (const auto& y : c.landmarks) f(x, y);
  std::size_t n = c.landmarks.size() * c.landmarks.size();
  if (c.sample) {
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      T x = c.sample(rng);
      T y = c.sample(rng);
      f(x, y);
    }
    n += cfg.samples;
  }
  r.note_coverage(CheckMode::sampled, n);
}

template <class T, class F>
void for_each_triple(const Carrier<T>& c, const CheckConfig& cfg, Report& r, F&& f) {
  if (c.finite() && c.elements.size() <= cfg.exhaustive_triples) {
    for (const auto& x : c.elements)
      for (const auto& y : c.elements)
        for (const auto& z : c.elements) f(x, y, z);
    auto n = c.elements.size();
    r.note_coverage(CheckMode::exhaustive, n * n * n);
    return;
  }
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t n = 0;
  if (!c.finite()) {
    for (const auto& x : c.landmarks)
      for (const auto& y : c.landmarks)
        for (const auto& z : c.landmarks) f(x, y, z);
    n = c.landmarks.size() * c.landmarks.size() * c.landmarks.size();
  }
  auto draw = [&]() -> T {
    if (c.finite()) return c.elements[std::uniform_int_distribution<std::size_t>(0, c.elements.size() - 1)(rng)];
    return c.sample(rng);
  };
  if (c.finite() || c.sample) {
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      T x = draw();
      T y = draw();
      T z = draw();
      f(x, y, z);
    }
    n += cfg.samples;
  }
  r.note_coverage(CheckMode::sampled, n);
}

template <class T>
std::string show(const Carrier<T>& c, const T& x) {
  return c.show ? c.show(x) : std::string("?");
}

}  // namespace supertrop
