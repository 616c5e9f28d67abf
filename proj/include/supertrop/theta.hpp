#pragma once

#include <optional>
#include <string>

#include "supertrop/rational.hpp"
#include "supertrop/semiring.hpp"

namespace supertrop {

/// An element ϑ^q of M = ℝ≥0 for a fixed symbolic 0 < ϑ < 1, stored by its exact exponent.
/// The bottom element (no exponent) is 0_M. Larger exponent means smaller value.
class Theta {
 public:
  Theta() = default;  // 0_M
  explicit Theta(Rational exponent) : exp_(std::move(exponent)) { exp_->canonicalize(); }
  explicit Theta(long exponent) : exp_(Rational(exponent)) {}

  static Theta bottom() { return {}; }
  static Theta unit() { return Theta(0L); }

  bool is_bottom() const { return !exp_.has_value(); }
  const Rational& exponent() const;

  Theta inverse() const;
  std::string str() const;

  friend Theta operator*(const Theta& a, const Theta& b);
  /// max under the value order
  friend Theta operator+(const Theta& a, const Theta& b);
  friend bool operator==(const Theta& a, const Theta& b) { return a.exp_ == b.exp_; }
  /// value order: ϑ^p < ϑ^q iff p > q; bottom below everything
  friend bool operator<(const Theta& a, const Theta& b);
  friend bool operator<=(const Theta& a, const Theta& b) { return a < b || a == b; }
  friend bool operator>(const Theta& a, const Theta& b) { return b < a; }
  friend bool operator>=(const Theta& a, const Theta& b) { return b <= a; }

 private:
  std::optional<Rational> exp_;
};

/// Display label of ϑ; arithmetic never reads it.
inline const char* kThetaLabel = "1/2";

/// Random exponent p/q with q in [1, max_den] and |p/q| <= bound.
Rational random_exponent(Rng& rng, long bound = 4, long max_den = 3);

/// The bipotent semifield T(ℝ>0) in ϑ-notation, sampled over small rational exponents.
Semiring<Theta> theta_semiring();

/// The bipotent semiring of ϑ-powers with nonnegative integer exponents and bottom,
/// truncated to exponents <= n for enumeration. Products leaving the range are not truncated.
Semiring<Theta> theta_powers(unsigned n);

}  // namespace supertrop
