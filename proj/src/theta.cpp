#include "supertrop/theta.hpp"

#include <stdexcept>

namespace supertrop {

const Rational& Theta::exponent() const {
  if (!exp_) throw std::logic_error("exponent of 0_M");
  return *exp_;
}

Theta Theta::inverse() const {
  if (!exp_) throw std::domain_error("0_M has no inverse");
  return Theta(Rational(-*exp_));
}

std::string Theta::str() const {
  if (!exp_) return "0";
  if (*exp_ == 0) return "1";
  return "th^" + exponent_string(*exp_);
}

Theta operator*(const Theta& a, const Theta& b) {
  if (!a.exp_ || !b.exp_) return {};
  return Theta(Rational(*a.exp_ + *b.exp_));
}

Theta operator+(const Theta& a, const Theta& b) { return a < b ? b : a; }

bool operator<(const Theta& a, const Theta& b) {
  if (!b.exp_) return false;
  if (!a.exp_) return true;
  return *a.exp_ > *b.exp_;
}

Rational random_exponent(Rng& rng, long bound, long max_den) {
  long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  long p = std::uniform_int_distribution<long>(-bound * q, bound * q)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Semiring<Theta> theta_semiring() {
  Semiring<Theta> s;
  s.name = "T(R>0) in theta notation";
  s.zero = Theta::bottom();
  s.one = Theta::unit();
  s.add = [](const Theta& a, const Theta& b) { return a + b; };
  s.mul = [](const Theta& a, const Theta& b) { return a * b; };
  s.show = [](const Theta& a) { return a.str(); };
  s.landmarks = {Theta::bottom(), Theta(0L), Theta(1L), Theta(-1L), Theta(Rational(1, 2)), Theta(2L)};
  s.sample = [](Rng& rng) {
    if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) return Theta::bottom();
    return Theta(random_exponent(rng));
  };
  return s;
}

Semiring<Theta> theta_powers(unsigned n) {
  auto s = theta_semiring();
  s.name = "theta powers";
  s.elements.push_back(Theta::bottom());
  for (unsigned k = 0; k <= n; ++k) s.elements.push_back(Theta(static_cast<long>(k)));
  s.landmarks.clear();
  s.sample = nullptr;
  return s;
}

}  // namespace supertrop
