#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

#include "supertrop/poly.hpp"

namespace supertrop {

unsigned total_degree(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), 0u); }

Multidegree add_degrees(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("arity mismatch");
  Multidegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::string monomial_string(const Multidegree& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (d[i] > 1) out += "^" + std::to_string(d[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

using Poly = Polynomial<PuiseuxSeries>;

const Semiring<PuiseuxSeries>& ring() {
  static const auto r = puiseux_ring<Rational>();
  return r;
}

class Parser {
 public:
  Parser(const std::string& s, unsigned n) : s_(s), n_(n) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  bool starts_primary() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'x' || c == '(';
  }
  std::string digits() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected digits");
    return s_.substr(b, i_ - b);
  }
  Rational number() {
    std::string t = digits();
    if (peek('/')) {
      ++i_;
      t += "/" + digits();
    }
    return parse_rational(t);
  }

  Poly constant(const PuiseuxSeries& c) { return constant_poly(ring(), n_, c); }

  Poly expr() {
    Poly acc{n_, {}};
    bool first = true;
    for (;;) {
      bool neg = false;
      if (first) {
        if (eat('-')) neg = true;
        else eat('+');
      } else if (eat('-')) {
        neg = true;
      } else if (!eat('+')) {
        break;
      }
      first = false;
      Poly t = term();
      if (neg) t = poly_mul(ring(), t, constant(PuiseuxSeries(-1)));
      acc = poly_add(ring(), acc, t);
    }
    return acc;
  }

  Poly term() {
    bool neg = eat('-');
    Poly acc = factor();
    for (;;) {
      if (eat('*')) acc = poly_mul(ring(), acc, factor());
      else if (starts_primary()) acc = poly_mul(ring(), acc, factor());
      else break;
    }
    if (neg) acc = poly_mul(ring(), acc, constant(PuiseuxSeries(-1)));
    return acc;
  }

  unsigned small_power() {
    std::string d = digits();
    if (d.size() > 4) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  Rational t_exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      Rational q = number();
      if (!eat(')')) fail("expected ')'");
      return neg ? Rational(-q) : q;
    }
    bool neg = eat('-');
    Rational q(digits().c_str());
    return neg ? Rational(-q) : q;
  }

  Poly factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == 't') {
      ++i_;
      Rational q(1);
      if (eat('^')) q = t_exponent();
      return constant(PuiseuxSeries::t(q));
    }
    Poly base{n_, {}};
    if (c == 'x') {
      ++i_;
      unsigned k = static_cast<unsigned>(std::stoul(digits()));
      if (k == 0 || k > n_) fail("variable x" + std::to_string(k) + " out of range");
      base = variable_poly(ring(), n_, k - 1, PuiseuxSeries(1));
    } else if (c == '(') {
      ++i_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = number();
      base = constant(PuiseuxSeries(q, Rational(0)));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (eat('^')) {
      unsigned k = small_power();
      Poly r = constant(PuiseuxSeries(1));
      for (unsigned j = 0; j < k; ++j) r = poly_mul(ring(), r, base);
      return r;
    }
    return base;
  }

  const std::string& s_;
  unsigned n_;
  std::size_t i_ = 0;
};

unsigned max_variable(const std::string& s) {
  unsigned n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x') continue;
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i + 1 && j - i - 1 <= 6) n = std::max(n, static_cast<unsigned>(std::stoul(s.substr(i + 1, j - i - 1))));
  }
  return n;
}

}  // namespace

Polynomial<PuiseuxSeries> parse_polynomial(const std::string& text, unsigned nvars) {
  unsigned used = max_variable(text);
  if (nvars == 0) nvars = used;
  if (used > nvars) throw std::invalid_argument("parse error: variable x" + std::to_string(used) + " exceeds arity");
  return Parser(text, nvars).parse();
}

PuiseuxSeries parse_series(const std::string& text) {
  auto p = Parser(text, 0).parse();
  if (p.terms.empty()) return {};
  return p.terms.begin()->second;
}

}  // namespace supertrop
