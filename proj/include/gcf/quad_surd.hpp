#pragma once

#include <string>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"

namespace gcf {

/// Real quadratic irrational (a + b*sqrt(d))/c in canonical form:
/// d > 1 squarefree, b != 0, c >= 1, gcd(a, b, c) = 1.
///
/// Instances are only produced by normalize_surd() and by arithmetic that
/// keeps an already squarefree radicand, so every value has exactly one
/// representation and field-wise equality is value equality.
class QuadSurd {
 public:
  /// Builds a surd whose radicand is already known to be squarefree and > 1.
  /// Fixes the sign of c and divides out gcd(a, b, c).
  static QuadSurd with_squarefree_radicand(Integer a, Integer b, Integer c, Integer d) {
    if (sgn(c) == 0) throw Error(Errc::zero_denominator, "surd with zero denominator");
    if (sgn(c) < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    const Integer g = gcd(a, b, c);
    if (g != 1) {
      a /= g;
      b /= g;
      c /= g;
    }
    return QuadSurd(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

  /// Same syntax the number parser accepts: "(a+b*sqrt(d))/c".
  std::string to_string() const {
    std::string out = "(" + a_.get_str();
    out += sgn(b_) < 0 ? "-" : "+";
    out += Integer(abs(b_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
    return out;
  }

 private:
  QuadSurd(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Integer a_;
  Integer b_;
  Integer c_;
  Integer d_;
};

inline QuadSurd conjugate(const QuadSurd& x) {
  return QuadSurd::with_squarefree_radicand(x.a(), Integer(-x.b()), x.c(), x.d());
}

/// Primitive integer polynomial c*X^2 + d*X + e with c > 0.
struct QuadraticPoly {
  Integer c;
  Integer d;
  Integer e;

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;

  Integer discriminant() const { return d * d - 4 * c * e; }

  /// e.g. "X^2+2X-1"
  std::string to_string() const {
    auto term = [](const Integer& coeff, const char* mono, bool first) {
      std::string s;
      if (sgn(coeff) == 0) return s;
      if (sgn(coeff) < 0) s += "-";
      else if (!first) s += "+";
      const Integer m = abs(coeff);
      if (m != 1 || *mono == '\0') s += m.get_str();
      s += mono;
      return s;
    };
    std::string out = term(c, "X^2", true);
    out += term(d, "X", out.empty());
    out += term(e, "", out.empty());
    return out.empty() ? "0" : out;
  }
};

/// (c x - a)^2 = b^2 d, made primitive.
inline QuadraticPoly minimal_polynomial(const QuadSurd& x) {
  Integer c = x.c() * x.c();
  Integer d = -2 * x.a() * x.c();
  Integer e = x.a() * x.a() - x.b() * x.b() * x.d();
  const Integer g = gcd(c, d, e);
  c /= g;
  d /= g;
  e /= g;
  return {c, d, e};
}

}  // namespace gcf
