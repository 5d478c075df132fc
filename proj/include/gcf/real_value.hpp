#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"
#include "gcf/quad_surd.hpp"
#include "gcf/rational.hpp"

namespace gcf {

/// An exact real that is either rational or a real quadratic irrational.
class RealValue {
 public:
  RealValue(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  RealValue(QuadSurd s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  RealValue(long n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_surd() const noexcept { return std::holds_alternative<QuadSurd>(v_); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadSurd& surd() const { return std::get<QuadSurd>(v_); }

  const std::variant<Rational, QuadSurd>& variant() const noexcept { return v_; }

  std::string to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
  }

  friend bool operator==(const RealValue&, const RealValue&) = default;
  friend std::strong_ordering operator<=>(const RealValue& x, const RealValue& y);

 private:
  std::variant<Rational, QuadSurd> v_;
};

namespace detail {

/// (a + b*sqrt(d))/c with c > 0; rationals use b = 0, d = 0.
struct LinearForm {
  Integer a;
  Integer b;
  Integer c;
  Integer d;
};

inline LinearForm linear_form(const RealValue& x) {
  if (x.is_rational()) return {x.rational().num(), 0, x.rational().den(), 0};
  const QuadSurd& s = x.surd();
  return {s.a(), s.b(), s.c(), s.d()};
}

/// Sign of p + r*sqrt(e), e >= 0, by case analysis and one squaring.
inline int sign_of(const Integer& p, const Integer& r, const Integer& e) {
  const int sp = sgn(p);
  const int sr = sgn(e) == 0 ? 0 : sgn(r);
  if (sr == 0) return sp;
  if (sp == 0 || sp == sr) return sr;
  const Integer diff = p * p - r * r * e;
  return sp * sgn(diff);
}

}  // namespace detail

/// Exact three-way comparison using integer arithmetic only.
inline std::strong_ordering compare(const RealValue& x, const RealValue& y) {
  const detail::LinearForm u = detail::linear_form(x);
  const detail::LinearForm v = detail::linear_form(y);
  // (x - y) * c1 * c2 = A + B*sqrt(d1) + C*sqrt(d2)
  const Integer A = u.a * v.c - v.a * u.c;
  const Integer B = u.b * v.c;
  const Integer C = -v.b * u.c;
  int s = 0;
  if (sgn(B) == 0) {
    s = detail::sign_of(A, C, v.d);
  } else if (sgn(C) == 0) {
    s = detail::sign_of(A, B, u.d);
  } else if (u.d == v.d) {
    s = detail::sign_of(A, Integer(B + C), u.d);
  } else {
    // S = B*sqrt(d1) + C*sqrt(d2)
    int ss = 0;
    if (sgn(B) == sgn(C)) {
      ss = sgn(B);
    } else {
      ss = sgn(B) * sgn(Integer(B * B * u.d - C * C * v.d));
    }
    const int sa = sgn(A);
    if (ss == 0 || sa == ss) {
      s = sa == 0 ? ss : sa;
    } else if (sa == 0) {
      s = ss;
    } else {
      // A^2 - S^2 = (A^2 - B^2 d1 - C^2 d2) - 2BC sqrt(d1 d2)
      s = sa * detail::sign_of(Integer(A * A - B * B * u.d - C * C * v.d),
                               Integer(-2 * B * C), Integer(u.d * v.d));
    }
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering operator<=>(const RealValue& x, const RealValue& y) {
  return compare(x, y);
}

/// Exact floor.
inline Integer floor(const RealValue& x) {
  if (x.is_rational()) return floor_div(x.rational().num(), x.rational().den());
  const QuadSurd& s = x.surd();
  // b*sqrt(d) is irrational, so isqrt gives its floor from one side.
  const Integer root = isqrt(Integer(s.b() * s.b() * s.d()));
  const Integer fl = sgn(s.b()) > 0 ? root : Integer(-root - 1);
  // For n < v < n+1 no multiple of c lies strictly inside (n, v].
  return floor_div(Integer(s.a() + fl), s.c());
}

namespace detail {

/// Splits n > 0 as f^2 * k with k squarefree. Primes up to the cube root of
/// the unfactored part are removed by trial division; what remains then has
/// at most two prime factors, so it is squarefree unless it is a square.
inline void split_square(Integer& n, Integer& f) {
  f = 1;
  Integer kernel = 1;
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    const Integer cube = Integer(p) * p * p;
    if (cube > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) kernel *= p;
  }
  if (n > 1 && is_perfect_square(n)) {
    f *= isqrt(n);
    n = 1;
  }
  n *= kernel;
}

}  // namespace detail

/// Canonicalizes (a + b*sqrt(d))/c. Square factors of d move into b;
/// collapses to Rational when b = 0 or the radicand becomes 0 or 1.
inline RealValue normalize_surd(Integer a, Integer b, Integer c, Integer d) {
  if (sgn(c) == 0) throw Error(Errc::zero_denominator, "surd with zero denominator");
  if (sgn(d) < 0) throw Error(Errc::negative_radicand, "negative radicand " + d.get_str());
  if (sgn(b) == 0 || sgn(d) == 0) return Rational(std::move(a), std::move(c));
  Integer f;
  detail::split_square(d, f);
  b *= f;
  if (d == 1) return Rational(Integer(a + b), std::move(c));
  return QuadSurd::with_squarefree_radicand(std::move(a), std::move(b), std::move(c),
                                            std::move(d));
}

/// The unique root of c X^2 + d X + e strictly inside (0,1).
inline QuadSurd root_in_unit_interval(Integer c, Integer d, Integer e) {
  if (sgn(c) == 0) throw Error(Errc::no_root_in_interval, "leading coefficient is zero");
  const Integer g = gcd(c, d, e);
  c /= g;
  d /= g;
  e /= g;
  const Integer disc = d * d - 4 * c * e;
  if (sgn(disc) < 0) throw Error(Errc::no_root_in_interval, "polynomial has no real roots");
  if (is_perfect_square(disc)) {
    throw Error(Errc::rational_root, "discriminant " + disc.get_str() + " is a perfect square");
  }
  const RealValue zero(0L);
  const RealValue one(1L);
  int found = 0;
  std::optional<QuadSurd> root;
  for (const long s : {1L, -1L}) {
    RealValue r = normalize_surd(Integer(-d), Integer(s), Integer(2 * c), disc);
    if (zero < r && r < one) {
      ++found;
      root = r.surd();
    }
  }
  if (found != 1) {
    throw Error(Errc::no_root_in_interval,
                found == 0 ? "no root lies in (0,1)" : "both roots lie in (0,1)");
  }
  return *root;
}

}  // namespace gcf

template <>
struct std::hash<gcf::Rational> {
  std::size_t operator()(const gcf::Rational& r) const {
    std::size_t seed = gcf::hash_value(r.num());
    gcf::hash_combine(seed, gcf::hash_value(r.den()));
    return seed;
  }
};

template <>
struct std::hash<gcf::QuadSurd> {
  std::size_t operator()(const gcf::QuadSurd& s) const {
    std::size_t seed = gcf::hash_value(s.a());
    gcf::hash_combine(seed, gcf::hash_value(s.b()));
    gcf::hash_combine(seed, gcf::hash_value(s.c()));
    gcf::hash_combine(seed, gcf::hash_value(s.d()));
    return seed;
  }
};

template <>
struct std::hash<gcf::RealValue> {
  std::size_t operator()(const gcf::RealValue& x) const {
    if (x.is_rational()) return std::hash<gcf::Rational>{}(x.rational());
    return std::hash<gcf::QuadSurd>{}(x.surd()) ^ 0x5bd1e995ULL;
  }
};
