#pragma once

#include <compare>
#include <string>
#include <utility>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"
#include "gcf/real_value.hpp"

namespace gcf {

/// 2x2 integer matrix [[e00, e01], [e10, e11]]. Acts on reals projectively:
/// x -> (e00 x + e01) / (e10 x + e11).
struct Mat2 {
  Integer e00;
  Integer e01;
  Integer e10;
  Integer e11;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Integer det() const { return e00 * e11 - e01 * e10; }
  Integer trace() const { return e00 + e11; }

  /// det(M) * M^-1.
  Mat2 adjugate() const { return {e11, Integer(-e01), Integer(-e10), e00}; }

  /// Integer inverse; requires |det| = 1.
  Mat2 inverse() const {
    const Integer d = det();
    if (d == 1) return adjugate();
    if (d == -1) return {Integer(-e11), e01, e10, Integer(-e00)};
    throw Error(Errc::singular_matrix,
                "matrix " + to_string() + " has determinant " + d.get_str() + ", not +-1");
  }

  bool nonnegative() const {
    return sgn(e00) >= 0 && sgn(e01) >= 0 && sgn(e10) >= 0 && sgn(e11) >= 0;
  }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.e00 * n.e00 + m.e01 * n.e10, m.e00 * n.e01 + m.e01 * n.e11,
            m.e10 * n.e00 + m.e11 * n.e10, m.e10 * n.e01 + m.e11 * n.e11};
  }

  friend Mat2 operator*(const Integer& k, const Mat2& m) {
    return {k * m.e00, k * m.e01, k * m.e10, k * m.e11};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend std::strong_ordering operator<=>(const Mat2& m, const Mat2& n) {
    for (auto [x, y] : {std::pair{&m.e00, &n.e00}, std::pair{&m.e01, &n.e01},
                        std::pair{&m.e10, &n.e10}, std::pair{&m.e11, &n.e11}}) {
      const int c = cmp(*x, *y);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    return "[[" + e00.get_str() + "," + e01.get_str() + "],[" + e10.get_str() + "," +
           e11.get_str() + "]]";
  }
};

/// (e00 x + e01) / (e10 x + e11), exact and canonical.
inline RealValue mobius_apply(const Mat2& m, const RealValue& x) {
  if (sgn(m.det()) == 0) {
    throw Error(Errc::singular_matrix, "singular matrix " + m.to_string());
  }
  if (x.is_rational()) {
    const Rational& r = x.rational();
    Integer num = m.e00 * r.num() + m.e01 * r.den();
    Integer den = m.e10 * r.num() + m.e11 * r.den();
    if (sgn(den) == 0) {
      throw Error(Errc::projective_pole, m.to_string() + " has a pole at " + r.to_string());
    }
    return Rational(std::move(num), std::move(den));
  }
  const QuadSurd& s = x.surd();
  // numerator n1 + n2 sqrt(d), denominator q1 + q2 sqrt(d), common factor 1/c cancels
  const Integer n1 = m.e00 * s.a() + m.e01 * s.c();
  const Integer n2 = m.e00 * s.b();
  const Integer q1 = m.e10 * s.a() + m.e11 * s.c();
  const Integer q2 = m.e10 * s.b();
  if (sgn(q1) == 0 && sgn(q2) == 0) {
    throw Error(Errc::projective_pole, m.to_string() + " has a pole at " + s.to_string());
  }
  // multiply through by the conjugate of the denominator
  Integer a = n1 * q1 - n2 * q2 * s.d();
  Integer b = n2 * q1 - n1 * q2;
  Integer c = q1 * q1 - q2 * q2 * s.d();
  return QuadSurd::with_squarefree_radicand(std::move(a), std::move(b), std::move(c), s.d());
}

}  // namespace gcf
