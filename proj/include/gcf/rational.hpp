#pragma once

#include <compare>
#include <string>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"

namespace gcf {

/// Reduced fraction num/den with den >= 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw Error(Errc::zero_denominator, "rational with zero denominator");
    reduce();
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int s = cmp(Integer(x.num_ * y.den_), Integer(y.num_ * x.den_));
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Rational operator-(const Rational& x) { return Rational(Integer(-x.num_), x.den_, {}); }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return {Integer(x.num_ * y.den_ + y.num_ * x.den_), Integer(x.den_ * y.den_)};
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {Integer(x.num_ * y.num_), Integer(x.den_ * y.den_)};
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    return {Integer(x.num_ * y.den_), Integer(x.den_ * y.num_)};
  }

  /// "u/v", or "u" when the denominator is 1.
  std::string to_string() const {
    return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
  }

 private:
  struct Trusted {};
  Rational(Integer num, Integer den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Integer g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

}  // namespace gcf
