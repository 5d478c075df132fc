#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"
#include "gcf/real_value.hpp"

namespace gcf {

namespace detail {

/// Recursive-descent reader over one number literal. Whitespace is skipped
/// everywhere; reported columns are 1-based positions in the original text.
class NumberReader {
 public:
  explicit NumberReader(std::string_view text) : text_(text) {}

  RealValue read() {
    skip_ws();
    RealValue value = peek() == '(' ? read_surd() : read_rational();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  /// At most one sign.
  int read_sign() {
    const char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      return c == '-' ? -1 : 1;
    }
    return 1;
  }

  Integer read_unsigned() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Integer read_signed() {
    const int s = read_sign();
    Integer n = read_unsigned();
    return s < 0 ? Integer(-n) : n;
  }

  RealValue read_rational() {
    Integer num = read_signed();
    if (peek() != '/') return Rational(std::move(num));
    ++pos_;
    const std::size_t den_col = pos_;
    Integer den = read_signed();
    if (sgn(den) == 0) {
      pos_ = den_col;
      skip_ws();
      fail("zero denominator");
    }
    return Rational(std::move(num), std::move(den));
  }

  // '(' [sign] INT sign [INT '*'] 'sqrt' '(' INT ')' ')' ['/' [sign] INT]
  RealValue read_surd() {
    expect('(');
    Integer a = read_signed();
    const char sc = peek();
    if (sc != '+' && sc != '-') fail("expected '+' or '-' before the radical");
    const int bsign = read_sign();
    Integer b = 1;
    if (peek() != 's') {
      b = read_unsigned();
      expect('*');
    }
    if (bsign < 0) b = -b;
    expect_word("sqrt");
    expect('(');
    const std::size_t rad_col = pos_;
    Integer d = read_unsigned();
    expect(')');
    expect(')');
    Integer c = 1;
    std::size_t den_col = pos_;
    if (peek() == '/') {
      ++pos_;
      den_col = pos_;
      c = read_signed();
    }
    try {
      return normalize_surd(std::move(a), std::move(b), std::move(c), std::move(d));
    } catch (const Error& e) {
      pos_ = e.code() == Errc::zero_denominator ? den_col : rad_col;
      skip_ws();
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "u", "u/v", or "(a+b*sqrt(d))/c" (the "/c" and "b*" parts are
/// optional). Throws Error{parse_error} with the 1-based column.
inline RealValue parse_number(std::string_view text) { return detail::NumberReader(text).read(); }

/// Parses a rational only; surd syntax is rejected.
inline Rational parse_rational(std::string_view text) {
  RealValue v = parse_number(text);
  if (!v.is_rational()) throw Error(Errc::parse_error, "expected a rational, got a surd", 1);
  return v.rational();
}

}  // namespace gcf
