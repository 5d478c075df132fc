#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

namespace gcf {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = mpz_class;

inline int sign(const Integer& n) { return sgn(n); }

inline Integer abs_value(const Integer& n) { return abs(n); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b, const Integer& c) {
  return gcd(gcd(a, b), c);
}

/// Quotient rounded toward negative infinity. `den` must be nonzero.
inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::size_t hash_value(const Integer& n) {
  return std::hash<std::string>{}(n.get_str(16));
}

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace gcf
