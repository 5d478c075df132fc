#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"
#include "gcf/mat2.hpp"
#include "gcf/rational.hpp"
#include "gcf/real_value.hpp"

namespace gcf {

enum class Sign : int { minus = -1, plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// One interval of a unimodular partition with its orientation.
struct Branch {
  Integer index;
  Rational lo;  // p/q
  Rational hi;  // r/s
  bool right_closed = true;
  Sign eps = Sign::plus;

  /// lo < x, and x < hi or (x == hi and right_closed).
  bool contains(const RealValue& x) const {
    const RealValue l(lo);
    const RealValue h(hi);
    if (!(l < x)) return false;
    const auto c = compare(x, h);
    return c < 0 || (c == 0 && right_closed);
  }

  friend bool operator==(const Branch&, const Branch&) = default;
};

enum class PartitionKind { finite, ordinary, odd };

/// A validated unimodular partition of (0,1) together with its sign function.
///
/// Finite partitions hold their branches explicitly (indices 1..N, the last
/// branch right-open). The ordinary and odd continued-fraction systems share
/// the countable family (1/(a+1), 1/a], a >= 1, and differ only in eps:
/// ordinary uses +1 throughout, odd uses (-1)^(a+1).
class Partition {
 public:
  static Partition ordinary() { return Partition(PartitionKind::ordinary, {}); }
  static Partition odd() { return Partition(PartitionKind::odd, {}); }

  /// Q = [0, 1/2, 1] with both signs -1.
  static Partition farey();

  /// Validates the point list Q and the sign list; see validate_finite().
  static Partition finite(const std::vector<Rational>& points, const std::vector<int>& signs);

  PartitionKind kind() const noexcept { return kind_; }

  /// Explicit branches; empty for the countable families.
  std::span<const Branch> branches() const noexcept { return branches_; }

  /// Branch with the given index, or Error{invalid_digit}.
  Branch branch(const Integer& index) const {
    if (kind_ == PartitionKind::finite) {
      if (index < 1 || index > static_cast<unsigned long>(branches_.size())) {
        throw Error(Errc::invalid_digit,
                    "digit " + index.get_str() + " names no branch (valid: 1.." +
                        std::to_string(branches_.size()) + ")");
      }
      return branches_[index.get_ui() - 1];
    }
    if (index < 1) {
      throw Error(Errc::invalid_digit, "digit " + index.get_str() + " names no branch (valid: >= 1)");
    }
    Branch b;
    b.index = index;
    b.lo = Rational(Integer(1), Integer(index + 1));
    b.hi = Rational(Integer(1), index);
    b.right_closed = true;
    b.eps = kind_ == PartitionKind::ordinary || mpz_odd_p(index.get_mpz_t()) != 0 ? Sign::plus
                                                                                   : Sign::minus;
    return b;
  }

  bool has_branch(const Integer& index) const {
    if (index < 1) return false;
    return kind_ != PartitionKind::finite || index <= static_cast<unsigned long>(branches_.size());
  }

  /// The branch whose interval contains x, for 0 < x < 1.
  Branch locate(const RealValue& x) const {
    if (!(RealValue(0L) < x) || !(x < RealValue(1L))) {
      throw Error(Errc::out_of_domain, x.to_string() + " is outside (0,1)");
    }
    if (kind_ != PartitionKind::finite) {
      // x = 1/a lands in branch a, matching the right-closed convention.
      return branch(floor(mobius_apply(Mat2{0, 1, 1, 0}, x)));
    }
    auto it = std::lower_bound(branches_.begin(), branches_.end(), x,
                               [](const Branch& b, const RealValue& v) { return RealValue(b.hi) < v; });
    return *it;
  }

 private:
  Partition(PartitionKind kind, std::vector<Branch> branches)
      : kind_(kind), branches_(std::move(branches)) {}

  PartitionKind kind_;
  std::vector<Branch> branches_;
};

/// Checks, in order: strictly ascending, endpoints 0 and 1, at least three
/// points, sign list length, unimodularity of each consecutive pair, signs in
/// {-1, +1}. Error indices are 0-based: a point position in Q for ordering
/// and endpoint failures, the position of the left point of the offending
/// pair for NotUnimodular, a position in the sign list for sign failures.
inline Partition validate_finite(const std::vector<Rational>& points, const std::vector<int>& signs) {
  return Partition::finite(points, signs);
}

inline Partition Partition::finite(const std::vector<Rational>& q, const std::vector<int>& eps) {
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (!(q[i - 1] < q[i])) {
      throw Error(Errc::not_sorted,
                  "Q is not strictly ascending at index " + std::to_string(i) + " (" +
                      q[i - 1].to_string() + " >= " + q[i].to_string() + ")",
                  i);
    }
  }
  if (q.empty() || q.front() != Rational(0)) {
    throw Error(Errc::bad_endpoints, "Q must start at 0", 0);
  }
  if (q.back() != Rational(1)) {
    throw Error(Errc::bad_endpoints, "Q must end at 1", q.size() - 1);
  }
  if (q.size() < 3) {
    throw Error(Errc::too_few_points, "Q needs 0, 1 and at least one more point");
  }
  if (eps.size() != q.size() - 1) {
    throw Error(Errc::length_mismatch, "epsilon has " + std::to_string(eps.size()) +
                                           " entries, expected " + std::to_string(q.size() - 1));
  }
  std::vector<Branch> branches;
  branches.reserve(q.size() - 1);
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    const Integer det = q[i].num() * q[i + 1].den() - q[i].den() * q[i + 1].num();
    if (det != -1) {
      throw Error(Errc::not_unimodular,
                  "interval [" + q[i].to_string() + ", " + q[i + 1].to_string() +
                      "] at index " + std::to_string(i) + " is not unimodular (determinant " +
                      det.get_str() + ")",
                  i, det.get_str());
    }
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] != 1 && eps[i] != -1) {
      throw Error(Errc::bad_sign,
                  "epsilon[" + std::to_string(i) + "] = " + std::to_string(eps[i]) +
                      " is not -1 or 1",
                  i);
    }
    branches.push_back(Branch{Integer(static_cast<unsigned long>(i + 1)), q[i], q[i + 1],
                              i + 2 < q.size(), eps[i] < 0 ? Sign::minus : Sign::plus});
  }
  return Partition(PartitionKind::finite, std::move(branches));
}

inline Partition Partition::farey() {
  return finite({Rational(0), Rational(Integer(1), Integer(2)), Rational(1)}, {-1, -1});
}

/// G_a = [[0,1],[1,1]] * [[0,1],[1,0]]^((eps+1)/2) * [[p,r],[q,s]]^-1.
inline Mat2 branch_matrix(const Branch& b) {
  const Integer& p = b.lo.num();
  const Integer& q = b.lo.den();
  const Integer& r = b.hi.num();
  const Integer& s = b.hi.den();
  // det [[p,r],[q,s]] = -1
  Mat2 m = Mat2{Integer(-s), r, q, Integer(-p)};
  if (b.eps == Sign::plus) m = Mat2{0, 1, 1, 0} * m;
  return Mat2{0, 1, 1, 1} * m;
}

/// Matrix of the inverse branch psi_a.
inline Mat2 inverse_branch_matrix(const Branch& b) {
  const Integer& p = b.lo.num();
  const Integer& q = b.lo.den();
  const Integer& r = b.hi.num();
  const Integer& s = b.hi.den();
  if (b.eps == Sign::minus) return Mat2{Integer(r - p), p, Integer(s - q), q};
  return Mat2{Integer(p - r), r, Integer(q - s), s};
}

/// psi_a(y) for 0 <= y <= 1; lands in [lo, hi].
inline RealValue inverse_branch(const Branch& b, const RealValue& y) {
  if (y < RealValue(0L) || RealValue(1L) < y) {
    throw Error(Errc::out_of_domain, y.to_string() + " is outside [0,1]");
  }
  return mobius_apply(inverse_branch_matrix(b), y);
}

/// Digit of the odd system in the form psi(y) = 1/(b + eps*y), b odd.
struct OddDigit {
  Integer b;
  Sign eps;

  friend bool operator==(const OddDigit&, const OddDigit&) = default;
};

inline OddDigit odd_digit_form(const Integer& a) {
  if (mpz_odd_p(a.get_mpz_t()) != 0) return {a, Sign::plus};
  return {Integer(a + 1), Sign::minus};
}

inline std::string_view kind_name(PartitionKind k) {
  switch (k) {
    case PartitionKind::finite: return "finite";
    case PartitionKind::ordinary: return "ordinary";
    case PartitionKind::odd: return "odd";
  }
  return "finite";
}

}  // namespace gcf
