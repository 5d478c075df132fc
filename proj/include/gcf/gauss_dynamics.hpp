#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcf/error.hpp"
#include "gcf/integer.hpp"
#include "gcf/mat2.hpp"
#include "gcf/partition.hpp"
#include "gcf/real_value.hpp"

namespace gcf {

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

/// One application of the Gauss map.
struct Step {
  Integer digit;
  RealValue next;
};

inline Step step(const Partition& partition, const RealValue& x) {
  const Branch b = partition.locate(x);
  return {b.index, mobius_apply(branch_matrix(b), x)};
}

enum class TerminalKind { at_zero, at_one, ongoing };

/// Kneading digits a_1..a_n of x and the orbit point G^n x.
struct Expansion {
  std::vector<Integer> digits;
  TerminalKind terminal = TerminalKind::ongoing;
  RealValue last = RealValue(0L);  // G^n x; 0 or 1 when the orbit ended
};

/// Iterates until the orbit reaches 0 or 1 or max_steps digits exist.
/// Rational inputs always terminate within (denominator of x) steps.
inline Expansion expand(const Partition& partition, const RealValue& x,
                        std::size_t max_steps = kDefaultMaxSteps) {
  if (max_steps == 0) throw Error(Errc::out_of_domain, "max_steps must be at least 1");
  Expansion out;
  RealValue cur = x;
  while (out.digits.size() < max_steps) {
    Step s = step(partition, cur);
    out.digits.push_back(std::move(s.digit));
    cur = std::move(s.next);
    if (cur == RealValue(0L)) {
      out.terminal = TerminalKind::at_zero;
      break;
    }
    if (cur == RealValue(1L)) {
      out.terminal = TerminalKind::at_one;
      break;
    }
  }
  out.last = std::move(cur);
  return out;
}

/// B_n = G_{a_1}^-1 ... G_{a_n}^-1 * [[0,1],[1,1]]. Its columns are
/// projectively psi_{a_1}...psi_{a_n}(0) and psi_{a_1}...psi_{a_n}(1).
struct CylinderState {
  Mat2 B{0, 1, 1, 1};
  std::size_t n = 0;
};

inline CylinderState push_cylinder(const CylinderState& state, const Branch& b) {
  static const Mat2 w{0, 1, 1, 1};
  static const Mat2 w_inv{-1, 1, 1, 0};
  return {state.B * w_inv * branch_matrix(b).inverse() * w, state.n + 1};
}

/// Closed cylinder interval Gamma_n with its exact length 1/(q_n s_n).
struct CylinderInterval {
  Rational lo;
  Rational hi;
  Rational length;
};

inline CylinderInterval gamma_interval(const CylinderState& state) {
  const Mat2& m = state.B;
  // Columns are only determined up to sign; make the second entries positive.
  Integer p = m.e00, q = m.e10, r = m.e01, s = m.e11;
  if (sgn(q) < 0) {
    p = -p;
    q = -q;
  }
  if (sgn(s) < 0) {
    r = -r;
    s = -s;
  }
  Rational first(p, q);
  Rational second(r, s);
  Rational length(Integer(1), Integer(q * s));
  if (second < first) std::swap(first, second);
  return {std::move(first), std::move(second), std::move(length)};
}

/// psi_{a_1} ... psi_{a_n}(y).
inline RealValue evaluate_composition(const Partition& partition, std::span<const Integer> digits,
                                      const RealValue& y) {
  std::vector<Branch> branches;
  branches.reserve(digits.size());
  for (const Integer& a : digits) branches.push_back(partition.branch(a));
  RealValue v = y;
  for (auto it = branches.rbegin(); it != branches.rend(); ++it) v = inverse_branch(*it, v);
  return v;
}

}  // namespace gcf
