#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gcf/error.hpp"
#include "gcf/gauss_dynamics.hpp"
#include "gcf/integer.hpp"
#include "gcf/mat2.hpp"
#include "gcf/partition.hpp"
#include "gcf/quad_surd.hpp"
#include "gcf/real_value.hpp"

namespace gcf {

/// Integer matrix H with H (x,1)^T = lambda (x,1)^T and lambda > lambda_bar > 0.
struct HyperbolicCert {
  Mat2 H;
  QuadSurd lambda;
  QuadSurd lambda_bar;
  Integer t_shift;
};

/// Starting from the companion-style matrix K0 = [[-d,-e],[c,0]] of the
/// minimal polynomial, which has eigenvalue c*x on (x,1), shifts by the least
/// positive t making both eigenvalues c*x + t and c*xbar + t positive. If x is
/// the larger root K = K0 + tI already works; otherwise H = det(K) K^-1,
/// which swaps the roles of the two eigenvalues.
inline HyperbolicCert build_certificate(const QuadSurd& x) {
  const QuadraticPoly poly = minimal_polynomial(x);
  const QuadSurd xbar = conjugate(x);
  const bool x_is_larger = RealValue(xbar) < RealValue(x);
  const QuadSurd& smaller = x_is_larger ? xbar : x;

  // least integer t > -c * smaller
  const RealValue bound = mobius_apply(Mat2{Integer(-poly.c), 0, 0, 1}, smaller);
  Integer t = floor(bound) + 1;
  if (t < 1) t = 1;

  const Mat2 k{Integer(t - poly.d), Integer(-poly.e), poly.c, t};
  const Mat2 scale{poly.c, t, 0, 1};  // y -> c*y + t
  const QuadSurd ev_x = mobius_apply(scale, x).surd();
  const QuadSurd ev_xbar = mobius_apply(scale, xbar).surd();
  if (x_is_larger) return {k, ev_x, ev_xbar, t};
  return {k.adjugate(), ev_xbar, ev_x, t};
}

/// B^-1 H B for |det B| = 1.
inline Mat2 conjugate_step(const Mat2& h, const Mat2& b) { return b.inverse() * h * b; }

struct PeriodReport {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<Integer> preperiod_digits{};
  std::vector<Integer> period_digits{};
  /// First repetition H_{detect_index} = H_{detect_index + detect_gap}.
  std::size_t detect_index = 0;
  std::size_t detect_gap = 0;
  HyperbolicCert certificate;
  /// H_0 .. H_{detect_index + detect_gap}.
  std::vector<Mat2> conjugates{};
  /// Least m with H_n >= 0 entrywise for every observed n >= m.
  std::optional<std::size_t> nonnegative_from{};
};

/// Eventual period of a quadratic irrational x in (0,1) from repetition of
/// the conjugates H_n = B_n^-1 H B_n.
///
/// Any repetition H_t = H_{t+r} forces G^t x = G^{t+r} x: the lambda
/// eigenspace of H_t is one-dimensional and spanned by B_t^-1 (x,1)^T.
/// From some index on the H_n are nonnegative integer matrices of fixed
/// trace and determinant, hence finitely many, so a repetition must occur.
/// The detected (t, r) is then reduced to the minimal preperiod and period
/// by exact comparison of orbit points.
inline PeriodReport detect_period(const Partition& partition, const QuadSurd& x,
                                  std::size_t max_steps = kDefaultMaxSteps) {
  if (max_steps == 0) throw Error(Errc::out_of_domain, "max_steps must be at least 1");
  PeriodReport report{.certificate = build_certificate(x)};
  const Mat2& h = report.certificate.H;

  std::vector<RealValue> orbit{RealValue(x)};
  std::vector<Integer> digits;
  std::map<Mat2, std::size_t> seen;
  CylinderState cylinder;
  for (std::size_t n = 0;; ++n) {
    Mat2 hn = conjugate_step(h, cylinder.B);
    report.conjugates.push_back(hn);
    if (auto it = seen.find(hn); it != seen.end()) {
      report.detect_index = it->second;
      report.detect_gap = n - it->second;
      break;
    }
    seen.emplace(std::move(hn), n);
    if (n == max_steps) {
      throw Error(Errc::step_budget_exceeded,
                  "no repetition among H_0..H_" + std::to_string(n) + " for " + x.to_string());
    }
    const Branch b = partition.locate(orbit.back());
    orbit.push_back(mobius_apply(branch_matrix(b), orbit.back()));
    digits.push_back(b.index);
    cylinder = push_cylinder(cylinder, b);
  }

  const std::size_t t = report.detect_index;
  const std::size_t r = report.detect_gap;
  std::size_t period = r;
  for (std::size_t cand = 1; cand <= r; ++cand) {
    if (r % cand == 0 && orbit[t] == orbit[t + cand]) {
      period = cand;
      break;
    }
  }
  std::size_t pre = t;
  while (pre > 0 && orbit[pre - 1] == orbit[pre - 1 + period]) --pre;

  report.preperiod = pre;
  report.period = period;
  report.preperiod_digits.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(pre));
  report.period_digits.assign(digits.begin() + static_cast<std::ptrdiff_t>(pre),
                              digits.begin() + static_cast<std::ptrdiff_t>(pre + period));

  std::size_t m = report.conjugates.size();
  while (m > 0 && report.conjugates[m - 1].nonnegative()) --m;
  if (m < report.conjugates.size()) report.nonnegative_from = m;
  return report;
}

struct OrbitPeriod {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const OrbitPeriod&, const OrbitPeriod&) = default;
};

/// (preperiod, period) from the first revisited orbit point.
inline OrbitPeriod orbit_oracle(const Partition& partition, const QuadSurd& x,
                                std::size_t max_steps = kDefaultMaxSteps) {
  std::unordered_map<RealValue, std::size_t> first_seen;
  RealValue cur(x);
  for (std::size_t n = 0; n <= max_steps; ++n) {
    auto [it, inserted] = first_seen.emplace(cur, n);
    if (!inserted) return {it->second, n - it->second};
    if (n == max_steps) break;
    cur = step(partition, cur).next;
  }
  throw Error(Errc::step_budget_exceeded,
              "orbit of " + x.to_string() + " did not repeat within " + std::to_string(max_steps) +
                  " steps");
}

/// The quadratic irrational whose kneading sequence is
/// preperiod_digits followed by period_digits repeated forever.
///
/// With M0 = G_{a_t}...G_{a_1} and P = G_{a_{t+r}}...G_{a_{t+1}}, x is a
/// projective fixed point of M0^-1 P M0. Of the two fixed points at most one
/// has the requested kneading sequence; it is identified by expanding t + r
/// digits, which is enough because matching those digits makes
/// G^t x = G^{t+r} x.
inline QuadSurd reconstruct(const Partition& partition, std::span<const Integer> preperiod_digits,
                            std::span<const Integer> period_digits) {
  if (period_digits.empty()) throw Error(Errc::invalid_digit, "period must be nonempty");
  std::vector<Integer> word;
  word.reserve(preperiod_digits.size() + period_digits.size());
  word.insert(word.end(), preperiod_digits.begin(), preperiod_digits.end());
  word.insert(word.end(), period_digits.begin(), period_digits.end());

  Mat2 head = Mat2::identity();
  Mat2 cycle = Mat2::identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Mat2 g = branch_matrix(partition.branch(word[i]));
    if (i < preperiod_digits.size()) head = g * head;
    else cycle = g * cycle;
  }
  const Mat2 m = head.inverse() * cycle * head;

  // (m00 x + m01) / (m10 x + m11) = x. Made primitive, the discriminant is
  // that of the minimal polynomial, which stays small even when the entries of
  // m are huge; this keeps square extraction cheap.
  Integer qa = m.e10;
  Integer qb = m.e11 - m.e00;
  Integer qc = -m.e01;
  if (const Integer g = gcd(qa, qb, qc); sgn(g) != 0) {
    qa /= g;
    qb /= g;
    qc /= g;
  }
  if (sgn(qa) == 0) {
    throw Error(Errc::rational_fixed_point,
                "fixed-point equation of " + m.to_string() + " has degree < 2");
  }
  const Integer disc = qb * qb - 4 * qa * qc;
  if (sgn(disc) < 0) throw Error(Errc::no_valid_root, m.to_string() + " has no real fixed point");
  if (is_perfect_square(disc)) {
    throw Error(Errc::rational_fixed_point, m.to_string() + " has rational fixed points");
  }

  const RealValue zero(0L);
  const RealValue one(1L);
  for (const long s : {1L, -1L}) {
    const RealValue root = normalize_surd(Integer(-qb), Integer(s), Integer(2 * qa), disc);
    if (!(zero < root && root < one)) continue;
    RealValue cur = root;
    bool match = true;
    for (const Integer& a : word) {
      Step st = step(partition, cur);
      if (st.digit != a) {
        match = false;
        break;
      }
      cur = std::move(st.next);
    }
    if (match) return root.surd();
  }
  throw Error(Errc::no_valid_root, "no fixed point of " + m.to_string() +
                                       " has the requested digits; the word is inadmissible");
}

}  // namespace gcf
