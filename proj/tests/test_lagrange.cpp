#include <gtest/gtest.h>

#include <functional>

#include "test_support.hpp"

using namespace gcf;
using gcf::testing::Gen;
using gcf::testing::QuadElt;
using gcf::testing::Q;
using gcf::testing::S;

namespace {

std::vector<Integer> digits(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

QuadSurd surd(long a, long b, long c, long d) { return S(a, b, c, d).surd(); }

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::file_error;
}

void expect_certificate_valid(const HyperbolicCert& c, const QuadSurd& x) {
  EXPECT_TRUE(gcf::testing::is_eigenpair(c.H, x, c.lambda)) << x.to_string();
  EXPECT_TRUE(RealValue(c.lambda_bar) < RealValue(c.lambda)) << x.to_string();
  EXPECT_TRUE(RealValue(0L) < RealValue(c.lambda_bar)) << x.to_string();
  const QuadElt l = QuadElt::of(c.lambda);
  const QuadElt lb = QuadElt::of(c.lambda_bar);
  const QuadElt sum = l + lb;
  const QuadElt prod = l * lb;
  EXPECT_EQ(sum.s, Rational(0));
  EXPECT_EQ(sum.r, Rational(c.H.trace()));
  EXPECT_EQ(prod.s, Rational(0));
  EXPECT_EQ(prod.r, Rational(c.H.det()));
}

/// Applies G_{a_1}, then G_{a_2}, ... to y.
RealValue apply_word(const Partition& p, std::span<const Integer> word, RealValue y) {
  for (const Integer& a : word) y = mobius_apply(branch_matrix(p.branch(a)), y);
  return y;
}

}  // namespace

TEST(Certificate, SqrtTwoMinusOne) {
  const QuadSurd x = surd(-1, 1, 1, 2);
  const HyperbolicCert c = build_certificate(x);
  EXPECT_EQ(c.H, (Mat2{1, 1, 1, 3}));
  EXPECT_EQ(c.lambda, surd(2, 1, 1, 2));
  EXPECT_EQ(c.lambda_bar, surd(2, -1, 1, 2));
  EXPECT_EQ(c.t_shift, 3);
  expect_certificate_valid(c, x);
}

TEST(Certificate, GoldenTraceAndDeterminant) {
  const QuadSurd x = surd(-1, 1, 2, 5);
  const HyperbolicCert c = build_certificate(x);
  expect_certificate_valid(c, x);
  EXPECT_EQ(c.lambda_bar, conjugate(c.lambda));
}

TEST(Certificate, SmallerRootTakesAdjugateBranch) {
  // root of X^2 - 3X + 1 in (0,1) is the smaller root
  const QuadSurd x = root_in_unit_interval(1, -3, 1);
  ASSERT_TRUE(RealValue(x) < RealValue(conjugate(x)));
  const HyperbolicCert c = build_certificate(x);
  // K = [[3+t, -1], [1, t]] with t = 1, H = adj(K)
  EXPECT_EQ(c.t_shift, 1);
  EXPECT_EQ(c.H, (Mat2{1, 1, -1, 4}));
  expect_certificate_valid(c, x);
}

TEST(Certificate, MinimalShift) {
  Gen gen(61);
  for (int i = 0; i < 100; ++i) {
    const QuadSurd x = gen.surd();
    const HyperbolicCert c = build_certificate(x);
    expect_certificate_valid(c, x);
    if (c.t_shift > 1) {
      // t - 1 leaves an eigenvalue <= 0
      const QuadraticPoly p = minimal_polynomial(x);
      const Mat2 shift{p.c, Integer(c.t_shift - 1), 0, 1};
      const RealValue e1 = mobius_apply(shift, x);
      const RealValue e2 = mobius_apply(shift, conjugate(x));
      EXPECT_TRUE(e1 <= RealValue(0L) || e2 <= RealValue(0L)) << x.to_string();
    }
  }
}

TEST(ConjugateStep, BaseAndFirstStep) {
  const Mat2 h{1, 1, 1, 3};
  const CylinderState s0;
  const Mat2 h0 = conjugate_step(h, s0.B);
  EXPECT_EQ(h0.trace(), h.trace());
  EXPECT_EQ(h0.det(), h.det());

  const CylinderState s1 = push_cylinder(s0, Partition::ordinary().branch(2));
  const Mat2 h1 = conjugate_step(h, s1.B);
  EXPECT_EQ(h1, (Mat2{2, 2, 1, 2}));
  EXPECT_EQ(h1.trace(), 4);
  EXPECT_EQ(h1.det(), 2);
}

TEST(ConjugateStep, RejectsNonUnimodular) {
  EXPECT_EQ(error_of([] { conjugate_step(Mat2{1, 1, 1, 3}, Mat2{2, 0, 0, 1}); }),
            Errc::singular_matrix);
}

TEST(ConjugateStep, NonnegativeIffConeIsInvariant) {
  // Cone C spanned by the columns of B: H C is inside C iff each H*column has a
  // positive second coordinate and its ratio lies in [lo, hi].
  Gen gen(62);
  int inside = 0;
  int outside = 0;
  for (int i = 0; i < 50; ++i) {
    const auto systems = gcf::testing::builtin_systems();
    const Partition& p = systems[static_cast<std::size_t>(i % 3)].second;
    CylinderState st;
    const long len = gen.uniform(0, 8);
    for (long k = 0; k < len; ++k) st = push_cylinder(st, p.branch(gen.digit(p, 4)));
    const Mat2 h = build_certificate(gen.surd_in_unit_interval(30, 20, 4, 20)).H;
    const CylinderInterval g = gamma_interval(st);
    bool invariant = true;
    for (const auto& [u, v] : {std::pair{st.B.e00, st.B.e10}, std::pair{st.B.e01, st.B.e11}}) {
      const Integer su = sgn(v) < 0 ? Integer(-u) : u;
      const Integer sv = sgn(v) < 0 ? Integer(-v) : v;
      const Integer hu = h.e00 * su + h.e01 * sv;
      const Integer hv = h.e10 * su + h.e11 * sv;
      if (sgn(hv) <= 0) {
        invariant = false;
        continue;
      }
      const Rational ratio(hu, hv);
      if (ratio < g.lo || g.hi < ratio) invariant = false;
    }
    // B's columns may carry a sign flip; normalize it so H_n is read in the same basis
    Mat2 b = st.B;
    if (sgn(b.e10) < 0) { b.e00 = -b.e00; b.e10 = -b.e10; }
    if (sgn(b.e11) < 0) { b.e01 = -b.e01; b.e11 = -b.e11; }
    EXPECT_EQ(conjugate_step(h, b).nonnegative(), invariant) << i;
    (invariant ? inside : outside)++;
  }
  EXPECT_GT(inside, 0);
  EXPECT_GT(outside, 0);
}

TEST(DetectPeriod, GoldenCases) {
  struct Case {
    Partition p;
    QuadSurd x;
    std::vector<Integer> pre;
    std::vector<Integer> per;
  };
  const std::vector<Case> cases{
      {Partition::ordinary(), surd(-1, 1, 1, 2), {}, digits({2})},
      {Partition::ordinary(), surd(0, 1, 2, 2), digits({1}), digits({2})},
      {Partition::ordinary(), surd(-1, 1, 2, 5), {}, digits({1})},
      {Partition::farey(), surd(-1, 1, 1, 2), {}, digits({1, 2, 2, 1})},
      {Partition::odd(), surd(-1, 1, 1, 2), {}, digits({2, 1, 1})},
  };
  for (const Case& c : cases) {
    const PeriodReport r = detect_period(c.p, c.x);
    EXPECT_EQ(r.preperiod_digits, c.pre) << c.x.to_string();
    EXPECT_EQ(r.period_digits, c.per) << c.x.to_string();
    EXPECT_EQ(r.preperiod, c.pre.size());
    EXPECT_EQ(r.period, c.per.size());
    EXPECT_EQ(orbit_oracle(c.p, c.x), (OrbitPeriod{c.pre.size(), c.per.size()}));
  }
}

TEST(DetectPeriod, FareyOrbitValues) {
  // sqrt2-1 -> sqrt2/2 -> 2-sqrt2 -> 1-sqrt2/2 -> sqrt2-1
  const Partition f = Partition::farey();
  RealValue x = S(-1, 1, 1, 2);
  for (const RealValue& expect : {S(0, 1, 2, 2), S(2, -1, 1, 2), S(2, -1, 2, 2), S(-1, 1, 1, 2)}) {
    x = step(f, x).next;
    EXPECT_EQ(x, expect);
  }
}

TEST(DetectPeriod, AgreesWithOrbitOracle) {
  Gen gen(63);
  const std::vector<Rational> q{Rational(0), Rational(Integer(1), Integer(3)),
                                Rational(Integer(1), Integer(2)), Rational(Integer(2), Integer(3)),
                                Rational(1)};
  auto systems = gcf::testing::builtin_systems();
  systems.emplace_back("custom", validate_finite(q, {1, -1, 1, -1}));
  for (const auto& [name, p] : systems) {
    for (int i = 0; i < 60; ++i) {
      const QuadSurd x = gen.surd_in_unit_interval(40, 20, 4, 25);
      const PeriodReport r = detect_period(p, x);
      const OrbitPeriod o = orbit_oracle(p, x);
      EXPECT_EQ(r.preperiod, o.preperiod) << name << " " << x.to_string();
      EXPECT_EQ(r.period, o.period) << name << " " << x.to_string();
      EXPECT_EQ(r.detect_gap % r.period, 0u);
      EXPECT_LE(r.preperiod, r.detect_index);

      // the period word fixes G^t x
      const RealValue y = apply_word(p, r.preperiod_digits, x);
      EXPECT_EQ(apply_word(p, r.period_digits, y), y);

      // conjugation invariants and eventual nonnegativity
      for (const Mat2& hn : r.conjugates) {
        EXPECT_EQ(hn.trace(), r.certificate.H.trace());
        EXPECT_EQ(hn.det(), r.certificate.H.det());
      }
      ASSERT_TRUE(r.nonnegative_from.has_value()) << name << " " << x.to_string();
      EXPECT_LE(*r.nonnegative_from, r.detect_index);
      EXPECT_EQ(r.conjugates.size(), r.detect_index + r.detect_gap + 1);
      EXPECT_EQ(r.conjugates[r.detect_index], r.conjugates.back());
    }
  }
}

TEST(DetectPeriod, StepBudget) {
  // a Farey orbit starting near 0 spends many steps in branch 1
  const QuadSurd x = surd(-30, 1, 1, 901);  // sqrt(901) - 30, tiny
  EXPECT_EQ(error_of([&] { detect_period(Partition::farey(), x, 3); }), Errc::step_budget_exceeded);
  EXPECT_EQ(error_of([&] { orbit_oracle(Partition::farey(), x, 3); }), Errc::step_budget_exceeded);
  EXPECT_NO_THROW(detect_period(Partition::farey(), x));
}

TEST(OrbitOracle, Examples) {
  EXPECT_EQ(orbit_oracle(Partition::ordinary(), surd(-1, 1, 2, 5)), (OrbitPeriod{0, 1}));
  EXPECT_EQ(orbit_oracle(Partition::ordinary(), surd(-1, 1, 1, 2)), (OrbitPeriod{0, 1}));
  EXPECT_EQ(orbit_oracle(Partition::farey(), surd(-1, 1, 1, 2)), (OrbitPeriod{0, 4}));
}

TEST(Reconstruct, Examples) {
  const Partition ord = Partition::ordinary();
  EXPECT_EQ(reconstruct(ord, {}, digits({2})), surd(-1, 1, 1, 2));
  EXPECT_EQ(reconstruct(ord, digits({1}), digits({2})), surd(0, 1, 2, 2));
  EXPECT_EQ(reconstruct(ord, {}, digits({1})), surd(-1, 1, 2, 5));
  EXPECT_EQ(reconstruct(Partition::farey(), {}, digits({1, 2, 2, 1})), surd(-1, 1, 1, 2));
  EXPECT_EQ(reconstruct(Partition::odd(), {}, digits({2, 1, 1})), surd(-1, 1, 1, 2));
  // non-minimal words describe the same number
  EXPECT_EQ(reconstruct(ord, digits({2, 2}), digits({2, 2})), surd(-1, 1, 1, 2));
}

TEST(Reconstruct, Errors) {
  const Partition f = Partition::farey();
  EXPECT_EQ(error_of([&] { reconstruct(f, {}, digits({1})); }), Errc::rational_fixed_point);
  EXPECT_EQ(error_of([&] { reconstruct(f, digits({2}), digits({2})); }), Errc::rational_fixed_point);
  EXPECT_EQ(error_of([&] { reconstruct(f, {}, digits({3})); }), Errc::invalid_digit);
  EXPECT_EQ(error_of([&] { reconstruct(Partition::ordinary(), {}, digits({0})); }),
            Errc::invalid_digit);
  EXPECT_EQ(error_of([&] { reconstruct(Partition::ordinary(), digits({1}), {}); }),
            Errc::invalid_digit);
}

TEST(Reconstruct, WordRoundTrip) {
  Gen gen(64);
  for (const auto& [name, p] : gcf::testing::builtin_systems()) {
    int ok = 0;
    for (int i = 0; i < 80; ++i) {
      std::vector<Integer> pre, per;
      for (long k = gen.uniform(0, 3); k > 0; --k) pre.push_back(gen.digit(p, 5));
      for (long k = gen.uniform(1, 4); k > 0; --k) per.push_back(gen.digit(p, 5));
      QuadSurd x = surd(-1, 1, 1, 2);
      try {
        x = reconstruct(p, pre, per);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::rational_fixed_point) << name;
        continue;
      }
      ++ok;
      EXPECT_EQ(minimal_polynomial(x).c > 0, true);
      const Expansion e = expand(p, x, pre.size() + 3 * per.size());
      for (std::size_t k = 0; k < e.digits.size(); ++k) {
        const Integer& expect = k < pre.size() ? pre[k] : per[(k - pre.size()) % per.size()];
        EXPECT_EQ(e.digits[k], expect) << name;
      }
    }
    EXPECT_GT(ok, 40) << name;
  }
}

TEST(Reconstruct, ExpansionRoundTrip) {
  Gen gen(65);
  for (const auto& [name, p] : gcf::testing::builtin_systems()) {
    for (int i = 0; i < 50; ++i) {
      const QuadSurd x = gen.surd_in_unit_interval(40, 20, 4, 25);
      const PeriodReport r = detect_period(p, x);
      EXPECT_EQ(reconstruct(p, r.preperiod_digits, r.period_digits), x) << name;
    }
  }
}
