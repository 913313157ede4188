#include <gtest/gtest.h>

#include "loopqkz/groundstate.hpp"
#include "loopqkz/random.hpp"

using namespace loopqkz;

namespace {

Scalar component(const GroundstateVector& gs, const char* word) {
  return gs.components.at(LinkPattern::parse(word).index());
}

}  // namespace

TEST(Groundstate, EmptyAndOneSite) {
  PointSampler ps(31);
  const SpectralPoint p0 = ps.point(0);
  const GroundstateVector g0 = solve(p0);
  ASSERT_EQ(g0.components.size(), 1u);
  EXPECT_EQ(g0.components[0], Scalar(1L));
  const SpectralPoint p1 = ps.point(1);
  const GroundstateVector g1 = solve(p1);
  EXPECT_EQ(component(g1, "("), closed_form_all_open(p1));
  EXPECT_EQ(component(g1, ")"), closed_form_all_close(p1));
  EXPECT_TRUE(check_sum_rule(p1));
}

TEST(Groundstate, ClosedFormsShareScale) {
  PointSampler ps(32);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 4; ++k) {
      const SpectralPoint pt = ps.point(n, fourth_root(k));
      const GroundstateVector gs = solve(pt);
      EXPECT_EQ(gs.normalization, Normalization::all_open);
      EXPECT_EQ(gs.components.front(), closed_form_all_open(pt)) << "L=" << n;
      EXPECT_EQ(gs.components.back(), closed_form_all_close(pt)) << "L=" << n;
    }
}

TEST(Groundstate, IsFixedVector) {
  PointSampler ps(33);
  const SpectralPoint pt = ps.point(3);
  const GroundstateVector gs = solve(pt);
  EXPECT_EQ(transfer_apply(gs.components, pt), gs.components);
  EXPECT_EQ(transfer_apply(gs.components, pt.with_w(ps.draw_scalar())), gs.components);
}

TEST(Groundstate, SumRule) {
  PointSampler ps(34);
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(check_sum_rule(ps.point(n))) << "L=" << n;
}

TEST(Groundstate, QkzRelations) {
  PointSampler ps(35);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < 4; ++k) {
      const SpectralPoint pt = ps.point(n, fourth_root(k));
      for (int i = 1; i < n; ++i) EXPECT_TRUE(check_qkz_exchange(pt, i));
      EXPECT_TRUE(check_qkz_boundary(pt)) << "L=" << n << " s=i^" << k;
    }
}

TEST(Groundstate, Recursions) {
  const Scalar& q = q_root();
  PointSampler ps(36);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      SpectralPoint pt;
      do {
        pt = ps.point(n);
        pt.z[static_cast<std::size_t>(i)] = q * pt.z[static_cast<std::size_t>(i - 1)];
      } while (!is_generic(pt));
      const RecursionResult r = bulk_recursion(pt, i);
      EXPECT_TRUE(r.holds) << "L=" << n << " i=" << i;
      EXPECT_EQ(r.factor, r.expected);
    }
    SpectralPoint lp;
    do {
      lp = ps.point(n);
      lp.z[0] = q * lp.zeta1;
    } while (!is_generic(lp));
    EXPECT_TRUE(check_boundary_recursion(lp, Side::left)) << "L=" << n;
    SpectralPoint rp;
    do {
      rp = ps.point(n, fourth_root(1));
      rp.z.back() = rp.zeta2 / q;
    } while (!is_generic(rp));
    EXPECT_TRUE(check_boundary_recursion(rp, Side::right)) << "L=" << n;
  }
}

TEST(Groundstate, FactorConditions) {
  PointSampler ps(37);
  for (int n = 1; n <= 3; ++n) {
    const SpectralPoint pt = ps.point(n);
    EXPECT_TRUE(check_left_factor(pt));
    EXPECT_TRUE(check_right_factor(pt));
    for (int i = 1; i < n; ++i) EXPECT_TRUE(check_bulk_factor(pt, i));
  }
}

TEST(Groundstate, DegreeBound) {
  PointSampler ps(38);
  for (int n = 1; n <= 3; ++n) {
    const SpectralPoint pt = ps.point(n);
    for (int v = 1; v <= n; ++v)
      for (const auto& ip : interpolate_state(pt, v, default_samples(n))) EXPECT_LE(ip.degree(), 2 * n - 1);
  }
}

TEST(Groundstate, ContinuityMatchesSolve) {
  PointSampler ps(39);
  const SpectralPoint pt = ps.point(3);
  const GroundstateVector a = solve(pt), b = solve_by_continuity(pt, 3);
  EXPECT_EQ(a.components, b.components);
}

TEST(Groundstate, NonGenericPointRejected) {
  SpectralPoint pt;
  pt.z = {Scalar(2L), Scalar(3L)};
  pt.zeta1 = Scalar(5L);
  pt.zeta2 = Scalar(7L);
  pt.w = q_root() * q_root() * pt.z[0];
  EXPECT_THROW(solve(pt), singular_parameter);
}

TEST(Groundstate, HomogeneousSumRuleAndHamiltonian) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(check_homogeneous_sum_rule(n, Scalar(2L), scalar_from_rational(3, 5))) << "L=" << n;
    EXPECT_TRUE(check_hamiltonian(n, Scalar(2L), scalar_from_rational(3, 5))) << "L=" << n;
    EXPECT_TRUE(check_homogeneous_sum_rule(n, Scalar(1L), Scalar(1L))) << "L=" << n;
    EXPECT_TRUE(check_homogeneous_sum_rule(n, Scalar(3L), Scalar(3L))) << "L=" << n;
  }
}

TEST(Groundstate, HomogeneousPositivity) {
  for (int n = 1; n <= 5; ++n) {
    const GroundstateVector gs = solve_homogeneous(n, Scalar(1L), Scalar(1L));
    for (const auto& c : gs.components) {
      ASSERT_TRUE(c.is_rational()) << "L=" << n;
      EXPECT_GT(sgn(c.coefficient(0)), 0) << "L=" << n;
    }
  }
}

TEST(Groundstate, TwoSiteDivided) {
  PointSampler ps(40);
  const SpectralPoint pt = ps.point(2, fourth_root(1));
  const ComponentEvaluator open = component_evaluator(LinkPattern::parse("(("));
  const ComponentEvaluator pair = component_evaluator(LinkPattern::parse("()"));
  const ComponentEvaluator close = component_evaluator(LinkPattern::parse("))"));
  EXPECT_TRUE(eval_a(0, pair, pt).is_zero());
  EXPECT_EQ(eval_s(0, close, pt), pair(pt));
  EXPECT_TRUE(eval_a(1, close, pt).is_zero());
  EXPECT_EQ(eval_s(2, open, pt), pair(pt));
}

TEST(Groundstate, ThreeSiteChain) {
  PointSampler ps(41);
  const SpectralPoint pt = ps.point(3, fourth_root(3));
  const PartialReconstruction r = reconstruct_partial_L3(closed_form_all_open, closed_form_all_close, pt);
  const GroundstateVector gs = solve_normalized(pt);
  for (const auto& [word, value] : r.determined) EXPECT_EQ(value, component(gs, word.c_str())) << word;
  EXPECT_EQ(r.sum_undetermined, component(gs, ")((") + component(gs, "))("));
  const ComponentEvaluator psi5 = component_evaluator(LinkPattern::parse(")(("));
  EXPECT_EQ(eval_s(0, psi5, pt), component(gs, "((("));
}
