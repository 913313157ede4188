#include <gtest/gtest.h>

#include "loopqkz/linkpat.hpp"

using namespace loopqkz;

TEST(LinkPattern, ParseRoundTrip) {
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const LinkPattern p(n, a);
      EXPECT_EQ(LinkPattern::parse(p.to_string()), p);
    }
  EXPECT_EQ(LinkPattern::parse("((").index(), 0u);
  EXPECT_EQ(LinkPattern::parse("))").index(), 3u);
  EXPECT_EQ(LinkPattern::parse(")(").index(), 2u);
  EXPECT_THROW(LinkPattern::parse("(x"), invalid_argument);
  EXPECT_THROW(LinkPattern(2, 4), invalid_argument);
}

TEST(LinkPattern, Closure) {
  const Matching m = closure(LinkPattern::parse(")(())((("));
  EXPECT_EQ(m.pairs, (std::vector<std::pair<int, int>>{{2, 5}, {3, 4}}));
  EXPECT_EQ(m.left, (std::vector<int>{1}));
  EXPECT_EQ(m.right, (std::vector<int>{6, 7, 8}));
}

TEST(LinkPattern, GeneratorExamples) {
  EXPECT_EQ(apply_e(5, LinkPattern::parse(")(())(((")).to_string(), ")(()()((");
  // e_0 attaches site 1 to the left boundary
  EXPECT_EQ(apply_e(0, LinkPattern::parse("((")).to_string(), ")(");
  EXPECT_EQ(apply_e(0, LinkPattern::parse("()")).to_string(), "))");
  // e_L attaches site L to the right boundary
  EXPECT_EQ(apply_e(2, LinkPattern::parse("))")).to_string(), ")(");
  EXPECT_EQ(apply_e(2, LinkPattern::parse("()")).to_string(), "((");
  EXPECT_EQ(apply_e(1, LinkPattern::parse(")(")).to_string(), "()");
  EXPECT_THROW(apply_e(3, LinkPattern::parse("((")), invalid_argument);
}

TEST(LinkPattern, TwoBoundaryRelations) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<SparseOperator> e;
    for (int i = 0; i <= n; ++i) e.push_back(generator_matrix(i, n));
    for (int i = 0; i <= n; ++i) EXPECT_EQ(e[i] * e[i], e[i]) << "L=" << n << " i=" << i;
    for (int i = 1; i + 1 <= n - 1; ++i) {
      EXPECT_EQ(e[i] * e[i + 1] * e[i], e[i]);
      EXPECT_EQ(e[i + 1] * e[i] * e[i + 1], e[i + 1]);
    }
    if (n >= 2) {
      EXPECT_EQ(e[1] * e[0] * e[1], e[1]);
      EXPECT_EQ(e[n - 1] * e[n] * e[n - 1], e[n - 1]);
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) EXPECT_EQ(e[i] * e[j], e[j] * e[i]);
    const auto [i1, i2] = idempotents(n);
    EXPECT_EQ(i1 * i2 * i1, i1) << "L=" << n;
    EXPECT_EQ(i2 * i1 * i2, i2) << "L=" << n;
  }
}

TEST(LinkPattern, BoundaryCoupling) {
  EXPECT_EQ(c_from_zeta(Scalar(2L)), scalar_from_rational(4, 7));
  EXPECT_EQ(c_from_zeta(Scalar(1L)), Scalar(1L));
  EXPECT_EQ(c_from_zeta(scalar_from_rational(1, 2)), c_from_zeta(Scalar(2L)));
  EXPECT_THROW(c_from_zeta(Scalar()), singular_parameter);
  // zeta^2 = q makes 1 + zeta^2 + zeta^-2 vanish
  EXPECT_THROW(c_from_zeta(root_of_unity(2)), singular_parameter);
}

TEST(LinkPattern, HamiltonianColumnSums) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& x : hamiltonian(n, scalar_from_rational(4, 7), Scalar(3L)).column_sums())
      EXPECT_TRUE(x.is_zero());
}

TEST(LinkPattern, Insertions) {
  const LinkPattern p = LinkPattern::parse(")(");
  EXPECT_EQ(insert_link(1, p).to_string(), "())(");
  EXPECT_EQ(insert_link(2, p).to_string(), ")()(");
  EXPECT_EQ(insert_link(3, p).to_string(), ")(()");
  EXPECT_EQ(insert_left(p).to_string(), "))(");
  EXPECT_EQ(insert_right(p).to_string(), ")((");
  EXPECT_THROW(insert_link(4, p), invalid_argument);
}
