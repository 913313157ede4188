#include <gtest/gtest.h>

#include "loopqkz/random.hpp"
#include "loopqkz/transfer.hpp"

using namespace loopqkz;

TEST(Transfer, ThreadedMatchesNaive) {
  PointSampler ps(11);
  for (int n = 0; n <= 4; ++n)
    for (int t = 0; t < (n <= 3 ? 3 : 1); ++t) {
      const SpectralPoint pt = ps.point(n);
      EXPECT_EQ(transfer_matrix(pt), transfer_matrix_naive(pt)) << "L=" << n;
    }
}

TEST(Transfer, ApplyMatchesMatrix) {
  PointSampler ps(12);
  const SpectralPoint pt = ps.point(4);
  StateVector v(pt.dimension());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = Scalar(static_cast<long>(a * a) - 3);
  EXPECT_EQ(transfer_apply(v, pt), transfer_matrix(pt).apply(v));
  EXPECT_EQ(transfer_apply_naive(v, pt), transfer_apply(v, pt));
}

TEST(Transfer, EmptySystem) {
  PointSampler ps(13);
  const SpectralPoint pt = ps.point(0);
  EXPECT_EQ(transfer_matrix(pt), SparseOperator::identity(1));
}

TEST(Transfer, ColumnSumsAndCommuting) {
  PointSampler ps(14);
  for (int n = 1; n <= 4; ++n) {
    const SpectralPoint pt = ps.point(n);
    EXPECT_TRUE(check_column_sums(pt)) << "L=" << n;
    EXPECT_TRUE(check_commuting(pt, ps.draw_scalar())) << "L=" << n;
  }
}

TEST(Transfer, Interlacing) {
  PointSampler ps(15);
  for (int n = 1; n <= 4; ++n) {
    const SpectralPoint pt = ps.point(n);
    for (int i = 0; i <= n; ++i) EXPECT_TRUE(check_interlace(pt, i)) << "L=" << n << " i=" << i;
  }
}

TEST(Transfer, Recursions) {
  const Scalar& q = q_root();
  PointSampler ps(16);
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      SpectralPoint pt;
      do {
        pt = ps.point(n);
        pt.z[static_cast<std::size_t>(i)] = q * pt.z[static_cast<std::size_t>(i - 1)];
      } while (!is_generic(pt));
      EXPECT_EQ(bulk_recursion_factor(pt.zi(i), pt.w), Scalar(1L));
      EXPECT_TRUE(check_T_recursion(pt, i)) << "L=" << n << " i=" << i;
    }
  for (int n = 1; n <= 4; ++n) {
    SpectralPoint lp, rp;
    do {
      lp = ps.point(n);
      lp.z[0] = q * lp.zeta1;
    } while (!is_generic(lp));
    do {
      rp = ps.point(n);
      rp.z.back() = rp.zeta2 / q;
    } while (!is_generic(rp));
    EXPECT_TRUE(check_T_boundary_recursion_left(lp)) << "L=" << n;
    EXPECT_TRUE(check_T_boundary_recursion_right(rp)) << "L=" << n;
  }
}

TEST(Transfer, SingularTile) {
  SpectralPoint pt;
  pt.z = {Scalar(2L), Scalar(3L)};
  pt.zeta1 = Scalar(5L);
  pt.zeta2 = Scalar(7L);
  // bottom tile R(q z_1, w) has denominator [q^2 z_1 / w]
  pt.w = q_root() * q_root() * pt.z[0];
  EXPECT_FALSE(is_generic(pt));
  EXPECT_THROW(transfer_matrix(pt), singular_parameter);
  pt.w = Scalar();
  EXPECT_THROW(row_weights(pt), singular_parameter);
}

TEST(Transfer, SizeCaps) {
  PointSampler ps(17);
  EXPECT_THROW(transfer_matrix_naive(ps.point(5)), invalid_argument);
}
