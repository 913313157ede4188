#include <gtest/gtest.h>

#include "loopqkz/baxter.hpp"
#include "loopqkz/random.hpp"

using namespace loopqkz;

namespace {

struct Draw {
  Scalar z, w, zeta;
};

std::vector<Draw> draws(int count) {
  PointSampler ps(7);
  std::vector<Draw> out;
  for (int t = 0; t < count; ++t) {
    ps.reset();
    const Scalar z = ps.draw_scalar(), w = ps.draw_scalar(), zeta = ps.draw_scalar();
    out.push_back({z, w, zeta});
  }
  return out;
}

}  // namespace

TEST(Baxter, BulkWeightsAtSpecialPoints) {
  // R(1) is the identity, R(q) is proportional to the cup-cap picture
  EXPECT_EQ(bulk_weights(Scalar(1L)), (FaceWeights{Scalar(1L), Scalar(0L)}));
  EXPECT_TRUE(bulk_weights(q_root()).identity.is_zero());
  EXPECT_THROW(bulk_weights(q_root().inverse()), singular_parameter);
  EXPECT_THROW(bulk_weights(Scalar()), singular_parameter);
}

TEST(Baxter, Unitarity) {
  const int n = 4;
  const SparseOperator id = SparseOperator::identity(std::size_t{1} << n);
  for (const auto& d : draws(8)) {
    for (int i = 1; i < n; ++i) EXPECT_EQ(rcheck(i, d.z, n) * rcheck(i, d.z.inverse(), n), id);
    EXPECT_EQ(kcheck0(d.z, d.zeta, n) * kcheck0(d.z.inverse(), d.zeta, n), id);
    EXPECT_EQ(kcheckL(d.z, d.zeta, n) * kcheckL(d.z.inverse(), d.zeta, n), id);
  }
}

TEST(Baxter, YangBaxter) {
  const int n = 4;
  for (const auto& d : draws(6))
    for (int i = 1; i + 1 < n; ++i)
      EXPECT_EQ(rcheck(i, d.z, n) * rcheck(i + 1, d.z * d.w, n) * rcheck(i, d.w, n),
                rcheck(i + 1, d.w, n) * rcheck(i, d.z * d.w, n) * rcheck(i + 1, d.z, n));
}

TEST(Baxter, Reflection) {
  const int n = 3;
  for (const auto& d : draws(6)) {
    const Scalar &z = d.z, &w = d.w, &zeta = d.zeta;
    EXPECT_EQ(kcheck0(z, zeta, n) * rcheck(1, z * w, n) * kcheck0(w, zeta, n) * rcheck(1, w / z, n),
              rcheck(1, w / z, n) * kcheck0(w, zeta, n) * rcheck(1, z * w, n) * kcheck0(z, zeta, n));
    EXPECT_EQ(kcheckL(z, zeta, n) * rcheck(n - 1, z * w, n) * kcheckL(w, zeta, n) * rcheck(n - 1, w / z, n),
              rcheck(n - 1, w / z, n) * kcheckL(w, zeta, n) * rcheck(n - 1, z * w, n) * kcheckL(z, zeta, n));
  }
}

TEST(Baxter, Crossing) {
  const Scalar& q = q_root();
  for (const auto& d : draws(20)) {
    const FaceWeights a = face_weights_R(d.z, d.w), b = face_weights_R(q * d.w, d.z);
    EXPECT_EQ(a.identity, b.cup);
    EXPECT_EQ(a.cup, b.identity);
  }
}

TEST(Baxter, BoundaryTiles) {
  const Scalar& q = q_root();
  for (const auto& d : draws(5)) {
    EXPECT_EQ(two_term_operator(face_weights_K0(d.w, d.zeta), 0, 1), kcheck0(q * d.w, d.zeta, 1));
    EXPECT_EQ(two_term_operator(face_weights_KL(d.w, d.zeta), 1, 1), kcheckL(d.w, d.zeta, 1));
    // boundary weights at x = 1 are the identity
    EXPECT_EQ(boundary_weights(Scalar(1L), d.zeta), (FaceWeights{Scalar(1L), Scalar(0L)}));
  }
}

TEST(Baxter, SingularBoundary) {
  const Scalar& q = q_root();
  // k(1/x, zeta) = 0 at x = 1/(q zeta)
  const Scalar zeta(3L);
  EXPECT_THROW(boundary_weights((q * zeta).inverse(), zeta), singular_parameter);
}
