#include <gtest/gtest.h>

#include "loopqkz/chars.hpp"
#include "loopqkz/random.hpp"

using namespace loopqkz;

TEST(Characters, KnownValues) {
  // sp(4) vector representation: x1 + 1/x1 + x2 + 1/x2
  EXPECT_EQ(symplectic_character({1, 0}, {Scalar(4L), Scalar(9L)}), scalar_from_rational(481, 36));
  EXPECT_EQ(symplectic_character({}, {Scalar(4L), Scalar(9L)}), Scalar(1L));
  EXPECT_EQ(symplectic_character({}, {}), Scalar(1L));
  EXPECT_THROW(symplectic_character({2}, {}), invalid_argument);
  // single variable: chi_k(x) = (x^(k+1) - x^-(k+1)) / (x - 1/x)
  const Scalar x(3L);
  EXPECT_EQ(symplectic_character({2}, {x}), x * x + Scalar(1L) + x.pow(-2));
}

TEST(Characters, Dimensions) {
  EXPECT_EQ(character_confluent({1, 0, 0}, {}, 3), Scalar(6L));
  EXPECT_EQ(character_confluent({1, 1}, {}, 2), Scalar(5L));
  EXPECT_EQ(character_confluent({2, 0}, {}, 2), Scalar(10L));
  // fixed arguments at 1 or equal to each other
  EXPECT_EQ(character_confluent({1, 0, 0}, {Scalar(1L)}, 2), Scalar(6L));
  EXPECT_EQ(character_confluent({1, 0, 0}, {Scalar(2L), Scalar(2L)}, 1), Scalar(7L));
  EXPECT_EQ(character_confluent({1, 0}, {Scalar(4L)}, 1), Scalar(4L) + scalar_from_rational(1, 4) + Scalar(2L));
}

TEST(Characters, ConfluentPointRejected) {
  EXPECT_THROW(symplectic_character({1, 0, 0}, {Scalar(1L), Scalar(1L), Scalar(1L)}), confluent_point);
  EXPECT_THROW(symplectic_character({1, 0}, {Scalar(2L), scalar_from_rational(1, 2)}), confluent_point);
  EXPECT_EQ(character_any({1, 0}, {Scalar(2L), Scalar(2L)}), Scalar(5L));
}

TEST(Characters, Symmetry) {
  const Scalar a(2L), b = scalar_from_rational(3, 5), c = root_of_unity(1) + Scalar(2L);
  const Partition lam{3, 1, 1};
  const Scalar v = symplectic_character(lam, {a, b, c});
  EXPECT_EQ(symplectic_character(lam, {b, c, a}), v);
  EXPECT_EQ(symplectic_character(lam, {a.inverse(), b, c}), v);
  EXPECT_EQ(symplectic_character(lam, {a, b.inverse(), c.inverse()}), v);
}

TEST(Characters, Partitions) {
  EXPECT_EQ(lambda_partition(0), Partition{});
  EXPECT_EQ(lambda_partition(4), (Partition{1, 1, 0, 0}));
  EXPECT_EQ(lambda_partition(5), (Partition{2, 1, 1, 0, 0}));
  EXPECT_EQ(mu_partition(2), (Partition{3, 1}));
  for (int n = 1; n <= 10; ++n) EXPECT_NO_THROW(mu_partition(n));
  EXPECT_THROW(validate_partition({1, 2}), invalid_argument);
  EXPECT_THROW(validate_partition({1, -1}), invalid_argument);
  EXPECT_THROW(symplectic_character({1, 1, 1}, {Scalar(2L)}), invalid_argument);
}

TEST(Characters, Recursion) {
  const Scalar& q = q_root();
  PointSampler ps(21);
  for (int n = 2; n <= 6; ++n)
    for (int j = 1; j < n; ++j) {
      ps.reset();
      std::vector<Scalar> z;
      for (int i = 0; i < n; ++i) z.push_back(ps.draw_scalar());
      z[static_cast<std::size_t>(j)] = q * z[static_cast<std::size_t>(j - 1)];
      EXPECT_TRUE(check_char_recursion(n, z, j)) << "L=" << n << " j=" << j;
    }
}

TEST(Characters, ProductSymmetry) {
  PointSampler ps(22);
  const SpectralPoint pt = ps.point(3);
  const Scalar z = z_product(pt);
  EXPECT_EQ(z_product(pt.swapped(1)), z);
  EXPECT_EQ(z_product(pt.swapped(2)), z);
  EXPECT_EQ(z_product(pt.with_z(1, pt.zi(1).inverse())), z);
}
