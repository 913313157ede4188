#include <gtest/gtest.h>

#include "loopqkz/exactfield.hpp"

using namespace loopqkz;

TEST(Field, RootsOfUnity) {
  const Scalar& q = q_root();
  EXPECT_EQ(q + q.inverse(), Scalar(-1L));
  EXPECT_EQ(q.pow(3), Scalar(1L));
  EXPECT_NE(q, Scalar(1L));
  EXPECT_EQ(root_of_unity(1).pow(12), Scalar(1L));
  EXPECT_NE(root_of_unity(1).pow(6), Scalar(1L));
  EXPECT_EQ(imaginary_unit() * imaginary_unit(), Scalar(-1L));
  EXPECT_EQ(fourth_root(2), Scalar(-1L));
  EXPECT_EQ(fourth_root(1) * fourth_root(3), Scalar(1L));
}

TEST(Field, Reduction) {
  const Scalar z = root_of_unity(1);
  EXPECT_EQ(z.pow(4), z.pow(2) - Scalar(1L));
  EXPECT_EQ(z.pow(-1), root_of_unity(11));
  for (long k = -13; k <= 13; ++k) EXPECT_EQ(z.pow(k), root_of_unity(k));
}

TEST(Field, ArithmeticAndInverse) {
  const Scalar x(std::array<Rational, 4>{make_rational(3, 2), -2, make_rational(1, 5), 7});
  const Scalar y(std::array<Rational, 4>{-1, make_rational(2, 3), 4, make_rational(-1, 9)});
  EXPECT_EQ(x * x.inverse(), Scalar(1L));
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(x / y * y, x);
  EXPECT_EQ(x.pow(5) * x.pow(-3), x * x);
  EXPECT_THROW(Scalar().inverse(), division_by_zero);
}

TEST(Field, GaloisIsAutomorphism) {
  const Scalar x(std::array<Rational, 4>{1, 2, -3, make_rational(1, 4)});
  const Scalar y(std::array<Rational, 4>{make_rational(-5, 7), 0, 1, 1});
  for (int k : {1, 5, 7, 11}) {
    EXPECT_EQ((x * y).galois(k), x.galois(k) * y.galois(k));
    EXPECT_EQ((x + y).galois(k), x.galois(k) + y.galois(k));
  }
  EXPECT_EQ(x.galois(1), x);
}

TEST(Field, BracketAndK) {
  EXPECT_EQ(kfun(Scalar(1L), Scalar(1L)), Scalar(-3L));
  EXPECT_EQ(bracket(Scalar(2L)), scalar_from_rational(3, 2));
  EXPECT_TRUE(bracket(Scalar(1L)).is_zero());
  EXPECT_THROW(bracket(Scalar()), division_by_zero);
  // k(z, zeta) = k(z, 1/zeta)
  const Scalar z = scalar_from_rational(3, 5), zeta = Scalar(4L);
  EXPECT_EQ(kfun(z, zeta), kfun(z, zeta.inverse()));
}

TEST(Field, RationalParsing) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), invalid_argument);
  EXPECT_THROW(parse_rational("x"), invalid_argument);
  EXPECT_THROW(make_rational(1, 0), invalid_argument);
}

TEST(Field, RationalPredicate) {
  EXPECT_TRUE(Scalar(5L).is_rational());
  EXPECT_FALSE(q_root().is_rational());
  EXPECT_TRUE((q_root() + q_root().inverse()).is_rational());
}
