#include <gtest/gtest.h>

#include <algorithm>

#include "loopqkz/io.hpp"
#include "loopqkz/random.hpp"

using namespace loopqkz;

TEST(Io, ScalarRoundTrip) {
  const Scalar x(std::array<Rational, 4>{make_rational(-3, 4), 0, 5, make_rational(1, 9)});
  const json j = to_json(x);
  EXPECT_EQ(j.dump(), R"(["-3/4","0/1","5/1","1/9"])");
  EXPECT_EQ(scalar_from_json(j), x);
  EXPECT_EQ(scalar_from_json(json("7/2")), scalar_from_rational(7, 2));
  EXPECT_EQ(scalar_from_json(json(3)), Scalar(3L));
  EXPECT_THROW(scalar_from_json(json::array({1, 2})), invalid_argument);
}

TEST(Io, ParseScalar) {
  EXPECT_EQ(parse_scalar("4/6"), scalar_from_rational(2, 3));
  EXPECT_EQ(parse_scalar("0:1:0:0"), root_of_unity(1));
  EXPECT_THROW(parse_scalar("1:2:3"), invalid_argument);
  EXPECT_THROW(parse_scalar("1:2:3:4:5"), invalid_argument);
  EXPECT_THROW(parse_scalar("abc"), invalid_argument);
  EXPECT_EQ(parse_scalar_list("2,1/3,0:0:1:0"),
            (std::vector<Scalar>{Scalar(2L), scalar_from_rational(1, 3), root_of_unity(2)}));
  EXPECT_TRUE(parse_scalar_list("").empty());
}

TEST(Io, GroundstateJson) {
  PointSampler ps(51);
  const SpectralPoint pt = ps.point(2);
  const GroundstateVector gs = solve(pt);
  const json j = to_json(gs);
  EXPECT_EQ(j["schemaVersion"], schema_version);
  EXPECT_EQ(j["point"]["L"], 2);
  EXPECT_EQ(j["normalization"]["mode"], "all-open");
  ASSERT_EQ(j["components"].size(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    EXPECT_EQ(scalar_from_json(j["components"][LinkPattern(2, a).to_string()]), gs.components[a]);
  // deterministic
  EXPECT_EQ(to_json(solve(pt)).dump(), j.dump());
}

TEST(Io, GroundstateCsv) {
  PointSampler ps(52);
  const GroundstateVector gs = solve(ps.point(1));
  const std::string csv = to_csv(gs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "pattern,c0,c1,c2,c3");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Io, OperatorJson) {
  const SparseOperator id = SparseOperator::identity(2);
  const json j = to_json(id);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["entries"].size(), 2u);
}
