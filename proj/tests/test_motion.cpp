#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "jinsig/motion.hpp"
#include "test_util.hpp"

using namespace jinsig;
using P = Point2<double>;

namespace {
Mesh2d sample_mesh() { return Mesh2d({P(0, 0), P(1, 0.5), P(2, -0.3), P(2.5, 1)}); }
}  // namespace

TEST(Motion, IdentityLeavesMeshUnchanged) {
  const auto m = sample_mesh();
  const auto out = apply_motion(GroupElement<double>::identity(Group::SE), m);
  for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(out[i], m[i]);
}

TEST(Motion, QuarterTurnAboutOrigin) {
  const GroupElement<double> g(Group::SE, rotation(std::numbers::pi / 2), P::Zero());
  const P q = g(P(1, 0));
  EXPECT_NEAR(q.x(), 0.0, 1e-15);
  EXPECT_NEAR(q.y(), 1.0, 1e-15);
}

TEST(Motion, MembershipIsChecked) {
  Matrix2<double> shear;
  shear << 1, 1, 0, 1;
  EXPECT_NO_THROW(GroupElement<double>(Group::SA, shear, P::Zero()));
  EXPECT_ERROR_CODE(GroupElement<double>(Group::SE, shear, P::Zero()), ErrorCode::InvalidGroupElement);
  EXPECT_ERROR_CODE(GroupElement<double>(Group::SE, reflection_x<double>(), P::Zero()),
                    ErrorCode::InvalidGroupElement);
  EXPECT_NO_THROW(GroupElement<double>(Group::E, reflection_x<double>(), P::Zero()));
  EXPECT_ERROR_CODE(GroupElement<double>(Group::SA, Matrix2<double>(2 * Matrix2<double>::Identity()), P::Zero()),
                    ErrorCode::InvalidGroupElement);
}

TEST(Motion, RandomIsDeterministicPerSeed) {
  const auto a = random_motion<double>(Group::SE, std::uint64_t(0));
  const auto b = random_motion<double>(Group::SE, std::uint64_t(0));
  EXPECT_EQ(a.linear(), b.linear());
  EXPECT_EQ(a.translation(), b.translation());
}

TEST(Motion, RandomElementsBelongToTheirGroup) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    EXPECT_NEAR(random_motion<double>(Group::SA, seed).linear().determinant(), 1.0, 1e-12);
    const auto e = random_motion<double>(Group::SE, seed).linear();
    EXPECT_LT((e.transpose() * e - Matrix2<double>::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::abs(random_motion<double>(Group::Abar, seed).linear().determinant()), 1.0, 1e-12);
  }
}

TEST(Motion, EuclideanSamplesHaveBothOrientations) {
  int positive = 0, negative = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    (random_motion<double>(Group::E, seed).reflects() ? negative : positive)++;
  }
  EXPECT_GT(positive, 0);
  EXPECT_GT(negative, 0);
}

TEST(Motion, InverseAndComposition) {
  std::mt19937_64 rng(5);
  for (Group group : {Group::SE, Group::E, Group::SA, Group::Abar}) {
    const auto g = random_motion<double>(group, rng);
    const auto h = random_motion<double>(group, rng);
    const P p(0.3, -1.7);
    const P back = g.inverse()(g(p));
    EXPECT_LT((back - p).norm(), 1e-10);
    EXPECT_LT((g.compose(h)(p) - g(h(p))).norm(), 1e-10);
  }
}

TEST(Motion, GroupPredicates) {
  EXPECT_TRUE(is_euclidean(Group::E));
  EXPECT_FALSE(is_euclidean(Group::SA));
  EXPECT_TRUE(allows_reflection(Group::Abar));
  EXPECT_FALSE(allows_reflection(Group::SE));
  EXPECT_EQ(to_string(Group::Abar), "Abar");
}
