#include <gtest/gtest.h>

#include <set>

#include "pfaff/cubic.hpp"
#include "pfaff/errors.hpp"
#include "support.hpp"

using namespace pfaff;
using pfaff::testing::Rng;

namespace {

const Field Q = Field::rationals();

Poly P(const std::string& s, const Field& f = Q) { return Poly::parse(s, f); }

std::string entries(const DeterminantalRep& m) {
  std::string s;
  for (const auto& b : m.blocks)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s += b(i, j).to_string() + ",";
  return s;
}

}  // namespace

TEST(Weierstrass, Polynomials) {
  EXPECT_EQ(weierstrass_poly(Q.zero(), Q.one()), P("x0^3 + x1^3 - x1*x2^2"));
  const WeierstrassCurve degenerate{Q.zero(), Q.zero()};
  EXPECT_EQ(degenerate.poly(), P("x0^3 - x1*x2^2"));
  EXPECT_FALSE(degenerate.smooth_flag());
  EXPECT_TRUE((WeierstrassCurve{Q.zero(), Q.one()}.smooth_flag()));
  Rng rng(1);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(weierstrass_poly(rng.scalar(Q), rng.scalar(Q)).degree(), 3u);
}

TEST(CubicDeterminantal, BaseExample) {
  const WeierstrassCurve c{Q.zero(), Q.one()};
  const DeterminantalRep m = cubic_determinantal(c, {Q.zero(), Q.one()});
  EXPECT_TRUE(m.scale.is_one());
  EXPECT_EQ(m.matrix().determinant(), P("x0^3 + x1^3 - x1*x2^2"));
  EXPECT_EQ(m.blocks[0], ConstMatrix::identity(Q, 3));
  EXPECT_TRUE(m.blocks[2](0, 1).is_one());
  EXPECT_TRUE(m.blocks[2](1, 2).is_one());
  const DeterminantalRep other = cubic_determinantal(c, {Q.zero(), -Q.one()});
  EXPECT_NE(entries(m), entries(other));
}

TEST(CubicDeterminantal, PointNotOnCurve) {
  const WeierstrassCurve c{Q.zero(), Q.one()};
  try {
    cubic_determinantal(c, {Q.one(), Q.one()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotOnCurve);
  }
}

TEST(CubicDeterminantal, RejectsCharacteristicThree) {
  const Field f3 = Field::prime(3);
  EXPECT_THROW(cubic_determinantal({f3.zero(), f3.one()}, {f3.zero(), f3.one()}), Error);
}

TEST(CubicDeterminantal, RandomRationalCurvesThroughChosenPoints) {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    // Pick (s, l, alpha) and solve for beta.
    const Scalar s = rng.scalar(Q), l = rng.scalar(Q), alpha = rng.scalar(Q);
    const Scalar beta = l * l - s.pow(3) - alpha * s;
    const DeterminantalRep m = cubic_determinantal({alpha, beta}, {s, l});
    EXPECT_TRUE(m.scale.is_one());
  }
}

TEST(CubicPfaffian, ScaleAndStructure) {
  const WeierstrassCurve c{Q.zero(), Q.one()};
  const PfaffianRep a = cubic_pfaffian(c, {Q.zero(), Q.one()});
  EXPECT_EQ(a.scale, Q.from_int(-1));
  EXPECT_EQ(a.matrix(), decomposable_pfaffian(cubic_determinantal(c, {Q.zero(), Q.one()})).matrix());
  EXPECT_TRUE(gradient_identity_symbolic(a));
  std::vector<Point> pts;
  for (const auto& pt : small_rational_points(c, 10)) pts.push_back(pt.projective());
  pts.emplace_back(Q.zero(), Q.zero(), Q.one());
  EXPECT_TRUE(corank_profile(a, pts).all_two());
}

TEST(Enumerate, SmallPrimeExample) {
  const WeierstrassCurve c{Q.zero(), Q.one()};
  const auto pts = enumerate_affine_points(c, 5);
  const Field f5 = Field::prime(5);
  bool has01 = false, has04 = false;
  for (const auto& pt : pts) {
    has01 = has01 || (pt.s == f5.zero() && pt.l == f5.one());
    has04 = has04 || (pt.s == f5.zero() && pt.l == f5.from_int(4));
  }
  EXPECT_TRUE(has01);
  EXPECT_TRUE(has04);
  EXPECT_LE(pts.size(), 10u);
}

TEST(Enumerate, EveryPointGivesAVerifiedRepWithConstantSign) {
  for (std::uint64_t p : {7u, 13u, 31u}) {
    const Field f = Field::prime(p);
    const WeierstrassCurve c = WeierstrassCurve{Q.one(), Q.one()}.reduced(f);
    std::set<std::string> seen;
    for (const auto& pt : enumerate_affine_points(c, p)) {
      const DeterminantalRep m = cubic_determinantal(c, pt);
      EXPECT_TRUE(m.scale.is_one());
      EXPECT_EQ(cubic_pfaffian(c, pt).scale, f.from_int(-1));
      EXPECT_TRUE(seen.insert(entries(m)).second) << "two points gave the same matrices";
    }
  }
}

TEST(SmallRationalPoints, KnownPoints) {
  const auto pts = small_rational_points({Q.from_int(2), Q.from_int(3)}, 5);
  std::set<std::string> got;
  for (const auto& pt : pts) got.insert(pt.s.to_string() + "," + pt.l.to_string());
  EXPECT_TRUE(got.count("-1,0"));
  EXPECT_TRUE(got.count("3,6"));
  EXPECT_TRUE(got.count("3,-6"));
}
