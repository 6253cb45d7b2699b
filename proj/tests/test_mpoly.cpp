#include <gtest/gtest.h>

#include "pfaff/errors.hpp"
#include "pfaff/mpoly.hpp"

using namespace pfaff;

namespace {

RingPtr ring() {
  static const RingPtr r = make_ring(Field::rationals(), {"a", "b", "c12", "c13"});
  return r;
}

MPoly M(const std::string& s) { return MPoly::parse(s, ring()); }

}  // namespace

TEST(MPoly, ParseHandlesJuxtapositionAndParentheses) {
  EXPECT_EQ(M("a (b + 1)"), M("a*b + a"));
  EXPECT_EQ(M("c12 c13^2 - 2 c12"), M("c12*c13*c13 - 2*c12"));
  EXPECT_EQ(M("(a + b)^2"), M("a^2 + 2*a*b + b^2"));
  EXPECT_EQ(M("1/2 a + 1/2 a"), M("a"));
  EXPECT_EQ(M("-(a - b)"), M("b - a"));
}

TEST(MPoly, ParseErrors) {
  EXPECT_THROW(M("a + d"), Error);
  EXPECT_THROW(M("a +"), Error);
  EXPECT_THROW(M("(a"), Error);
}

TEST(MPoly, CoefficientsAndSubstitution) {
  const MPoly f = M("3 a^2 b + a c12 - 5");
  EXPECT_EQ(f.degree_in(0), 2u);
  EXPECT_EQ(f.coefficient_of(0, 2), M("3 b"));
  EXPECT_EQ(f.coefficient_of(0, 0), M("-5"));
  EXPECT_EQ(f.substitute(0, M("b + 1")), M("3 (b+1)^2 b + (b+1) c12 - 5"));
  EXPECT_EQ(f.partial(0), M("6 a b + c12"));
}

TEST(MPoly, SplitSeparatesVariables) {
  const MPoly f = M("a^2 c12 + a^2 b + a c13 + 7");
  const std::array<std::size_t, 1> vars{0};
  const auto parts = f.split(vars);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at({2}), M("c12 + b"));
  EXPECT_EQ(parts.at({1}), M("c13"));
  EXPECT_EQ(parts.at({0}), M("7"));
}

TEST(MPoly, EvaluateAndReduce) {
  const MPoly f = M("a^2 + 1/2 b");
  const Field q = Field::rationals();
  const std::vector<Scalar> v{q.from_int(3), q.from_int(4), q.zero(), q.zero()};
  EXPECT_EQ(f.evaluate(v), q.from_int(11));
  const Field f7 = Field::prime(7);
  const RingPtr r7 = make_ring(f7, ring()->names());
  const std::vector<Scalar> v7{f7.from_int(3), f7.from_int(4), f7.zero(), f7.zero()};
  EXPECT_EQ(f.reduce(r7).evaluate(v7), f7.from_int(11));
}

TEST(MPoly, FormatRoundTrip) {
  for (const char* s : {"a^3 b - 2/3 c12 c13 + 4", "0", "-a", "a b c12 c13"}) {
    const MPoly f = M(s);
    EXPECT_EQ(M(f.to_string()), f) << s;
  }
}

TEST(MPoly, RemapByName) {
  const RingPtr small = make_ring(Field::rationals(), {"c13", "a"});
  const MPoly f = M("a c13 + a");
  EXPECT_EQ(f.remap(small), MPoly::parse("a c13 + a", small));
  EXPECT_THROW(M("b").remap(small), Error);
}
