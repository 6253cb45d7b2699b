#include <gtest/gtest.h>

#include "pfaff/cubic.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/io.hpp"
#include "support.hpp"

using namespace pfaff;
using pfaff::testing::Rng;

namespace {

const Field Q = Field::rationals();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(SkewFile, RoundTrip) {
  Rng rng(1);
  for (const Field& f : {Q, Field::prime(101)}) {
    const SkewPolyMatrix s = rng.skew_linear(f, 6);
    const std::string text = io::format_skew(s);
    EXPECT_EQ(io::file_kind(text), "skew");
    EXPECT_EQ(io::parse_skew(text), s);
  }
}

TEST(SkewFile, HandWritten) {
  const std::string text =
      "# a 4x4 example\n"
      "skew 4 1 QQ\n"
      "1 2 x0\n"
      "3 4 x0 + x2   # trailing comment\n"
      "1 4 -x1\n";
  const SkewPolyMatrix s = io::parse_skew(text);
  EXPECT_EQ(s.size(), 4u);
  // a12 a34 - a13 a24 + a14 a23 with a13 = a23 = a24 = 0
  EXPECT_EQ(pfaffian(s), Poly::parse("x0^2 + x0*x2", Q));
}

TEST(SkewFile, Errors) {
  EXPECT_EQ(code_of([] { io::parse_skew(""); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_skew("skew 4 1 QQ\n2 1 x0\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_skew("skew 4 1 QQ\n1 5 x0\n"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { io::parse_skew("skew 4 1 QQ\n1 2 x0^2\n"); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { io::parse_skew("skew four 1 QQ\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_skew("pfaffrep 4 QQ\n"); }), ErrorCode::Parse);
}

TEST(RepFiles, RoundTripCubic) {
  const WeierstrassCurve c{Q.zero(), Q.one()};
  const DeterminantalRep m = cubic_determinantal(c, {Q.zero(), Q.one()});
  const io::RepFile d = io::parse_detrep(io::format_detrep(m.blocks, m.curve));
  EXPECT_EQ(d.curve, m.curve);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(d.blocks[k], m.blocks[k]);

  const PfaffianRep a = cubic_pfaffian(c, {Q.zero(), Q.one()});
  const std::string text = io::format_pfaffrep(a.blocks, a.curve);
  EXPECT_EQ(io::file_kind(text), "pfaffrep");
  const io::RepFile p = io::parse_pfaffrep(text);
  EXPECT_EQ(make_pfaffian_rep(p.blocks, p.curve).scale, Q.from_int(-1));
}

TEST(RepFiles, Errors) {
  EXPECT_EQ(code_of([] { io::parse_pfaffrep("pfaffrep 2 QQ\nA0\n1 2 1\n"); }), ErrorCode::Parse);  // no curve
  EXPECT_EQ(code_of([] { io::parse_pfaffrep("pfaffrep 2 QQ\ncurve x0\nA0\n2 1 1\n"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_pfaffrep("pfaffrep 2 QQ\ncurve x0\n1 2 1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_detrep("detrep 1 QQ\ncurve x0\nM0\n1 1 zz\n"); }), ErrorCode::Parse);
}

TEST(ParamFile, RoundTripWithAction) {
  Rng rng(2);
  const Field f = Field::prime(101);
  quartic::QuarticParams q(quartic::ParamMode::Reduced, f);
  for (const auto& ij : quartic::kReducedKeys) q.set(ij, rng.scalar(f));
  const std::string text = io::format_params(q) + "action 2 3 5\n";
  const io::ParamFile pf = io::parse_params(text);
  EXPECT_EQ(pf.params, q);
  ASSERT_TRUE(pf.action.has_value());
  EXPECT_EQ(pf.action->a, f.from_int(2));
  EXPECT_EQ(pf.action->e, f.from_int(3));
  EXPECT_EQ(pf.action->p, f.from_int(5));
}

TEST(ParamFile, Errors) {
  EXPECT_EQ(code_of([] { io::parse_params("params reduced QQ\ncij 1 4 1\n"); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { io::parse_params("params sideways QQ\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_params("params full QQ\ncij 1 9 1\n"); }), ErrorCode::IndexOutOfRange);
}

TEST(Files, MissingFile) {
  EXPECT_EQ(code_of([] { io::read_file("/nonexistent/file.txt"); }), ErrorCode::Parse);
}
