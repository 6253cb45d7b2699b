#include <gtest/gtest.h>

#include "pfaff/errors.hpp"
#include "pfaff/expansion.hpp"
#include "pfaff/mpoly.hpp"
#include "pfaff/skew.hpp"
#include "support.hpp"

using namespace pfaff;
using pfaff::testing::Rng;

namespace {

const Field Q = Field::rationals();

Poly P(const std::string& s) { return Poly::parse(s, Q); }

// Generic skew matrix with symbolic entries a_ij in a parameter ring.
struct Generic {
  RingPtr ring;
  std::size_t n;
  std::vector<MPoly> upper;

  explicit Generic(std::size_t size) : n(size) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    ring = make_ring(Q, names);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        upper.push_back(j > i ? MPoly::variable(ring, "a" + std::to_string(i + 1) + std::to_string(j + 1))
                              : MPoly(ring));
  }
  const MPoly& at(std::size_t i, std::size_t j) const { return upper[i * n + j]; }
  MPoly pf() const {
    return pfaffian_expand<MPoly>(n, [this](std::size_t i, std::size_t j) -> const MPoly& { return at(i, j); },
                                  MPoly::constant(ring, 1));
  }
  MPoly oracle() const {
    return pfaffian_matchings<MPoly>(n, [this](std::size_t i, std::size_t j) -> const MPoly& { return at(i, j); },
                                     MPoly::constant(ring, 1));
  }
};

PolyMatrix scalar_identity(const Poly& p, std::size_t n) { return pfaff::testing::identity_times(p, n); }

}  // namespace

TEST(Pfaffian, TwoByTwo) {
  SkewPolyMatrix s(Q, 2, 1);
  s.set(0, 1, P("x0 + 2*x2"));
  EXPECT_EQ(pfaffian(s), P("x0 + 2*x2"));
  EXPECT_EQ(pfaffian_matchings_oracle(s), P("x0 + 2*x2"));
}

TEST(Pfaffian, EmptyMatrixIsOne) { EXPECT_EQ(pfaffian(SkewPolyMatrix(Q, 0, 1)), P("1")); }

TEST(Pfaffian, GenericFourByFour) {
  const Generic g(4);
  EXPECT_EQ(g.pf(), MPoly::parse("a12 a34 - a13 a24 + a14 a23", g.ring));
  EXPECT_EQ(g.oracle(), g.pf());
}

TEST(Pfaffian, GenericSixAndEightAgreeWithOracle) {
  for (std::size_t n : {6u, 8u}) {
    const Generic g(n);
    EXPECT_EQ(g.pf(), g.oracle()) << n;
  }
}

TEST(Pfaffian, OddSizeRejected) {
  EXPECT_THROW((pfaffian_expand<MPoly>(3, [](std::size_t, std::size_t) -> MPoly { return {}; }, MPoly())), Error);
}

TEST(Pfaffian, OracleSizeGuard) {
  try {
    pfaffian_matchings_oracle(SkewPolyMatrix(Q, 14, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

TEST(Pfaffian, RandomConstantSixBySix) {
  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    const ConstMatrix m = rng.skew_constant(Q, 6);
    const SkewPolyMatrix s = SkewPolyMatrix::from_constant(m);
    const Scalar pf = pfaffian(m);
    EXPECT_EQ(pfaffian_matchings_oracle(s).coefficient(Monomial{}), pf);
    EXPECT_EQ(pf * pf, m.determinant());
  }
}

TEST(Pfaffian, SquareIsDeterminantAtRandomPoints) {
  Rng rng(103);
  for (const Field& f : {Q, Field::prime(101)}) {
    for (std::size_t n = 2; n <= 8; n += 2) {
      const SkewPolyMatrix s = rng.skew_linear(f, n);
      const Poly pf = pfaffian(s);
      EXPECT_EQ(pf.degree(), n / 2);
      for (int k = 0; k < 10; ++k) {
        const Point x = rng.point(f);
        EXPECT_EQ(pf.eval(x).pow(2), s.eval(x).determinant());
      }
    }
  }
}

TEST(Pfaffian, CanonicalQuarticMatrixOverF101) {
  Rng rng(107);
  const Field f = Field::prime(101);
  for (int t = 0; t < 3; ++t) {
    ConstMatrix y = rng.skew_constant(f, 8);
    ConstMatrix x(f, 8, 8), z(f, 8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
      x(i, 7 - i) = f.one();
      x(7 - i, i) = -f.one();
    }
    for (std::size_t i = 0; i < 3; ++i) {
      z(i, 6 - i) = f.one();
      z(6 - i, i) = -f.one();
    }
    const SkewPolyMatrix s = SkewPolyMatrix::linear_pencil(x, y, z);
    EXPECT_EQ(pfaffian(s), pfaffian_matchings_oracle(s));
  }
}

TEST(PfaffianMinor, SmallCases) {
  SkewPolyMatrix s2(Q, 2, 1);
  s2.set(0, 1, P("x0"));
  EXPECT_EQ(pfaffian_minor(s2, 0, 1), P("1"));

  SkewPolyMatrix s4(Q, 4, 1);
  s4.set(0, 1, P("x0"));
  s4.set(0, 2, P("x1"));
  s4.set(0, 3, P("x2"));
  s4.set(1, 2, P("x0 + x1"));
  s4.set(1, 3, P("x1 - x2"));
  s4.set(2, 3, P("3*x2"));
  EXPECT_EQ(pfaffian_minor(s4, 0, 1), P("3*x2"));
  EXPECT_THROW(pfaffian_minor(s4, 2, 1), Error);
  EXPECT_THROW(pfaffian_minor(s4, 0, 4), Error);
}

TEST(PfaffianMinor, FirstRowExpansion) {
  Rng rng(109);
  for (std::size_t n : {4u, 6u, 8u}) {
    const SkewPolyMatrix s = rng.skew_linear(Q, n);
    Poly sum(Q, static_cast<std::uint32_t>(n / 2));
    for (std::size_t j = 1; j < n; ++j) {
      const Poly term = s.upper(0, j) * pfaffian_minor(s, 0, j);
      sum = (j % 2 == 1) ? sum + term : sum - term;
    }
    EXPECT_EQ(sum, pfaffian(s));
  }
}

TEST(Adjoint, TwoByTwo) {
  SkewPolyMatrix s(Q, 2, 1);
  s.set(0, 1, P("x0"));
  const SkewPolyMatrix adj = pfaffian_adjoint(s);
  EXPECT_EQ(adj.upper(0, 1), P("-1"));
  EXPECT_EQ(adj.at(1, 0), P("1"));
}

TEST(Adjoint, SignPatternFromGenericFourByFour) {
  // adj * A = Pf * Id on a generic 4x4 forces s_ij = (-1)^(i+j).
  const Generic g(4);
  const MPoly pf = g.pf();
  auto entry = [&](std::size_t i, std::size_t j) -> MPoly {
    if (i == j) return MPoly(g.ring);
    return i < j ? g.at(i, j) : -g.at(j, i);
  };
  auto minor = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i && k != j) keep.push_back(k);
    return g.at(keep[0], keep[1]);
  };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      MPoly acc(g.ring);
      for (std::size_t k = 0; k < 4; ++k) {
        if (k == r) continue;
        const MPoly adj = r < k ? minor(r, k).scaled(Q.from_int(adjoint_sign(r, k)))
                                : -minor(k, r).scaled(Q.from_int(adjoint_sign(k, r)));
        acc += adj * entry(k, c);
      }
      EXPECT_EQ(acc, r == c ? pf : MPoly(g.ring)) << r << "," << c;
    }
}

TEST(Adjoint, ProductIsPfaffianTimesIdentity) {
  Rng rng(113);
  for (const Field& f : {Q, Field::prime(101)}) {
    for (std::size_t n = 2; n <= 8; n += 2) {
      const SkewPolyMatrix s = rng.skew_linear(f, n);
      const SkewPolyMatrix adj = pfaffian_adjoint(s);
      const PolyMatrix expected = scalar_identity(pfaffian(s), n);
      EXPECT_EQ(adj.to_matrix() * s.to_matrix(), expected);
      EXPECT_EQ(s.to_matrix() * adj.to_matrix(), expected);
    }
  }
}

TEST(Adjoint, PowerLawsCarryTheSignMinusOneToTheK) {
  Rng rng(127);
  for (std::size_t n : {4u, 6u, 8u}) {
    const std::size_t k = n / 2;
    const Scalar sign = Q.from_int(k % 2 == 0 ? 1 : -1);
    const SkewPolyMatrix s = rng.skew_linear(Q, n);
    const Poly pf = pfaffian(s);
    const SkewPolyMatrix adj = pfaffian_adjoint(s);
    EXPECT_EQ(pfaffian(adj), pf.pow(static_cast<unsigned>(k - 1)).scaled(sign));
    const SkewPolyMatrix twice = pfaffian_adjoint(adj);
    const Poly factor = pf.pow(static_cast<unsigned>(k - 2)).scaled(sign);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(twice.upper(i, j), factor * s.upper(i, j));
  }
}

TEST(Congruence, IdentityAndScaling) {
  Rng rng(131);
  const SkewPolyMatrix s = rng.skew_linear(Q, 4);
  EXPECT_EQ(congruence(ConstMatrix::identity(Q, 4), s), s);
  const Scalar lambda = Q.from_int(3);
  const SkewPolyMatrix scaled = congruence(ConstMatrix::identity(Q, 4).scaled(lambda), s);
  EXPECT_EQ(scaled, s.scaled(lambda * lambda));
  EXPECT_EQ(pfaffian(scaled), pfaffian(s).scaled(lambda.pow(4)));
}

TEST(Congruence, PfaffianScalesByDeterminant) {
  Rng rng(137);
  for (int t = 0; t < 5; ++t) {
    const SkewPolyMatrix s = rng.skew_linear(Q, 6);
    const ConstMatrix x = rng.matrix(Q, 6);
    EXPECT_EQ(pfaffian(congruence(x, s)), pfaffian(s).scaled(x.determinant()));
  }
}

TEST(RankAtPoint, EvenAndDetectsPfaffianZeros) {
  const Point pt(Q.one(), Q.from_int(2), Q.from_int(-1));
  EXPECT_EQ(rank_at_point(SkewPolyMatrix(Q, 4, 1), pt), 0u);
  SkewPolyMatrix s2(Q, 2, 0);
  s2.set(0, 1, P("1"));
  EXPECT_EQ(rank_at_point(s2, pt), 2u);

  Rng rng(139);
  const Field f = Field::prime(7);
  for (int t = 0; t < 40; ++t) {
    const SkewPolyMatrix s = rng.skew_linear(f, 6);
    const Point x = rng.point(f);
    const std::size_t r = rank_at_point(s, x);
    EXPECT_EQ(r % 2, 0u);
    EXPECT_EQ(r == 6, !pfaffian(s).eval(x).is_zero());
  }
}
