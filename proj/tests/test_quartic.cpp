#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "pfaff/curve_reps.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/expansion.hpp"
#include "pfaff/quartic.hpp"
#include "reference_formulas.hpp"
#include "support.hpp"

using namespace pfaff;
using namespace pfaff::quartic;
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

QuarticParams random_reduced(Rng& rng, const Field& f) {
  QuarticParams q(ParamMode::Reduced, f);
  for (const auto& ij : kReducedKeys) q.set(ij, rng.scalar(f));
  return q;
}

GroupElement random_group_element(Rng& rng, const Field& f) {
  for (;;) {
    GroupElement g{rng.scalar(f), rng.scalar(f), rng.nonzero(f)};
    if (!(g.a == g.e)) return g;
  }
}

const std::vector<QuarticParams>& solutions_mod(std::uint64_t p) {
  static std::map<std::uint64_t, std::vector<QuarticParams>> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    SolveOptions o;
    o.prime = p;
    o.budget = 40 * p * p * p;
    o.want = 6;
    it = cache.emplace(p, solve_over_prime_field(o).solutions).first;
  }
  return it->second;
}

bool is_solution(const QuarticParams& q) {
  for (const auto& v : residual_values(q))
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST(CanonicalFrame, Pattern) {
  const ConstMatrix x = x_frame(Q), z = z_frame(Q);
  EXPECT_TRUE(x.is_skew());
  EXPECT_TRUE(z.is_skew());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      EXPECT_EQ(x(i, j).is_one(), i + j == 7) << i << j;
      EXPECT_EQ(x(i, j).is_zero(), i + j != 7);
      EXPECT_EQ(z(i, j).is_one(), i + j == 6) << i << j;
      EXPECT_EQ(z(i, j).is_zero(), i + j != 6);
    }
  EXPECT_TRUE(pfaffian(x).is_one());
  EXPECT_EQ(quartic_curve(Q), Poly::parse("x^4 - y*z^3 - y^4", Q));
}

TEST(AssembleCanonical, ReducedModeEntries) {
  Rng rng(1);
  const QuarticParams q = random_reduced(rng, Q);
  const ConstMatrix y = y_matrix(q);
  EXPECT_TRUE(y(3, 7).is_one());
  EXPECT_TRUE(y(3, 6).is_zero());
  EXPECT_EQ(y(2, 6), -q.get({4, 6}));
  EXPECT_EQ(y(0, 6), -q.get({2, 6}) - q.get({3, 5}));
  EXPECT_EQ(y(1, 6), -q.get({3, 6}) - q.get({4, 5}));
  for (const auto& ij : kNormalizedZeroKeys)
    EXPECT_TRUE(y(static_cast<std::size_t>(ij.first - 1), static_cast<std::size_t>(ij.second - 1)).is_zero());
  EXPECT_TRUE(y.is_skew());
}

TEST(AssembleCanonical, ZeroParametersGiveUnitXCoefficient) {
  QuarticParams q(ParamMode::Reduced, Q);
  for (const auto& ij : kReducedKeys) q.set(ij, Q.zero());
  const Poly pf = pfaffian(assemble_canonical(q));
  EXPECT_TRUE(pf.coefficient(Monomial{{4, 0, 0}}).is_one());
}

TEST(AssembleCanonical, MissingParameter) {
  QuarticParams q(ParamMode::Reduced, Q);
  q.set({1, 2}, Q.one());
  EXPECT_EQ(code_of([&] { assemble_canonical(q); }), ErrorCode::MissingParameter);
  QuarticParams full(ParamMode::Full, Q);
  EXPECT_EQ(code_of([&] { assemble_canonical(full); }), ErrorCode::MissingParameter);
  EXPECT_EQ(code_of([&] { q.set({1, 4}, Q.one()); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { q.set({3, 2}, Q.one()); }), ErrorCode::IndexOutOfRange);
}

TEST(Relations, MatchReferenceText) {
  const auto& rels = derive_linear_relations();
  ASSERT_EQ(rels.size(), 7u);
  for (const auto& ref : reference::kRelations) {
    const auto it = std::find_if(rels.begin(), rels.end(),
                                 [&](const Relation& r) { return param_name(r.target) == ref.target; });
    ASSERT_NE(it, rels.end()) << ref.target;
    const MPoly expected = MPoly::parse(ref.value, param_ring());
    EXPECT_EQ(it->value, expected) << ref.target << ": derived - reference = "
                                   << (it->value - expected).to_string();
  }
}

TEST(Relations, EliminationOrderAndSources) {
  const auto& rels = derive_linear_relations();
  ASSERT_EQ(rels.size(), kDependentKeys.size());
  for (std::size_t k = 0; k < rels.size(); ++k) {
    EXPECT_EQ(rels[k].target, kDependentKeys[k]);
    // The equation used is a y-linear or y^2 coefficient.
    EXPECT_LE(rels[k].source[1], 2u);
    for (const auto& t : kDependentKeys) EXPECT_EQ(rels[k].value.degree_in(*param_ring()->index_of(param_name(t))), 0u);
  }
  EXPECT_EQ(rels[0].value, MPoly::constant(param_ring(), 1));
}

TEST(Relations, ReducedMatrixIsTheNormalizedRelationSet) {
  const RingPtr pr = param_ring();
  for (const auto& rel : derive_linear_relations()) {
    MPoly v = rel.value;
    for (const auto& z : kNormalizedZeroKeys) v = v.substitute(*pr->index_of(param_name(z)), MPoly(pr));
    EXPECT_EQ(v.remap(reduced_ring()), reduced_y_entry(rel.target)) << param_name(rel.target);
  }
}

TEST(Relations, FullModeRepresentationLeavesOnlyResidualMonomials) {
  Rng rng(3);
  const Field f = Field::prime(101);
  QuarticParams full(ParamMode::Full, f);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) full.set({i, j}, rng.scalar(f));
  const QuarticParams fixed = apply_relations(full);
  const Poly defect = pfaffian(assemble_canonical(fixed)) - quartic_curve(f);
  const std::vector<Monomial> allowed{Monomial{{1, 3, 0}}, Monomial{{0, 4, 0}}, Monomial{{0, 3, 1}}};
  for (const auto& [m, c] : defect.terms())
    EXPECT_NE(std::find(allowed.begin(), allowed.end(), m), allowed.end())
        << "unexpected monomial " << m.e[0] << m.e[1] << m.e[2];
}

TEST(Residuals, MatchReferenceUpToSign) {
  const auto& res = residual_system();
  ASSERT_EQ(res.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    const MPoly ref = MPoly::parse(reference::kResiduals[k].first, reduced_ring()) -
                      MPoly::parse(reference::kResiduals[k].second, reduced_ring());
    const bool same = res[k].equation == ref;
    const bool opposite = res[k].equation == -ref;
    EXPECT_TRUE(same || opposite) << "equation " << k + 1 << ": derived - reference = "
                                  << (res[k].equation - ref).to_string();
  }
  EXPECT_EQ(res[0].monomial, (std::array<std::uint16_t, 3>{1, 3, 0}));
  EXPECT_EQ(res[1].monomial, (std::array<std::uint16_t, 3>{0, 4, 0}));
  EXPECT_EQ(res[2].monomial, (std::array<std::uint16_t, 3>{0, 3, 1}));
}

TEST(Residuals, ThirdEquationContainsThreeC45SquaredC46) {
  const MPoly t = MPoly::parse("c45^2 c46", reduced_ring());
  const auto& terms = residual_system()[2].equation.terms();
  const auto it = terms.find(t.terms().begin()->first);
  ASSERT_NE(it, terms.end());
  EXPECT_TRUE(it->second == Q.from_int(3) || it->second == Q.from_int(-3));
}

TEST(Residuals, AgreeWithDirectExpansionOfReducedMatrix) {
  std::vector<std::string> names{"x", "y", "z"};
  for (const auto& n : reduced_ring()->names()) names.push_back(n);
  const RingPtr r = make_ring(Q, names);
  const MPoly x = MPoly::variable(r, "x"), y = MPoly::variable(r, "y"), z = MPoly::variable(r, "z");
  std::vector<MPoly> upper(64, MPoly(r));
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      MPoly e = reduced_y_entry({i, j}).remap(r) * y;
      if (i + j == 9) e += x;
      if (i + j == 8) e += z;
      upper[static_cast<std::size_t>((i - 1) * 8 + (j - 1))] = e;
    }
  const MPoly pf = pfaffian_expand<MPoly>(
      8, [&](std::size_t i, std::size_t j) -> const MPoly& { return upper[i * 8 + j]; }, MPoly::constant(r, 1));
  const MPoly defect = pf - x.pow(4) + y * z.pow(3) + y.pow(4);
  const std::array<std::size_t, 3> xyz{0, 1, 2};
  std::vector<MPoly> nonzero;
  for (const auto& [e, c] : defect.split(xyz))
    if (!c.is_zero()) nonzero.push_back(c.remap(reduced_ring()));
  ASSERT_EQ(nonzero.size(), 3u);
  for (const auto& res : residual_system())
    EXPECT_NE(std::find(nonzero.begin(), nonzero.end(), res.equation), nonzero.end());
}

TEST(Solutions, AssembleToRepresentationsOfTheQuartic) {
  for (std::uint64_t p : {11u, 101u}) {
    const auto& sols = solutions_mod(p);
    ASSERT_FALSE(sols.empty());
    for (const auto& s : sols) {
      EXPECT_TRUE(is_solution(s));
      const PfaffianRep a = pfaffian_rep_from_matrix(assemble_canonical(s), quartic_curve(s.field()));
      EXPECT_TRUE(a.scale.is_one());
    }
  }
}

TEST(Solutions, NonSolutionsDoNotRepresent) {
  Rng rng(5);
  const Field f = Field::prime(101);
  for (int t = 0; t < 5; ++t) {
    const QuarticParams q = random_reduced(rng, f);
    if (is_solution(q)) continue;
    EXPECT_THROW(pfaffian_rep_from_matrix(assemble_canonical(q), quartic_curve(f)), Error);
  }
}

TEST(GroupAction, FixedParametersAndAZero) {
  Rng rng(7);
  const Field f = Field::prime(101);
  for (int t = 0; t < 50; ++t) {
    const QuarticParams q = random_reduced(rng, f);
    const GroupElement g = random_group_element(rng, f);
    const QuarticParams m = apply_group_action(q, g);
    for (const Index ij : {Index{2, 6}, Index{4, 5}, Index{4, 6}}) EXPECT_EQ(m.get(ij), q.get(ij));
    GroupElement g0 = g;
    g0.a = f.zero();
    if (g0.e.is_zero()) g0.e = f.one();
    const QuarticParams m0 = apply_group_action(q, g0);
    const Scalar p2 = g0.p * g0.p;
    for (const Index ij : {Index{1, 2}, Index{1, 3}, Index{2, 3}}) EXPECT_EQ(m0.get(ij), q.get(ij) / p2);
  }
}

TEST(GroupAction, InvalidElements) {
  Rng rng(9);
  const Field f = Field::prime(101);
  const QuarticParams q = random_reduced(rng, f);
  EXPECT_EQ(code_of([&] { apply_group_action(q, {f.one(), f.zero(), f.zero()}); }), ErrorCode::InvalidGroupElement);
  EXPECT_EQ(code_of([&] { apply_group_action(q, {f.one(), f.one(), f.one()}); }), ErrorCode::InvalidGroupElement);
}

TEST(GroupAction, InvariantsAreConstantOnOrbits) {
  Rng rng(11);
  for (const Field& f : {Field::prime(101), Q}) {
    for (int t = 0; t < 100; ++t) {
      const QuarticParams q = random_reduced(rng, f);
      const GroupElement g = random_group_element(rng, f);
      EXPECT_EQ(invariant_pair(apply_group_action(q, g)), invariant_pair(q));
    }
  }
}

TEST(GroupAction, SolutionsMapToSolutionsAndComposeWithinOrbits) {
  Rng rng(13);
  const Field f = Field::prime(101);
  for (const auto& s : solutions_mod(101)) {
    const GroupElement g1 = random_group_element(rng, f), g2 = random_group_element(rng, f);
    const QuarticParams once = apply_group_action(s, g1);
    const QuarticParams twice = apply_group_action(once, g2);
    EXPECT_TRUE(is_solution(once));
    EXPECT_TRUE(is_solution(twice));
    EXPECT_EQ(invariant_pair(twice), invariant_pair(s));
    EXPECT_TRUE(pfaffian_rep_from_matrix(assemble_canonical(twice), quartic_curve(f)).scale.is_one());
  }
}

TEST(Invariants, Examples) {
  QuarticParams q(ParamMode::Reduced, Q);
  for (const auto& ij : kReducedKeys) q.set(ij, Q.zero());
  EXPECT_EQ(invariant_pair(q), std::make_pair(Q.zero(), Q.zero()));
  q.set({3, 5}, Q.one());
  EXPECT_EQ(invariant_pair(q), std::make_pair(Q.from_int(-1), Q.zero()));
}

TEST(Invariants, MatchReferenceText) {
  Rng rng(15);
  const MPoly i1 = MPoly::parse(reference::kInvariant1, reduced_ring());
  const MPoly i2 = MPoly::parse(reference::kInvariant2, reduced_ring());
  for (int t = 0; t < 10; ++t) {
    const QuarticParams q = random_reduced(rng, Q);
    std::vector<Scalar> v;
    for (const auto& ij : kReducedKeys) v.push_back(q.get(ij));
    EXPECT_EQ(invariant_pair(q), std::make_pair(i1.evaluate(v), i2.evaluate(v)));
  }
}

TEST(Solve, SerialAndParallelAgree) {
  SolveOptions o;
  o.prime = 7;
  o.budget = 100'000;
  o.want = 5;
  o.seed = 77;
  const SolveResult a = solve_over_prime_field(o);
  o.parallel = false;
  const SolveResult b = solve_over_prime_field(o);
  EXPECT_EQ(a.solutions, b.solutions);
  EXPECT_EQ(a.attempts, b.attempts);
}

TEST(Solve, Errors) {
  SolveOptions o;
  o.prime = 3;
  EXPECT_EQ(code_of([&] { solve_over_prime_field(o); }), ErrorCode::InvalidInput);
  o.prime = 101;
  o.budget = 1000;
  EXPECT_EQ(code_of([&] { solve_over_prime_field(o); }), ErrorCode::BudgetExceeded);
}

TEST(Dimension, CountIsSix) {
  const auto& sols = solutions_mod(11);
  ASSERT_GE(sols.size(), 5u);
  const DimensionReport d = moduli_dimension_estimate(sols, 11);
  EXPECT_EQ(d.dimension, 6);
  for (auto r : d.jacobian_ranks) EXPECT_LE(r, 3u);
  EXPECT_EQ(code_of([&] { moduli_dimension_estimate(std::span(sols).first(4), 11); }),
            ErrorCode::InsufficientSamples);
}
