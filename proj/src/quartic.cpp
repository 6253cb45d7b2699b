#include "pfaff/quartic.hpp"

#include <algorithm>

#include "pfaff/errors.hpp"
#include "pfaff/expansion.hpp"
#include "pfaff/kernels.hpp"

namespace pfaff::quartic {

namespace {

constexpr std::size_t kSize = 8;

std::vector<Index> all_pairs() {
  std::vector<Index> out;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::string> pair_names() {
  std::vector<std::string> out;
  for (const auto& ij : all_pairs()) out.push_back(param_name(ij));
  return out;
}

bool is_reduced_key(Index ij) { return std::find(kReducedKeys.begin(), kReducedKeys.end(), ij) != kReducedKeys.end(); }

void check_index(Index ij) {
  if (ij.first < 1 || ij.second > 8 || ij.first >= ij.second)
    throw Error(ErrorCode::IndexOutOfRange,
                "parameter index (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") out of range");
}

// The 12-parameter form of the y-matrix; entries not listed are 0.
const std::map<Index, std::string>& reduced_entry_text() {
  static const std::map<Index, std::string> table = {
      {{1, 2}, "c12"},
      {{1, 3}, "c13"},
      {{1, 5}, "-c36^2 - c36*c45 - c45^2 + c26*c46 - c35*c46 + c23*c67"},
      {{1, 6}, "-c25 - c36*c46 - 2*c45*c46"},
      {{1, 7}, "-c26 - c35"},
      {{2, 3}, "c23"},
      {{2, 5}, "c25"},
      {{2, 6}, "c26"},
      {{2, 7}, "-c36 - c45"},
      {{3, 5}, "c35"},
      {{3, 6}, "c36"},
      {{3, 7}, "-c46"},
      {{4, 5}, "c45"},
      {{4, 6}, "c46"},
      {{4, 8}, "1"},
      {{5, 6}, "c56"},
      {{5, 7}, "c57"},
      {{6, 7}, "c67"},
  };
  return table;
}

RingPtr over(const RingPtr& base, const Field& f) {
  if (base->field() == f) return base;
  return make_ring(f, base->names());
}

std::vector<Scalar> reduced_values(const QuarticParams& params) {
  if (params.mode() != ParamMode::Reduced) throw Error(ErrorCode::InvalidInput, "expected reduced parameters");
  params.validate();
  std::vector<Scalar> v;
  for (const auto& ij : kReducedKeys) v.push_back(params.get(ij));
  return v;
}

std::array<std::uint16_t, 3> xyz_exponents(const std::vector<std::uint16_t>& e) { return {e[0], e[1], e[2]}; }

struct Elimination {
  std::vector<Relation> relations;
  std::vector<std::pair<std::array<std::uint16_t, 3>, MPoly>> remaining;  // in param_ring()
};

Elimination eliminate() {
  const RingPtr pr = param_ring();
  const std::array<std::size_t, 3> xyz{0, 1, 2};
  std::vector<std::pair<std::array<std::uint16_t, 3>, MPoly>> eqs;
  for (const auto& [e, coef] : symbolic_defect().split(xyz)) eqs.emplace_back(xyz_exponents(e), coef.remap(pr));

  Elimination out;
  for (const auto& target : kDependentKeys) {
    const std::size_t t = *pr->index_of(param_name(target));
    std::size_t best = eqs.size();
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      const MPoly& q = eqs[k].second;
      if (q.degree_in(t) != 1) continue;
      const MPoly lead = q.coefficient_of(t, 1);
      if (!lead.is_constant() || lead.is_zero()) continue;
      if (best == eqs.size() || q.size() < eqs[best].second.size()) best = k;
    }
    if (best == eqs.size())
      throw Error(ErrorCode::EliminationFailed,
                  param_name(target) + " is not linear with constant coefficient in any coefficient equation");
    const auto [source, eq] = eqs[best];
    eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(best));
    const Scalar lead = eq.coefficient_of(t, 1).constant_value();
    const MPoly value = (-eq.coefficient_of(t, 0)).scaled(lead.inverse());
    for (auto& [m, q] : eqs) q = q.substitute(t, value);
    for (auto& r : out.relations) r.value = r.value.substitute(t, value);
    out.relations.push_back(Relation{target, value, source});
  }
  for (auto& [m, q] : eqs)
    if (!q.is_zero()) out.remaining.emplace_back(m, std::move(q));
  return out;
}

const Elimination& elimination() {
  static const Elimination e = eliminate();
  return e;
}

std::vector<Residual> build_residuals() {
  const RingPtr pr = param_ring();
  const RingPtr rr = reduced_ring();
  std::vector<Residual> out;
  for (const auto& [m, q] : elimination().remaining) {
    MPoly r = q;
    for (const auto& z : kNormalizedZeroKeys) r = r.substitute(*pr->index_of(param_name(z)), MPoly(pr));
    if (r.is_zero()) continue;
    out.push_back(Residual{m, r.remap(rr)});
  }
  std::sort(out.begin(), out.end(), [](const Residual& a, const Residual& b) { return a.monomial > b.monomial; });
  if (out.size() != 3)
    throw Error(ErrorCode::WrongCount, "expected 3 residual equations, found " + std::to_string(out.size()));

  // Independence: full Jacobian rank at some point mod a large prime.
  const Field fp = Field::prime(1'000'003);
  const RingPtr rp = over(rr, fp);
  std::uint64_t state = 12345;
  bool independent = false;
  for (int tries = 0; tries < 8 && !independent; ++tries) {
    std::vector<Scalar> pt;
    for (std::size_t v = 0; v < rr->nvars(); ++v)
      pt.push_back(fp.from_int(static_cast<long long>(kernels::splitmix64(state) % 1'000'003)));
    ConstMatrix jac(fp, out.size(), rr->nvars());
    for (std::size_t k = 0; k < out.size(); ++k) {
      const MPoly g = out[k].equation.reduce(rp);
      for (std::size_t v = 0; v < rr->nvars(); ++v) jac(k, v) = g.partial(v).evaluate(pt);
    }
    independent = jac.rank() == out.size();
  }
  if (!independent) throw Error(ErrorCode::WrongCount, "residual equations are not independent");
  return out;
}

std::vector<MPoly> residual_jacobian_entries() {
  std::vector<MPoly> out;
  const auto& res = residual_system();
  for (const auto& r : res)
    for (std::size_t v = 0; v < reduced_ring()->nvars(); ++v) out.push_back(r.equation.partial(v));
  return out;
}

}  // namespace

std::string param_name(Index ij) { return "c" + std::to_string(ij.first) + std::to_string(ij.second); }

Index parse_param_name(std::string_view name) {
  if (name.size() != 3 || name[0] != 'c' || name[1] < '1' || name[1] > '8' || name[2] < '1' || name[2] > '8')
    throw Error(ErrorCode::Parse, "bad parameter name '" + std::string(name) + "'");
  Index ij{name[1] - '0', name[2] - '0'};
  check_index(ij);
  return ij;
}

void QuarticParams::set(Index ij, Scalar value) {
  check_index(ij);
  if (!(value.field() == field_)) throw Error(ErrorCode::FieldMismatch, "parameter over a different field");
  if (mode_ == ParamMode::Reduced && !is_reduced_key(ij))
    throw Error(ErrorCode::InvalidInput, param_name(ij) + " is not a parameter of the reduced form");
  values_[ij] = std::move(value);
}

const Scalar& QuarticParams::get(Index ij) const {
  auto it = values_.find(ij);
  if (it == values_.end()) throw Error(ErrorCode::MissingParameter, "missing parameter " + param_name(ij));
  return it->second;
}

void QuarticParams::validate() const {
  if (mode_ == ParamMode::Reduced) {
    for (const auto& ij : kReducedKeys)
      if (!has(ij)) throw Error(ErrorCode::MissingParameter, "missing parameter " + param_name(ij));
  } else {
    for (const auto& ij : all_pairs())
      if (!has(ij)) throw Error(ErrorCode::MissingParameter, "missing parameter " + param_name(ij));
  }
}

ConstMatrix x_frame(const Field& f) {
  ConstMatrix m(f, kSize, kSize);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 7 - i) = f.one();
    m(7 - i, i) = -f.one();
  }
  return m;
}

ConstMatrix z_frame(const Field& f) {
  ConstMatrix m(f, kSize, kSize);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 6 - i) = f.one();
    m(6 - i, i) = -f.one();
  }
  return m;
}

Poly quartic_curve(const Field& f) {
  return Poly::from_terms(f, 4,
                          {{Monomial{{4, 0, 0}}, f.one()}, {Monomial{{0, 1, 3}}, -f.one()}, {Monomial{{0, 4, 0}}, -f.one()}});
}

MPoly reduced_y_entry(Index ij) {
  check_index(ij);
  static const std::map<Index, MPoly> parsed = [] {
    std::map<Index, MPoly> m;
    for (const auto& [k, text] : reduced_entry_text()) m.emplace(k, MPoly::parse(text, reduced_ring()));
    return m;
  }();
  auto it = parsed.find(ij);
  return it == parsed.end() ? MPoly(reduced_ring()) : it->second;
}

ConstMatrix y_matrix(const QuarticParams& params) {
  const Field& f = params.field();
  ConstMatrix m(f, kSize, kSize);
  if (params.mode() == ParamMode::Full) {
    params.validate();
    for (const auto& ij : all_pairs()) {
      const auto i = static_cast<std::size_t>(ij.first - 1), j = static_cast<std::size_t>(ij.second - 1);
      m(i, j) = params.get(ij);
      m(j, i) = -params.get(ij);
    }
    return m;
  }
  const auto values = reduced_values(params);
  const RingPtr rr = over(reduced_ring(), f);
  for (const auto& ij : all_pairs()) {
    const auto i = static_cast<std::size_t>(ij.first - 1), j = static_cast<std::size_t>(ij.second - 1);
    m(i, j) = reduced_y_entry(ij).reduce(rr).evaluate(values);
    m(j, i) = -m(i, j);
  }
  return m;
}

SkewPolyMatrix assemble_canonical(const QuarticParams& params) {
  const Field& f = params.field();
  return SkewPolyMatrix::linear_pencil(x_frame(f), y_matrix(params), z_frame(f));
}

RingPtr full_ring() {
  static const RingPtr r = [] {
    std::vector<std::string> names{"x", "y", "z"};
    for (auto& n : pair_names()) names.push_back(std::move(n));
    return make_ring(Field::rationals(), std::move(names));
  }();
  return r;
}

RingPtr param_ring() {
  static const RingPtr r = make_ring(Field::rationals(), pair_names());
  return r;
}

RingPtr reduced_ring() {
  static const RingPtr r = [] {
    std::vector<std::string> names;
    for (const auto& ij : kReducedKeys) names.push_back(param_name(ij));
    return make_ring(Field::rationals(), std::move(names));
  }();
  return r;
}

const MPoly& symbolic_defect() {
  static const MPoly defect = [] {
    const RingPtr r = full_ring();
    const MPoly x = MPoly::variable(r, "x"), y = MPoly::variable(r, "y"), z = MPoly::variable(r, "z");
    std::vector<MPoly> upper(kSize * kSize, MPoly(r));
    for (const auto& ij : all_pairs()) {
      const auto i = static_cast<std::size_t>(ij.first - 1), j = static_cast<std::size_t>(ij.second - 1);
      MPoly e = MPoly::variable(r, param_name(ij)) * y;
      if (ij.first + ij.second == 9) e += x;
      if (ij.first + ij.second == 8) e += z;
      upper[i * kSize + j] = std::move(e);
    }
    const MPoly one = MPoly::constant(r, 1);
    MPoly pf = pfaffian_expand<MPoly>(kSize, [&](std::size_t i, std::size_t j) -> const MPoly& { return upper[i * kSize + j]; }, one);
    return pf - x.pow(4) + y * z.pow(3) + y.pow(4);
  }();
  return defect;
}

const std::vector<Relation>& derive_linear_relations() { return elimination().relations; }

const std::vector<Residual>& residual_system() {
  static const std::vector<Residual> r = build_residuals();
  return r;
}

QuarticParams apply_relations(const QuarticParams& full) {
  if (full.mode() != ParamMode::Full) throw Error(ErrorCode::InvalidInput, "expected full parameters");
  const Field& f = full.field();
  const RingPtr pr = over(param_ring(), f);
  std::vector<Scalar> values;
  QuarticParams out(ParamMode::Full, f);
  for (const auto& ij : all_pairs()) {
    const bool dependent = std::find(kDependentKeys.begin(), kDependentKeys.end(), ij) != kDependentKeys.end();
    if (dependent) {
      values.push_back(f.zero());
    } else {
      values.push_back(full.get(ij));
      out.set(ij, full.get(ij));
    }
  }
  for (const auto& rel : derive_linear_relations()) out.set(rel.target, rel.value.reduce(pr).evaluate(values));
  return out;
}

QuarticParams apply_group_action(const QuarticParams& params, const GroupElement& g) {
  const auto v = reduced_values(params);
  const Field& f = params.field();
  if (!(g.a.field() == f) || !(g.e.field() == f) || !(g.p.field() == f))
    throw Error(ErrorCode::FieldMismatch, "group element over a different field");
  if (g.p.is_zero()) throw Error(ErrorCode::InvalidGroupElement, "p = 0");
  if (g.a == g.e) throw Error(ErrorCode::InvalidGroupElement, "a = e");
  const Scalar &c12 = v[0], &c13 = v[1], &c23 = v[2], &c25 = v[3], &c26 = v[4], &c35 = v[5], &c36 = v[6],
               &c45 = v[7], &c46 = v[8], &c56 = v[9], &c57 = v[10], &c67 = v[11];
  const Scalar &a = g.a, &e = g.e, &p = g.p;
  const Scalar two = f.from_int(2), three = f.from_int(3);
  const Scalar p2 = p * p;
  const Scalar ae = a - e;
  const Scalar ae2 = ae * ae;

  QuarticParams out(ParamMode::Reduced, f);
  out.set({1, 2}, (c12 + a * (-two * c25 - two * c36 * c46 - three * c45 * c46 + a * c56 + a * c46 * c67)) / p2);
  out.set({1, 3}, (c13 + a * (-c26 - two * c35 - c46 * c46 + a * c57)) / p2);
  out.set({2, 3}, (c23 + a * (-two * c36 - c45 + a * c67)) / p2);
  out.set({2, 5}, (c12 - a * c25 - c23 * c46 - two * a * c45 * c46 - e * c25 + a * e * c56) / ae);
  out.set({2, 6}, c26);
  out.set({3, 5}, (c13 - e * c35 - a * (c26 + c35 + c46 * c46 - e * c57)) / ae);
  out.set({3, 6}, (c23 - e * c36 - a * (c36 + c45 - e * c67)) / ae);
  out.set({4, 5}, c45);
  out.set({4, 6}, c46);
  out.set({5, 6}, (c12 - c23 * c46 + e * (-two * c25 - two * c45 * c46 + e * c56)) * p2 / ae2);
  out.set({5, 7}, (c13 + e * (-c26 - two * c35 - c46 * c46 + e * c57)) * p2 / ae2);
  out.set({6, 7}, (c23 + e * (-two * c36 - c45 + e * c67)) * p2 / ae2);
  return out;
}

std::pair<Scalar, Scalar> invariant_pair(const QuarticParams& params) {
  const auto v = reduced_values(params);
  const Scalar &c13 = v[1], &c23 = v[2], &c26 = v[4], &c35 = v[5], &c36 = v[6], &c45 = v[7], &c46 = v[8],
               &c57 = v[10], &c67 = v[11];
  return {c13 * c57 - c35 * (c35 + c26 + c46 * c46), c23 * c67 - c36 * (c36 + c45)};
}

std::vector<Scalar> residual_values(const QuarticParams& params) {
  const auto v = reduced_values(params);
  const RingPtr rr = over(reduced_ring(), params.field());
  std::vector<Scalar> out;
  for (const auto& r : residual_system()) out.push_back(r.equation.reduce(rr).evaluate(v));
  return out;
}

SolveResult solve_over_prime_field(const SolveOptions& options) {
  const std::uint64_t p = options.prime;
  if (p <= 3) throw Error(ErrorCode::InvalidInput, "quartic work needs a prime p > 3");
  const Field fp = Field::prime(p);
  const std::uint64_t per_attempt = p * p * p;
  if (per_attempt > options.budget)
    throw Error(ErrorCode::BudgetExceeded, "one attempt needs p^3 = " + std::to_string(per_attempt) +
                                               " evaluations, over the budget of " + std::to_string(options.budget));
  std::vector<kernels::ModPoly> system;
  for (const auto& r : residual_system()) system.push_back(kernels::ModPoly::from_mpoly(r.equation, p));
  const std::array<std::size_t, 9> outer{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const std::array<std::size_t, 3> inner{9, 10, 11};

  const std::uint64_t max_attempts = options.budget / per_attempt;
  constexpr std::uint64_t kChunk = 16;
  SolveResult result;
  std::vector<kernels::SearchHit> hits;
  while (hits.size() < options.want && result.attempts < max_attempts) {
    const std::uint64_t count = std::min(kChunk, max_attempts - result.attempts);
    auto chunk = options.parallel
                     ? kernels::search_attempts(system, outer, inner, options.seed, result.attempts, count)
                     : kernels::serial::search_attempts(system, outer, inner, options.seed, result.attempts, count);
    for (auto& h : chunk) hits.push_back(std::move(h));
    result.attempts += count;
    result.evaluations += count * per_attempt;
  }
  if (hits.empty())
    throw Error(ErrorCode::NoSolutionFound, "no solution over F_" + std::to_string(p) + " after " +
                                                std::to_string(result.attempts) + " attempts");
  if (hits.size() > options.want) hits.resize(options.want);
  for (const auto& h : hits) {
    QuarticParams q(ParamMode::Reduced, fp);
    for (std::size_t k = 0; k < kReducedKeys.size(); ++k)
      q.set(kReducedKeys[k], fp.from_int(static_cast<long long>(h.values[k])));
    result.solutions.push_back(std::move(q));
  }
  return result;
}

DimensionReport moduli_dimension_estimate(std::span<const QuarticParams> samples, std::uint64_t p) {
  if (samples.size() < 5)
    throw Error(ErrorCode::InsufficientSamples, "need at least 5 samples, got " + std::to_string(samples.size()));
  const Field fp = Field::prime(p);
  const RingPtr rr = over(reduced_ring(), fp);
  const std::size_t nv = rr->nvars();
  std::vector<MPoly> jac;
  for (const auto& d : residual_jacobian_entries()) jac.push_back(d.reduce(rr));
  const std::size_t neq = jac.size() / nv;

  DimensionReport report;
  std::map<int, std::size_t> votes;
  bool any_full = false;
  for (const auto& s : samples) {
    if (!(s.field() == fp)) throw Error(ErrorCode::FieldMismatch, "sample not over F_" + std::to_string(p));
    for (const auto& r : residual_values(s))
      if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "sample is not a solution of the residual system");
    const auto v = reduced_values(s);
    ConstMatrix m(fp, neq, nv);
    for (std::size_t k = 0; k < neq; ++k)
      for (std::size_t j = 0; j < nv; ++j) m(k, j) = jac[k * nv + j].evaluate(v);
    const std::size_t rank = m.rank();
    report.jacobian_ranks.push_back(rank);
    any_full = any_full || rank == neq;
    ++votes[static_cast<int>(nv - rank) - 3];
  }
  if (!any_full) throw Error(ErrorCode::InsufficientSamples, "every sample has a rank-deficient Jacobian");
  report.dimension = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
                       return a.second < b.second;
                     })->first;
  return report;
}

}  // namespace pfaff::quartic
