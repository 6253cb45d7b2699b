#include "pfaff/curve_reps.hpp"

#include "pfaff/errors.hpp"
#include "pfaff/kernels.hpp"

namespace pfaff {

namespace {

Scalar ratio_to_curve(const Poly& value, const Poly& f, const char* what) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "target curve is the zero polynomial");
  if (value.is_zero()) throw Error(ErrorCode::DegenerateRep, std::string(what) + " vanishes identically");
  if (value.degree() != f.degree())
    throw Error(ErrorCode::NotARepresentation, std::string(what) + " has degree " + std::to_string(value.degree()) +
                                                   ", curve has degree " + std::to_string(f.degree()));
  const auto& [m, lc] = f.leading();
  const Scalar c = value.coefficient(m) / lc;
  if (c.is_zero() || !(value == f.scaled(c)))
    throw Error(ErrorCode::NotARepresentation, std::string(what) + " = " + value.to_string() +
                                                   " is not a scalar multiple of " + f.to_string());
  return c;
}

void check_blocks(const std::array<ConstMatrix, 3>& blocks, const Poly& curve, bool skew) {
  const std::size_t n = blocks[0].rows();
  for (const auto& b : blocks) {
    if (b.rows() != n || b.cols() != n) throw Error(ErrorCode::InvalidInput, "representation blocks of unequal shape");
    if (!(b.field() == curve.field())) throw Error(ErrorCode::FieldMismatch, "blocks and curve over different fields");
    if (skew && !b.is_skew()) throw Error(ErrorCode::InvalidInput, "pfaffian block is not skew-symmetric");
  }
  const std::size_t expected = skew ? 2 * curve.degree() : curve.degree();
  if (n != expected)
    throw Error(ErrorCode::InvalidInput, "matrix size " + std::to_string(n) + " does not match curve degree " +
                                             std::to_string(curve.degree()));
}

}  // namespace

Scalar verify_pfaffian(const SkewPolyMatrix& a, const Poly& f) { return ratio_to_curve(pfaffian(a), f, "Pf A"); }

Scalar verify_determinantal(const PolyMatrix& m, const Poly& f) { return ratio_to_curve(m.determinant(), f, "det M"); }

PfaffianRep make_pfaffian_rep(std::array<ConstMatrix, 3> blocks, Poly curve) {
  check_blocks(blocks, curve, true);
  PfaffianRep rep{std::move(blocks), std::move(curve), Scalar()};
  rep.scale = verify_pfaffian(rep.matrix(), rep.curve);
  return rep;
}

DeterminantalRep make_determinantal_rep(std::array<ConstMatrix, 3> blocks, Poly curve) {
  check_blocks(blocks, curve, false);
  DeterminantalRep rep{std::move(blocks), std::move(curve), Scalar()};
  rep.scale = verify_determinantal(rep.matrix(), rep.curve);
  return rep;
}

PfaffianRep pfaffian_rep_from_matrix(const SkewPolyMatrix& a, const Poly& curve) {
  if (a.degree() != 1) throw Error(ErrorCode::NonlinearQuotient, "representation entries are not linear forms");
  return make_pfaffian_rep({a.linear_part(0), a.linear_part(1), a.linear_part(2)}, curve);
}

int decomposable_sign(std::size_t d) { return (d * (d - (d > 0 ? 1 : 0)) / 2) % 2 == 0 ? 1 : -1; }

PfaffianRep decomposable_pfaffian(const DeterminantalRep& m) {
  const std::size_t d = m.size();
  std::array<ConstMatrix, 3> blocks;
  for (std::size_t v = 0; v < 3; ++v) {
    ConstMatrix b(m.field(), 2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        b(i, d + j) = m.blocks[v](i, j);
        b(d + j, i) = -m.blocks[v](i, j);
      }
    blocks[v] = std::move(b);
  }
  PfaffianRep rep = make_pfaffian_rep(std::move(blocks), m.curve);
  const Scalar expected = m.field().from_int(decomposable_sign(d)) * m.scale;
  if (!(rep.scale == expected))
    throw Error(ErrorCode::NotARepresentation, "decomposable scale " + rep.scale.to_string() + " != expected " +
                                                   expected.to_string());
  return rep;
}

PolyMatrix matrix_adjugate(const DeterminantalRep& m) { return m.matrix().adjugate(); }

SectionMatrix section_matrix_from_determinantal(const DeterminantalRep& m) {
  const std::size_t d = m.size();
  const PolyMatrix adj = matrix_adjugate(m);
  SkewPolyMatrix b(m.field(), 2 * d, adj.degree());
  // Upper-right block -adj(M)^t, so the lower-left block is adj(M).
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b.set(i, d + j, -adj(j, i));
  return SectionMatrix{std::move(b), m.curve};
}

Scalar section_round_trip_factor(const DeterminantalRep& m) {
  const std::size_t d = m.size();
  const Field f = m.field();
  Scalar factor = f.from_int(decomposable_sign(d) * (d % 2 == 0 ? 1 : -1));
  if (d >= 2) factor *= m.scale.pow(static_cast<unsigned>(d - 2));
  return factor;
}

PfaffianRep representation_from_B(const SectionMatrix& s) {
  const std::size_t n = s.b.size();
  const std::size_t d = n / 2;
  if (d < 2) throw Error(ErrorCode::InvalidInput, "section matrix construction needs d >= 2");
  if (s.curve.degree() != d)
    throw Error(ErrorCode::InvalidInput, "section matrix of size " + std::to_string(n) + " for a curve of degree " +
                                             std::to_string(s.curve.degree()));
  if (s.b.degree() != d - 1)
    throw Error(ErrorCode::InvalidInput, "section matrix entries must have degree d - 1");
  const SkewPolyMatrix adj = pfaffian_adjoint(s.b);
  const Poly divisor = s.curve.pow(static_cast<unsigned>(d - 2));
  SkewPolyMatrix a(s.curve.field(), n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& e = adj.upper(i, j);
      Poly q = e.exact_div(divisor);
      if (!q.is_zero() && q.degree() != 1)
        throw Error(ErrorCode::NonlinearQuotient, "quotient entry (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) + ") has degree " +
                                                      std::to_string(q.degree()));
      a.set(i, j, std::move(q));
    }
  return pfaffian_rep_from_matrix(a, s.curve);
}

CorankReport corank_profile(const PfaffianRep& a, std::span<const Point> samples) {
  const SkewPolyMatrix m = a.matrix();
  CorankReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!a.curve.eval(samples[k]).is_zero())
      throw Error(ErrorCode::SampleNotOnCurve, "sample " + samples[k].to_string() + " is not on the curve");
    const std::size_t corank = m.size() - rank_at_point(m, samples[k]);
    report.coranks.push_back(corank);
    if (corank != 2) report.flagged.push_back(k);
  }
  return report;
}

bool gradient_identity_check(const PfaffianRep& a, const Point& pt) {
  if (!a.curve.eval(pt).is_zero())
    throw Error(ErrorCode::SampleNotOnCurve, "point " + pt.to_string() + " is not on the curve");
  const SkewPolyMatrix adj = pfaffian_adjoint(a.matrix());
  const std::size_t n = a.size();
  for (int k = 0; k < 3; ++k) {
    Scalar rhs = a.field().zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar& coef = a.blocks[static_cast<std::size_t>(k)](i, j);
        if (!coef.is_zero()) rhs -= coef * adj.upper(i, j).eval(pt);
      }
    if (!(a.scale * a.curve.partial(k).eval(pt) == rhs)) return false;
  }
  return true;
}

bool gradient_identity_symbolic(const PfaffianRep& a) {
  const SkewPolyMatrix adj = pfaffian_adjoint(a.matrix());
  const std::size_t n = a.size();
  for (int k = 0; k < 3; ++k) {
    Poly rhs(a.field(), adj.degree());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar& coef = a.blocks[static_cast<std::size_t>(k)](i, j);
        if (!coef.is_zero()) rhs -= adj.upper(i, j).scaled(coef);
      }
    if (!(a.curve.partial(k).scaled(a.scale) == rhs)) return false;
  }
  return true;
}

std::pair<PfaffianRep, ConstMatrix> random_equivalence(const PfaffianRep& a, std::uint64_t seed) {
  const std::size_t n = a.size();
  const Field f = a.field();
  std::uint64_t state = seed;
  ConstMatrix x(f, n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        x(i, j) = f.from_int(static_cast<long long>(kernels::splitmix64(state) % 7) - 3);
  } while (x.determinant().is_zero());
  const SkewPolyMatrix transformed = congruence(x, a.matrix());
  return {pfaffian_rep_from_matrix(transformed, a.curve), x};
}

std::vector<Point> curve_points_mod_p(const Poly& f, std::uint64_t p) {
  const Field fp = Field::prime(p);
  std::vector<Point> out;
  for (const auto& t : kernels::curve_points(kernels::ModPoly::from_poly(f, p)))
    out.emplace_back(fp.from_int(static_cast<long long>(t[0])), fp.from_int(static_cast<long long>(t[1])),
                     fp.from_int(static_cast<long long>(t[2])));
  return out;
}

std::vector<SmoothnessResult> smoothness_probe(const Poly& f, std::span<const std::uint64_t> primes, bool exhaustive,
                                               std::uint64_t budget, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "smoothness probe of the zero polynomial");
  std::vector<SmoothnessResult> out;
  for (auto p : primes) {
    const Field fp = Field::prime(p);
    const auto mf = kernels::ModPoly::from_poly(f, p);
    const std::uint64_t total = kernels::projective_plane_size(p);
    auto to_point = [&](const kernels::Triple& t) {
      return Point(fp.from_int(static_cast<long long>(t[0])), fp.from_int(static_cast<long long>(t[1])),
                   fp.from_int(static_cast<long long>(t[2])));
    };
    SmoothnessResult r{p, 0, std::nullopt};
    if (exhaustive) {
      if (total > budget)
        throw Error(ErrorCode::BudgetExceeded, "P^2(F_" + std::to_string(p) + ") has " + std::to_string(total) +
                                                   " points, over the budget of " + std::to_string(budget));
      auto sing = kernels::singular_points(mf);
      r.points_scanned = total;
      if (!sing.empty()) r.witness = to_point(sing.front());
    } else {
      const kernels::ModPoly d[3] = {mf.partial(0), mf.partial(1), mf.partial(2)};
      std::uint64_t state = seed ^ p;
      const std::uint64_t n = std::min(budget, total);
      for (std::uint64_t k = 0; k < n && !r.witness; ++k) {
        const auto t = kernels::projective_point(kernels::splitmix64(state) % total, p);
        if (mf.eval(t) == 0 && d[0].eval(t) == 0 && d[1].eval(t) == 0 && d[2].eval(t) == 0) r.witness = to_point(t);
        ++r.points_scanned;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pfaff
