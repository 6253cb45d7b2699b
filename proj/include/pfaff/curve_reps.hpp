#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pfaff/matrix.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/skew.hpp"

namespace pfaff {

/// Linear pfaffian representation x0*A0 + x1*A1 + x2*A2 with Pf = scale * curve.
struct PfaffianRep {
  std::array<ConstMatrix, 3> blocks;
  Poly curve;
  Scalar scale;

  std::size_t size() const { return blocks[0].rows(); }
  const Field& field() const { return curve.field(); }
  SkewPolyMatrix matrix() const { return SkewPolyMatrix::linear_pencil(blocks[0], blocks[1], blocks[2]); }
};

/// Linear determinantal representation x0*M0 + x1*M1 + x2*M2 with det = scale * curve.
struct DeterminantalRep {
  std::array<ConstMatrix, 3> blocks;
  Poly curve;
  Scalar scale;

  std::size_t size() const { return blocks[0].rows(); }
  const Field& field() const { return curve.field(); }
  PolyMatrix matrix() const { return PolyMatrix::linear_pencil(blocks[0], blocks[1], blocks[2]); }
};

/// Skew matrix of degree-(d-1) forms whose pfaffian adjoint, divided by
/// curve^(d-2), is a linear pfaffian representation of the curve.
struct SectionMatrix {
  SkewPolyMatrix b;
  Poly curve;
};

/// Unique c with Pf(a) = c * f. Throws DegenerateRep if Pf(a) == 0 and
/// NotARepresentation if Pf(a) is not a multiple of f.
Scalar verify_pfaffian(const SkewPolyMatrix& a, const Poly& f);
Scalar verify_determinantal(const PolyMatrix& m, const Poly& f);

/// Verifying constructors: fill in `scale`.
PfaffianRep make_pfaffian_rep(std::array<ConstMatrix, 3> blocks, Poly curve);
DeterminantalRep make_determinantal_rep(std::array<ConstMatrix, 3> blocks, Poly curve);
/// Splits a linear skew matrix into its coefficient blocks and verifies it.
PfaffianRep pfaffian_rep_from_matrix(const SkewPolyMatrix& a, const Poly& curve);

/// Sign relating Pf [[0, M], [-M^t, 0]] to det M for d x d blocks.
int decomposable_sign(std::size_t d);
/// [[0, M], [-M^t, 0]]; its scale is decomposable_sign(d) * m.scale.
PfaffianRep decomposable_pfaffian(const DeterminantalRep& m);

PolyMatrix matrix_adjugate(const DeterminantalRep& m);

/// B = [[0, -adj(M)^t], [adj(M), 0]]. For this B the round trip
/// representation_from_B(B) equals decomposable_sign(d) * (-1)^d *
/// scale^(d-2) times the decomposable representation of M.
SectionMatrix section_matrix_from_determinantal(const DeterminantalRep& m);
Scalar section_round_trip_factor(const DeterminantalRep& m);

/// A = adj(B) / F^(d-2), verified. Errors: NotDivisible, NonlinearQuotient,
/// DegenerateRep.
PfaffianRep representation_from_B(const SectionMatrix& s);

struct CorankReport {
  std::vector<std::size_t> coranks;
  std::vector<std::size_t> flagged;  // sample indices whose corank != 2
  bool all_two() const { return flagged.empty(); }
};

/// Corank of A(x) at each sample; SampleNotOnCurve if F(x) != 0.
CorankReport corank_profile(const PfaffianRep& a, std::span<const Point> samples);

/// c * dF/dx_k(x) == sum_{i<j} A_k[i][j] * (-1)^(i+j+1) Pf^{ij}(A(x)), k = 0, 1, 2,
/// at a point of the curve.
bool gradient_identity_check(const PfaffianRep& a, const Point& pt);
/// The same identity as polynomials in x.
bool gradient_identity_symbolic(const PfaffianRep& a);

/// X A X^t for a random invertible X with small integer entries.
std::pair<PfaffianRep, ConstMatrix> random_equivalence(const PfaffianRep& a, std::uint64_t seed);

/// Projective F_p-points of the curve, exhaustively (reduced mod p).
std::vector<Point> curve_points_mod_p(const Poly& f, std::uint64_t p);

struct SmoothnessResult {
  std::uint64_t prime;
  std::uint64_t points_scanned;
  std::optional<Point> witness;
};

/// For each prime, scans P^2(F_p) (all of it when exhaustive, otherwise
/// `budget` seeded random points) for common zeros of F and its partials.
/// Exhaustive scans larger than `budget` points throw BudgetExceeded.
std::vector<SmoothnessResult> smoothness_probe(const Poly& f, std::span<const std::uint64_t> primes, bool exhaustive,
                                               std::uint64_t budget = 50'000'000, std::uint64_t seed = 1);

}  // namespace pfaff
