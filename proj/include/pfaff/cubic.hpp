#pragma once

#include <cstdint>
#include <vector>

#include "pfaff/curve_reps.hpp"

namespace pfaff {

/// Cubic in Weierstrass form -x1*x2^2 + x0^3 + alpha*x0*x1^2 + beta*x1^3.
struct WeierstrassCurve {
  Scalar alpha;
  Scalar beta;

  Field field() const { return alpha.field(); }
  WeierstrassCurve reduced(const Field& f) const { return {alpha.reduce(f), beta.reduce(f)}; }
  Poly poly() const;
  /// 4*alpha^3 + 27*beta^2 != 0. Recorded, not enforced.
  bool smooth_flag() const;
};

/// Affine point (s, l) with l^2 = s^3 + alpha*s + beta, i.e. the
/// projective point (s : 1 : l) of the cubic.
struct AffineCurvePoint {
  Scalar s;
  Scalar l;

  Point projective() const;
};

Poly weierstrass_poly(const Scalar& alpha, const Scalar& beta);

/// x0*Id + x2*N + x1*C(s, l, alpha), with det = F (scale 1). Requires the
/// point on the curve (PointNotOnCurve) and characteristic 0 or > 3.
DeterminantalRep cubic_determinantal(const WeierstrassCurve& curve, const AffineCurvePoint& pt);
/// The decomposable 6x6 representation built from cubic_determinantal.
PfaffianRep cubic_pfaffian(const WeierstrassCurve& curve, const AffineCurvePoint& pt);

/// All affine F_p points of the curve; alpha and beta are reduced mod p.
std::vector<AffineCurvePoint> enumerate_affine_points(const WeierstrassCurve& curve, std::uint64_t p);

/// Rational points (s, l) with integer s in [-bound, bound] and l^2 a
/// perfect square; used to sample Q-points for tests and the CLI.
std::vector<AffineCurvePoint> small_rational_points(const WeierstrassCurve& curve, long bound);

}  // namespace pfaff
