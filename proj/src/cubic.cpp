#include "pfaff/cubic.hpp"

#include "pfaff/errors.hpp"
#include "pfaff/kernels.hpp"

namespace pfaff {

Poly WeierstrassCurve::poly() const { return weierstrass_poly(alpha, beta); }

bool WeierstrassCurve::smooth_flag() const {
  const Field f = alpha.field();
  return !(f.from_int(4) * alpha.pow(3) + f.from_int(27) * beta.pow(2)).is_zero();
}

Point AffineCurvePoint::projective() const { return Point(s, s.field().one(), l); }

Poly weierstrass_poly(const Scalar& alpha, const Scalar& beta) {
  const Field f = alpha.field();
  if (!(beta.field() == f)) throw Error(ErrorCode::FieldMismatch, "alpha and beta from different fields");
  return Poly::from_terms(f, 3,
                          {{Monomial{{0, 1, 2}}, -f.one()},
                           {Monomial{{3, 0, 0}}, f.one()},
                           {Monomial{{1, 2, 0}}, alpha},
                           {Monomial{{0, 3, 0}}, beta}});
}

DeterminantalRep cubic_determinantal(const WeierstrassCurve& curve, const AffineCurvePoint& pt) {
  const Field f = curve.alpha.field();
  if (f.is_prime() && f.characteristic() <= 3)
    throw Error(ErrorCode::InvalidInput, "the cubic family needs characteristic 0 or > 3");
  const Scalar& s = pt.s;
  const Scalar& l = pt.l;
  if (!(l * l == s.pow(3) + curve.alpha * s + curve.beta))
    throw Error(ErrorCode::PointNotOnCurve, "(s, l) = (" + s.to_string() + ", " + l.to_string() +
                                                ") does not satisfy l^2 = s^3 + alpha*s + beta");
  const Scalar half = f.from_int(2).inverse();
  const Scalar three_quarters = f.from_int(3) / f.from_int(4);

  ConstMatrix m0 = ConstMatrix::identity(f, 3);
  ConstMatrix m2(f, 3, 3);
  m2(0, 1) = f.one();
  m2(1, 2) = f.one();
  ConstMatrix m1(f, 3, 3);
  m1(0, 0) = s * half;
  m1(0, 1) = l;
  m1(0, 2) = curve.alpha + three_quarters * s * s;
  m1(1, 1) = -s;
  m1(1, 2) = -l;
  m1(2, 0) = -f.one();
  m1(2, 2) = s * half;

  DeterminantalRep rep = make_determinantal_rep({m0, m1, m2}, curve.poly());
  if (!rep.scale.is_one())
    throw Error(ErrorCode::NotARepresentation, "cubic determinantal scale " + rep.scale.to_string() + " != 1");
  return rep;
}

PfaffianRep cubic_pfaffian(const WeierstrassCurve& curve, const AffineCurvePoint& pt) {
  return decomposable_pfaffian(cubic_determinantal(curve, pt));
}

std::vector<AffineCurvePoint> enumerate_affine_points(const WeierstrassCurve& curve, std::uint64_t p) {
  const Field fp = Field::prime(p);
  const Scalar a = curve.alpha.reduce(fp);
  const Scalar b = curve.beta.reduce(fp);
  std::vector<AffineCurvePoint> out;
  for (const auto& [s, l] : kernels::weierstrass_affine_points(a.residue(), b.residue(), p))
    out.push_back({fp.from_int(static_cast<long long>(s)), fp.from_int(static_cast<long long>(l))});
  return out;
}

std::vector<AffineCurvePoint> small_rational_points(const WeierstrassCurve& curve, long bound) {
  const Field q = Field::rationals();
  std::vector<AffineCurvePoint> out;
  for (long s = -bound; s <= bound; ++s) {
    const Scalar sv = q.from_int(s);
    const Scalar rhs = sv.pow(3) + curve.alpha * sv + curve.beta;
    const mpq_class& r = rhs.rational();
    if (r < 0) continue;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    const Scalar l(mpq_class(rn, rd));
    out.push_back({sv, l});
    if (!l.is_zero()) out.push_back({sv, -l});
  }
  return out;
}

}  // namespace pfaff
