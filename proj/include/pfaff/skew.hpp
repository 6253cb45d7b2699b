#pragma once

#include <cstddef>
#include <vector>

#include "pfaff/matrix.hpp"
#include "pfaff/poly.hpp"

namespace pfaff {

/// Even-size skew-symmetric matrix of homogeneous polynomials of a common
/// degree. Only the strict upper triangle is stored; indices are 0-based.
class SkewPolyMatrix {
 public:
  SkewPolyMatrix() = default;
  SkewPolyMatrix(Field field, std::size_t n, std::uint32_t degree);

  /// Degree-0 skew matrix from a constant skew matrix.
  static SkewPolyMatrix from_constant(const ConstMatrix& m);
  /// x0*a0 + x1*a1 + x2*a2 for constant skew matrices.
  static SkewPolyMatrix linear_pencil(const ConstMatrix& a0, const ConstMatrix& a1, const ConstMatrix& a2);
  /// Checks skew-symmetry and even size of a general polynomial matrix.
  static SkewPolyMatrix from_matrix(const PolyMatrix& m);

  std::size_t size() const { return n_; }
  const Field& field() const { return field_; }
  std::uint32_t degree() const { return degree_; }

  /// Entry (i, j) with the skew convention applied for i >= j.
  Poly at(std::size_t i, std::size_t j) const;
  const Poly& upper(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, Poly p);

  PolyMatrix to_matrix() const;
  ConstMatrix eval(const Point& pt) const;
  ConstMatrix linear_part(int var) const;
  SkewPolyMatrix scaled(const Scalar& s) const;

  friend bool operator==(const SkewPolyMatrix& a, const SkewPolyMatrix& b);

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

  Field field_;
  std::size_t n_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<Poly> data_;
};

/// Pfaffian, homogeneous of degree (n/2) * entry degree. Pf of 0x0 is 1.
Poly pfaffian(const SkewPolyMatrix& s);
Scalar pfaffian(const ConstMatrix& skew);

/// Signed perfect-matching sum; n <= 12, otherwise SizeLimit.
Poly pfaffian_matchings_oracle(const SkewPolyMatrix& s);

/// Pfaffian of s with rows/columns i and j (0-based, i < j) removed.
Poly pfaffian_minor(const SkewPolyMatrix& s, std::size_t i, std::size_t j);

/// Sign s_ij of adjoint entry (i, j), i < j: adj_ij = s_ij * Pf^{ij}.
/// Frozen as (-1)^(i+j), the pattern forced by adj * S = Pf(S) * Id.
int adjoint_sign(std::size_t i, std::size_t j);

/// Pfaffian adjoint with adj * s = s * adj = Pf(s) * Id. Consequences:
/// Pf(adj) = (-1)^k Pf(s)^(k-1) and adj(adj(s)) = (-1)^k Pf(s)^(k-2) s
/// for n = 2k.
SkewPolyMatrix pfaffian_adjoint(const SkewPolyMatrix& s);

/// X s X^t; Pf of the result is det(X) * Pf(s).
SkewPolyMatrix congruence(const ConstMatrix& x, const SkewPolyMatrix& s);

/// Rank of s evaluated at pt (always even for a skew matrix).
std::size_t rank_at_point(const SkewPolyMatrix& s, const Point& pt);

}  // namespace pfaff
