#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaff/poly.hpp"
#include "pfaff/scalar.hpp"

namespace pfaff {

/// Dense rows x cols matrix of field elements.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(Field field, std::size_t rows, std::size_t cols);

  static ConstMatrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ConstMatrix transpose() const;
  ConstMatrix scaled(const Scalar& s) const;
  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b);
  friend bool operator==(const ConstMatrix& a, const ConstMatrix& b);

  bool is_skew() const;
  bool is_zero() const;
  /// Rank and determinant by fraction-free (Bareiss) elimination.
  std::size_t rank() const;
  Scalar determinant() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Dense matrix of homogeneous polynomials sharing one entry degree.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, std::size_t rows, std::size_t cols, std::uint32_t degree);

  /// x0*m0 + x1*m1 + x2*m2 for constant matrices of equal shape.
  static PolyMatrix linear_pencil(const ConstMatrix& m0, const ConstMatrix& m1, const ConstMatrix& m2);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  std::uint32_t degree() const { return degree_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Throws DegreeMismatch unless p is zero or of the matrix entry degree.
  void set(std::size_t i, std::size_t j, Poly p);

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  ConstMatrix eval(const Point& pt) const;
  /// Coefficient matrix of variable `var` in a degree-1 matrix.
  ConstMatrix linear_part(int var) const;
  Poly determinant() const;
  /// Classical adjugate: adj(M) * M = M * adj(M) = det(M) * Id.
  PolyMatrix adjugate() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<Poly> data_;
};

}  // namespace pfaff
