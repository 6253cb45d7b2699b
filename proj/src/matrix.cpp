#include "pfaff/matrix.hpp"

#include <utility>

#include "pfaff/errors.hpp"
#include "pfaff/expansion.hpp"

namespace pfaff {

ConstMatrix::ConstMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ConstMatrix ConstMatrix::identity(Field field, std::size_t n) {
  ConstMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

ConstMatrix ConstMatrix::transpose() const {
  ConstMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ConstMatrix ConstMatrix::scaled(const Scalar& s) const {
  ConstMatrix r = *this;
  for (auto& v : r.data_) v *= s;
  return r;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product over different fields");
  ConstMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidInput, "matrix sum shape mismatch");
  ConstMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

bool operator==(const ConstMatrix& a, const ConstMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool ConstMatrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
  }
  return true;
}

bool ConstMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

namespace {

// Forward Bareiss elimination in place; returns (rank, number of row swaps).
std::pair<std::size_t, std::size_t> bareiss(ConstMatrix& m) {
  const Field f = m.field();
  Scalar prev = f.one();
  std::size_t r = 0;
  std::size_t swaps = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      ++swaps;
    }
    const Scalar prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) * prev_inv;
      m(i, c) = f.zero();
    }
    prev = m(r, c);
    ++r;
  }
  return {r, swaps};
}

}  // namespace

std::size_t ConstMatrix::rank() const {
  ConstMatrix work = *this;
  return bareiss(work).first;
}

Scalar ConstMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  if (rows_ == 0) return field_.one();
  ConstMatrix work = *this;
  auto [rank, swaps] = bareiss(work);
  if (rank < rows_) return field_.zero();
  Scalar d = work(rows_ - 1, cols_ - 1);
  return swaps % 2 ? -d : d;
}

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols, std::uint32_t degree)
    : field_(field), rows_(rows), cols_(cols), degree_(degree), data_(rows * cols, Poly(field, degree)) {}

PolyMatrix PolyMatrix::linear_pencil(const ConstMatrix& m0, const ConstMatrix& m1, const ConstMatrix& m2) {
  if (m0.rows() != m1.rows() || m0.rows() != m2.rows() || m0.cols() != m1.cols() || m0.cols() != m2.cols())
    throw Error(ErrorCode::InvalidInput, "pencil blocks of different shapes");
  const Field f = m0.field();
  PolyMatrix r(f, m0.rows(), m0.cols(), 1);
  const ConstMatrix* blocks[3] = {&m0, &m1, &m2};
  for (std::size_t i = 0; i < r.rows_; ++i)
    for (std::size_t j = 0; j < r.cols_; ++j) {
      Poly p(f, 1);
      for (int v = 0; v < 3; ++v) p += Poly::variable(f, v).scaled((*blocks[v])(i, j));
      r.data_[i * r.cols_ + j] = std::move(p);
    }
  return r;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  if (!(p.field() == field_)) throw Error(ErrorCode::FieldMismatch, "entry over a different field");
  if (!p.is_zero() && p.degree() != degree_)
    throw Error(ErrorCode::DegreeMismatch, "entry degree " + std::to_string(p.degree()) + " != matrix degree " +
                                               std::to_string(degree_));
  if (p.is_zero()) p = Poly(field_, degree_);
  data_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_, degree_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
  PolyMatrix r(a.field_, a.rows_, b.cols_, a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly acc(a.field_, r.degree_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r.data_[i * r.cols_ + j] = std::move(acc);
    }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ConstMatrix PolyMatrix::eval(const Point& pt) const {
  ConstMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(pt);
  return m;
}

ConstMatrix PolyMatrix::linear_part(int var) const {
  if (degree_ != 1) throw Error(ErrorCode::DegreeMismatch, "linear_part of a non-linear matrix");
  Monomial m;
  m.e[static_cast<std::size_t>(var)] = 1;
  ConstMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).coefficient(m);
  return r;
}

Poly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  Poly d = determinant_expand(rows_, [this](std::size_t i, std::size_t j) -> const Poly& { return (*this)(i, j); },
                              Poly::constant(field_.one()));
  if (d.is_zero()) return Poly(field_, static_cast<std::uint32_t>(rows_) * degree_);
  return d;
}

PolyMatrix PolyMatrix::adjugate() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidInput, "adjugate of a non-square matrix");
  const std::size_t n = rows_;
  const auto minor_degree = static_cast<std::uint32_t>(n == 0 ? 0 : (n - 1) * degree_);
  PolyMatrix adj(field_, n, n, minor_degree);
  const Poly one = Poly::constant(field_.one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(M)_{ij} = (-1)^{i+j} det(M without row j and column i)
      auto entry = [&](std::size_t r, std::size_t c) -> const Poly& {
        return (*this)(r < j ? r : r + 1, c < i ? c : c + 1);
      };
      Poly m = determinant_expand(n - 1, entry, one);
      if ((i + j) % 2) m = -m;
      if (m.is_zero()) m = Poly(field_, minor_degree);
      adj.data_[i * n + j] = std::move(m);
    }
  return adj;
}

}  // namespace pfaff
