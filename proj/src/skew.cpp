#include "pfaff/skew.hpp"

#include "pfaff/errors.hpp"
#include "pfaff/expansion.hpp"

namespace pfaff {

SkewPolyMatrix::SkewPolyMatrix(Field field, std::size_t n, std::uint32_t degree)
    : field_(field), n_(n), degree_(degree), data_(n * (n == 0 ? 0 : n - 1) / 2, Poly(field, degree)) {
  if (n % 2 != 0) throw Error(ErrorCode::InvalidInput, "skew matrix size must be even, got " + std::to_string(n));
}

SkewPolyMatrix SkewPolyMatrix::from_constant(const ConstMatrix& m) {
  if (!m.is_skew()) throw Error(ErrorCode::InvalidInput, "matrix is not skew-symmetric");
  SkewPolyMatrix s(m.field(), m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) s.set(i, j, Poly::constant(m(i, j)));
  return s;
}

SkewPolyMatrix SkewPolyMatrix::linear_pencil(const ConstMatrix& a0, const ConstMatrix& a1, const ConstMatrix& a2) {
  for (const auto* a : {&a0, &a1, &a2})
    if (!a->is_skew()) throw Error(ErrorCode::InvalidInput, "pencil block is not skew-symmetric");
  return from_matrix(PolyMatrix::linear_pencil(a0, a1, a2));
}

SkewPolyMatrix SkewPolyMatrix::from_matrix(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidInput, "skew matrix must be square");
  SkewPolyMatrix s(m.field(), m.rows(), m.degree());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) throw Error(ErrorCode::InvalidInput, "nonzero diagonal entry in a skew matrix");
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      if (!(m(i, j) == -m(j, i))) throw Error(ErrorCode::InvalidInput, "matrix is not skew-symmetric");
      s.set(i, j, m(i, j));
    }
  }
  return s;
}

Poly SkewPolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "skew matrix index out of range");
  if (i == j) return Poly(field_, degree_);
  return i < j ? data_[index(i, j)] : -data_[index(j, i)];
}

void SkewPolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (i >= j || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "set requires i < j < n");
  if (!(p.field() == field_)) throw Error(ErrorCode::FieldMismatch, "entry over a different field");
  if (p.is_zero()) {
    p = Poly(field_, degree_);
  } else if (p.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "entry degree " + std::to_string(p.degree()) + " != matrix degree " +
                                               std::to_string(degree_));
  }
  data_[index(i, j)] = std::move(p);
}

PolyMatrix SkewPolyMatrix::to_matrix() const {
  PolyMatrix m(field_, n_, n_, degree_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      m.set(i, j, upper(i, j));
      m.set(j, i, -upper(i, j));
    }
  return m;
}

ConstMatrix SkewPolyMatrix::eval(const Point& pt) const {
  ConstMatrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      m(i, j) = upper(i, j).eval(pt);
      m(j, i) = -m(i, j);
    }
  return m;
}

ConstMatrix SkewPolyMatrix::linear_part(int var) const { return to_matrix().linear_part(var); }

SkewPolyMatrix SkewPolyMatrix::scaled(const Scalar& s) const {
  SkewPolyMatrix r = *this;
  for (auto& p : r.data_) p = p.scaled(s);
  return r;
}

bool operator==(const SkewPolyMatrix& a, const SkewPolyMatrix& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.data_ == b.data_;
}

Poly pfaffian(const SkewPolyMatrix& s) {
  Poly pf = pfaffian_expand(s.size(), [&s](std::size_t i, std::size_t j) -> const Poly& { return s.upper(i, j); },
                            Poly::constant(s.field().one()));
  if (pf.is_zero()) return Poly(s.field(), static_cast<std::uint32_t>(s.size() / 2) * s.degree());
  return pf;
}

Scalar pfaffian(const ConstMatrix& skew) {
  if (!skew.is_skew()) throw Error(ErrorCode::InvalidInput, "matrix is not skew-symmetric");
  return pfaffian_expand(skew.rows(), [&skew](std::size_t i, std::size_t j) -> const Scalar& { return skew(i, j); },
                         skew.field().one());
}

Poly pfaffian_matchings_oracle(const SkewPolyMatrix& s) {
  Poly pf = pfaffian_matchings(s.size(), [&s](std::size_t i, std::size_t j) -> const Poly& { return s.upper(i, j); },
                               Poly::constant(s.field().one()));
  if (pf.is_zero()) return Poly(s.field(), static_cast<std::uint32_t>(s.size() / 2) * s.degree());
  return pf;
}

Poly pfaffian_minor(const SkewPolyMatrix& s, std::size_t i, std::size_t j) {
  if (!(i < j && j < s.size()))
    throw Error(ErrorCode::IndexOutOfRange, "pfaffian_minor requires i < j < n, got (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
  // Reduced index -> original index, skipping i then j.
  auto original = [i, j](std::size_t r) {
    std::size_t o = r;
    if (o >= i) ++o;
    if (o >= j) ++o;
    return o;
  };
  Poly pf = pfaffian_expand(
      s.size() - 2, [&](std::size_t a, std::size_t b) -> const Poly& { return s.upper(original(a), original(b)); },
      Poly::constant(s.field().one()));
  const auto deg = static_cast<std::uint32_t>((s.size() - 2) / 2) * s.degree();
  if (pf.is_zero()) return Poly(s.field(), deg);
  return pf;
}

int adjoint_sign(std::size_t i, std::size_t j) { return (i + j) % 2 == 0 ? 1 : -1; }

SkewPolyMatrix pfaffian_adjoint(const SkewPolyMatrix& s) {
  const std::size_t n = s.size();
  const auto deg = n == 0 ? 0 : static_cast<std::uint32_t>((n - 2) / 2) * s.degree();
  SkewPolyMatrix adj(s.field(), n, deg);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly m = pfaffian_minor(s, i, j);
      adj.set(i, j, adjoint_sign(i, j) > 0 ? std::move(m) : -m);
    }
  return adj;
}

SkewPolyMatrix congruence(const ConstMatrix& x, const SkewPolyMatrix& s) {
  const std::size_t n = s.size();
  if (x.rows() != n || x.cols() != n) throw Error(ErrorCode::InvalidInput, "congruence matrix has the wrong size");
  if (!(x.field() == s.field())) throw Error(ErrorCode::FieldMismatch, "congruence over different fields");
  // (X S X^t)_{ij} = sum_{k<l} S_kl (X_ik X_jl - X_il X_jk)
  SkewPolyMatrix r(s.field(), n, s.degree());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly acc(s.field(), s.degree());
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Poly& e = s.upper(k, l);
          if (e.is_zero()) continue;
          Scalar w = x(i, k) * x(j, l) - x(i, l) * x(j, k);
          if (!w.is_zero()) acc += e.scaled(w);
        }
      r.set(i, j, std::move(acc));
    }
  return r;
}

std::size_t rank_at_point(const SkewPolyMatrix& s, const Point& pt) { return s.eval(pt).rank(); }

}  // namespace pfaff
