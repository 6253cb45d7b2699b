#pragma once

#include <cstdint>
#include <random>

#include "pfaff/matrix.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/skew.hpp"

namespace pfaff::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(gen_); }

  // Small rationals for QQ, uniform residues for F_p.
  Scalar scalar(const Field& f) {
    if (f.is_prime()) return f.from_int(integer(0, static_cast<long long>(f.characteristic()) - 1));
    const long long num = integer(-9, 9);
    const long long den = integer(1, 4);
    return f.from_int(num) / f.from_int(den);
  }

  Scalar nonzero(const Field& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Point point(const Field& f) {
    for (;;) {
      Scalar a = scalar(f), b = scalar(f), c = scalar(f);
      if (!a.is_zero() || !b.is_zero() || !c.is_zero()) return Point(a, b, c);
    }
  }

  Poly poly(const Field& f, std::uint32_t degree, int terms = 4) {
    Poly p(f, degree);
    for (int t = 0; t < terms; ++t) {
      const auto a = static_cast<std::uint32_t>(integer(0, degree));
      const auto b = static_cast<std::uint32_t>(integer(0, degree - a));
      p += Poly::monomial(Monomial{{a, b, degree - a - b}}, scalar(f));
    }
    return p;
  }

  ConstMatrix skew_constant(const Field& f, std::size_t n) {
    ConstMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = scalar(f);
        m(j, i) = -m(i, j);
      }
    return m;
  }

  // Skew matrix with random linear forms in x0, x1, x2.
  SkewPolyMatrix skew_linear(const Field& f, std::size_t n) {
    return SkewPolyMatrix::linear_pencil(skew_constant(f, n), skew_constant(f, n), skew_constant(f, n));
  }

  ConstMatrix matrix(const Field& f, std::size_t n) {
    ConstMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(f);
    return m;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline PolyMatrix identity_times(const Poly& p, std::size_t n) {
  PolyMatrix m(p.field(), n, n, p.degree());
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, p);
  return m;
}

}  // namespace pfaff::testing
