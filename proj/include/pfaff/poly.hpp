#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/scalar.hpp"

namespace pfaff {

/// Exponent triple of x0^e0 x1^e1 x2^e2, ordered graded-lexicographically.
struct Monomial {
  std::array<std::uint32_t, 3> e{};

  std::uint32_t degree() const { return e[0] + e[1] + e[2]; }
  bool divides(const Monomial& o) const { return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2]; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.e <=> b.e;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Projective point (x0 : x1 : x2) over a field; not all coordinates zero.
class Point {
 public:
  Point(Scalar x0, Scalar x1, Scalar x2);

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Field field() const { return c_[0].field(); }
  Point scaled(const Scalar& lambda) const;
  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_;
};

/// Sparse homogeneous polynomial in x0, x1, x2. The zero polynomial keeps
/// its degree tag but acts as the identity for +/- at any degree.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  Poly() = default;
  Poly(Field field, std::uint32_t degree) : field_(field), degree_(degree) {}

  static Poly constant(const Scalar& c);
  static Poly variable(Field field, int var);
  static Poly monomial(const Monomial& m, const Scalar& c);
  /// Throws DegreeMismatch if any monomial has degree != `degree`.
  static Poly from_terms(Field field, std::uint32_t degree, const std::vector<std::pair<Monomial, Scalar>>& terms);

  const Field& field() const { return field_; }
  std::uint32_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  /// Leading term under graded-lex order; requires a nonzero polynomial.
  const std::pair<const Monomial, Scalar>& leading() const { return *terms_.begin(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Scalar& s) const;
  Poly pow(unsigned e) const;

  /// Equal when both are zero, or degree, field and terms all agree.
  friend bool operator==(const Poly& a, const Poly& b);

  Scalar eval(const Point& pt) const;
  Poly partial(int var) const;
  /// Returns q with q * g == *this; throws NotDivisible with the remainder witness.
  Poly exact_div(const Poly& g) const;
  Poly reduce(const Field& target) const;

  std::string to_string() const;
  static Poly parse(std::string_view text, const Field& field);

 private:
  void add_term(const Monomial& m, const Scalar& c);
  void check_compatible(const Poly& o, const char* op) const;

  Field field_;
  std::uint32_t degree_ = 0;
  TermMap terms_;
};

}  // namespace pfaff
