#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace pfaff {

class Scalar;

/// Coefficient field: the rationals, or F_p for an odd prime p < 2^31.
/// Descriptor strings are "QQ" and "Fp:<p>".
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  static Field parse(std::string_view descriptor);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpq(const mpq_class& q) const;
  /// Parses "n" or "n/d"; over F_p the value is reduced.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  friend class Scalar;
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Arithmetic between elements of different fields
/// throws FieldMismatch; use reduce() to move a rational into F_p.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const mpq_class& q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(unsigned e) const;
  /// Image in `target`; throws NotDivisible if a denominator vanishes mod p.
  Scalar reduce(const Field& target) const;

  /// Rationals print as "n" or "n/d"; residues as their value in [0, p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  Scalar(std::uint64_t v, std::uint64_t p) : value_(Residue{v % p, p}) {}
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;

  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pfaff
