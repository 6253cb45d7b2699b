#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfaff/scalar.hpp"

namespace pfaff {

/// Named variables over a field; shared by every MPoly built in it.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  Field field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
RingPtr make_ring(Field field, std::vector<std::string> names);

/// Sparse multivariate polynomial (not necessarily homogeneous), used for
/// parameter-ring computations where coefficients are themselves unknowns.
class MPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  struct GradedGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Scalar, GradedGreater>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const Scalar& c);
  static MPoly constant(RingPtr ring, long long c);
  static MPoly variable(RingPtr ring, std::size_t index);
  static MPoly variable(RingPtr ring, std::string_view name);
  /// Expression syntax: + - * ^ and parentheses over the ring's variable
  /// names and integer or n/d constants; juxtaposition multiplies.
  static MPoly parse(std::string_view text, RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Scalar& s) const;
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Coefficient of var^power, as a polynomial free of var.
  MPoly coefficient_of(std::size_t var, unsigned power) const;
  MPoly substitute(std::size_t var, const MPoly& value) const;
  MPoly partial(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> values) const;
  /// Groups terms by their exponents in `vars`; each group's coefficient
  /// has those variables removed (set to exponent 0).
  std::map<std::vector<std::uint16_t>, MPoly> split(std::span<const std::size_t> vars) const;
  /// Same polynomial in another ring, matching variables by name.
  MPoly remap(const RingPtr& target) const;
  MPoly reduce(const RingPtr& target) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);
  void check_ring(const MPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace pfaff
