#pragma once

// Finite-field scanning kernels. Every kernel exists twice: an OpenMP
// version in pfaff::kernels and a plain serial reference in
// pfaff::kernels::serial. Both return results in the same deterministic
// order, so tests compare them for equality.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pfaff {
class Poly;
class MPoly;
}  // namespace pfaff

namespace pfaff::kernels {

using Residue = std::uint64_t;
using Triple = std::array<Residue, 3>;

/// Multivariate polynomial over F_p in flat machine form, for hot loops.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::uint64_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  /// Reduces a three-variable polynomial (any field) mod p.
  static ModPoly from_poly(const Poly& f, std::uint64_t p);
  static ModPoly from_mpoly(const MPoly& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t terms() const { return coef_.size(); }
  unsigned max_exponent() const { return max_exp_; }

  void add_term(Residue c, std::span<const std::uint8_t> exps);
  Residue eval(std::span<const Residue> x) const;
  /// Fixes the variables listed in `fixed` to `values`; the remaining
  /// variables keep their relative order.
  ModPoly specialize(std::span<const std::size_t> fixed, std::span<const Residue> values) const;
  ModPoly partial(std::size_t var) const;

 private:
  std::uint64_t p_ = 0;
  std::size_t nvars_ = 0;
  unsigned max_exp_ = 0;
  std::vector<Residue> coef_;
  std::vector<std::uint8_t> exps_;
};

/// Number of points of P^2(F_p) and the canonical representative with the
/// given index: (1, a, b), then (0, 1, b), then (0, 0, 1).
std::uint64_t projective_plane_size(std::uint64_t p);
Triple projective_point(std::uint64_t index, std::uint64_t p);

/// Deterministic 64-bit mixer used to derive per-attempt random streams.
std::uint64_t splitmix64(std::uint64_t& state);

struct SearchHit {
  std::uint64_t attempt;
  std::vector<Residue> values;  // full assignment, indexed by variable
};

// OpenMP kernels.
std::vector<Triple> curve_points(const ModPoly& f);
std::vector<Triple> singular_points(const ModPoly& f);
std::vector<std::pair<Residue, Residue>> weierstrass_affine_points(Residue alpha, Residue beta, std::uint64_t p);
/// For attempts first..first+count-1: draw the outer variables from the
/// attempt's stream, then scan all p^3 values of the three inner variables
/// for common zeros of `system`.
std::vector<SearchHit> search_attempts(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                                       std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t first,
                                       std::uint64_t count);

namespace serial {
std::vector<Triple> curve_points(const ModPoly& f);
std::vector<Triple> singular_points(const ModPoly& f);
std::vector<std::pair<Residue, Residue>> weierstrass_affine_points(Residue alpha, Residue beta, std::uint64_t p);
std::vector<SearchHit> search_attempts(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                                       std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t first,
                                       std::uint64_t count);
}  // namespace serial

namespace detail {
std::vector<Residue> draw_outer(std::span<const std::size_t> outer, std::size_t nvars, std::uint64_t p,
                                std::uint64_t seed, std::uint64_t attempt);
void scan_attempt(std::span<const ModPoly> system, std::span<const std::size_t> outer,
                  std::span<const std::size_t> inner, std::uint64_t seed, std::uint64_t attempt,
                  std::vector<SearchHit>& out);
}  // namespace detail

}  // namespace pfaff::kernels
