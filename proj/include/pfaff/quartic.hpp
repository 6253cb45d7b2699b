#pragma once

// Pfaffian representations of the plane quartic x^4 - y z^3 - y^4 in the
// 8x8 skew canonical form  A = x*X + z*Z + y*C,  where X has ones at
// (1,8),(2,7),(3,6),(4,5), Z has ones at (1,7),(2,6),(3,5), and C holds the
// parameters c_ij. Indices in this header are 1-based to match the c_ij
// names; (x, y, z) are the polynomial variables (x0, x1, x2).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/mpoly.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/skew.hpp"

namespace pfaff::quartic {

using Index = std::pair<int, int>;

enum class ParamMode { Full, Reduced };

/// The 12 parameters that survive the normalizing congruences.
inline constexpr std::array<Index, 12> kReducedKeys = {{{1, 2}, {1, 3}, {2, 3}, {2, 5}, {2, 6}, {3, 5},
                                                        {3, 6}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}}};
/// Parameters solved for by the linear relations, in elimination order.
inline constexpr std::array<Index, 7> kDependentKeys = {{{4, 8}, {4, 7}, {3, 7}, {2, 7}, {1, 7}, {1, 6}, {1, 5}}};
/// Parameters set to zero by the normalization to the 12-parameter form.
inline constexpr std::array<Index, 9> kNormalizedZeroKeys = {
    {{1, 4}, {1, 8}, {2, 4}, {2, 8}, {3, 4}, {3, 8}, {5, 8}, {6, 8}, {7, 8}}};

std::string param_name(Index ij);
Index parse_param_name(std::string_view name);

class QuarticParams {
 public:
  QuarticParams(ParamMode mode, Field field) : mode_(mode), field_(field) {}

  ParamMode mode() const { return mode_; }
  const Field& field() const { return field_; }
  void set(Index ij, Scalar value);
  /// Throws MissingParameter if absent.
  const Scalar& get(Index ij) const;
  bool has(Index ij) const { return values_.count(ij) != 0; }
  const std::map<Index, Scalar>& values() const { return values_; }
  /// Reduced mode: exactly the 12 reduced keys. Full mode: all 28 pairs.
  void validate() const;

  friend bool operator==(const QuarticParams&, const QuarticParams&) = default;

 private:
  ParamMode mode_;
  Field field_;
  std::map<Index, Scalar> values_;
};

struct GroupElement {
  Scalar a;
  Scalar e;
  Scalar p;
};

ConstMatrix x_frame(const Field& f);
ConstMatrix z_frame(const Field& f);
Poly quartic_curve(const Field& f);

/// Entry (i, j) of the y-coefficient matrix of the 12-parameter form, as a
/// polynomial in the reduced ring (composite entries included).
MPoly reduced_y_entry(Index ij);
ConstMatrix y_matrix(const QuarticParams& params);
SkewPolyMatrix assemble_canonical(const QuarticParams& params);

/// Rings over Q: x, y, z followed by the 28 c_ij; the 28 c_ij alone; the 12
/// reduced parameters.
RingPtr full_ring();
RingPtr param_ring();
RingPtr reduced_ring();

/// Pf(A) - (x^4 - y z^3 - y^4) with all 28 c_ij symbolic, in full_ring().
const MPoly& symbolic_defect();

struct Relation {
  Index target;
  MPoly value;                             // in param_ring(), free of every target
  std::array<std::uint16_t, 3> source{};   // (x, y, z) exponents of the equation used
};

/// The seven linear relations, in elimination order. Throws
/// EliminationFailed if a target is not linear with a constant coefficient
/// in any remaining coefficient equation.
const std::vector<Relation>& derive_linear_relations();

struct Residual {
  std::array<std::uint16_t, 3> monomial{};  // (x, y, z) exponents
  MPoly equation;                           // in reduced_ring()
};

/// The coefficient equations left after the relations and the 12-parameter
/// normalization, ordered by monomial (x y^3, y^4, y^3 z). Throws WrongCount
/// unless there are exactly three, independent ones.
const std::vector<Residual>& residual_system();

/// Full-mode params with the seven dependent entries recomputed from the
/// 21 free ones.
QuarticParams apply_relations(const QuarticParams& full);

/// Action of the group element P(a, e, p) on the 12-parameter form.
QuarticParams apply_group_action(const QuarticParams& params, const GroupElement& g);

/// (c13 c57 - c35 (c35 + c26 + c46^2), c23 c67 - c36 (c36 + c45)).
std::pair<Scalar, Scalar> invariant_pair(const QuarticParams& params);

/// Residual values at a reduced parameter point.
std::vector<Scalar> residual_values(const QuarticParams& params);

struct SolveOptions {
  std::uint64_t prime = 11;
  std::uint64_t budget = 1'000'000;  // inner evaluations
  std::uint64_t seed = 1;
  std::size_t want = 8;
  bool parallel = true;
};

struct SolveResult {
  std::vector<QuarticParams> solutions;
  std::uint64_t attempts = 0;
  std::uint64_t evaluations = 0;
};

/// Random values for nine parameters, exhaustive scan over (c56, c57, c67).
/// Throws BudgetExceeded if one attempt (p^3 evaluations) exceeds the
/// budget and NoSolutionFound if nothing turns up.
SolveResult solve_over_prime_field(const SolveOptions& options);

struct DimensionReport {
  int dimension = 0;
  std::vector<std::size_t> jacobian_ranks;
};

/// Jacobian rank of the residual system at each sample, and the majority
/// value of 12 - rank - 3. Needs at least five samples.
DimensionReport moduli_dimension_estimate(std::span<const QuarticParams> samples, std::uint64_t p);

}  // namespace pfaff::quartic
