#ifndef GCA_CONSTRUCTIONS_HPP
#define GCA_CONSTRUCTIONS_HPP

#include <optional>

#include "ideal_ops.hpp"

namespace gca {

/// Rational map P^1 -> P^r with coordinates given by binary forms of a
/// common degree d in (s, t); coords[i][k] is the coefficient of
/// s^{d-k} t^k in the i-th coordinate form.
struct Parametrization {
  int d = 0;
  std::vector<std::vector<std::uint32_t>> coords;
};

/// Evaluate the parametrization at (s : t) = (1 : lambda) or at infinity.
std::vector<std::uint32_t> eval_param(const PrimeField& K,
                                      const Parametrization& P,
                                      std::uint32_t lambda, bool at_infinity);

/// 2x2 minors of the 2 x d Hankel matrix; ring must have d+1 variables.
Ideal rational_normal_curve(RingPtr R);

/// 2x2 minors of the two-row block matrix of the scroll S(a1, a2), in a
/// fresh standard ring with a1 + a2 + 2 variables.
Ideal scroll(std::uint32_t p, int a1, int a2);

/// Linear projection away from a coordinate subspace, optionally after a
/// linear change of coordinates. `drop` lists the eliminated variables; the
/// center is the subspace where all *kept* variables vanish.
struct ProjectionSpec {
  std::optional<LinearMap> change;
  std::vector<int> drop;
};
Ideal project(const Ideal& I, const ProjectionSpec& spec);

/// Section by the hyperplane f = 0 as an ideal in an (r)-variable ring: a
/// pivot variable of f is solved for and substituted away, then the result
/// is saturated. Requires f linear and a nonzerodivisor on S/I.
Ideal hyperplane_section(const Ideal& I, const Vec& f);

/// Vanishing ideal of X ∪ L. I_L must define a line.
Ideal union_with_line(const Ideal& IX, const Ideal& IL);

/// Length of the finite scheme X ∩ L.
long long secant_length(const Ideal& IX, const Ideal& IL);

/// A curve of maximal regularity d - r + 2 in P^r with an extremal secant
/// line, built by projecting the degree-d rational normal curve from a
/// seeded center inside the span of d - r + 2 curve points.
struct MaxRegCurve {
  Ideal curve;
  Ideal line;
  Parametrization param;
  std::vector<std::vector<std::uint32_t>> line_span;  // two points on L
};
MaxRegCurve maxreg_curve(std::uint32_t p, int r, int d, std::uint64_t seed);

struct PointSet {
  int s = 0;  // ambient projective dimension
  std::vector<std::vector<std::uint32_t>> pts;
};

struct LgpResult {
  bool ok = true;
  std::vector<int> violating;  // indices of a degenerate (s+1)-subset
};
/// Linearly general position: every (s+1)-subset spans P^s.
LgpResult lgp_test(const PrimeField& K, const PointSet& ps);

/// Points of (C ∪ L) ∩ H for a seeded hyperplane H whose pullback to P^1
/// splits into d distinct roots over F_p; retried with fresh H on failure.
/// Returned in coordinates of H itself (a pivot coordinate is dropped), so
/// the d+1 points live in P^{r-1} and feed lgp_test directly.
PointSet split_hyperplane_section_points(const PrimeField& K,
                                         const Parametrization& param,
                                         const std::vector<std::vector<std::uint32_t>>& line_span,
                                         std::uint64_t seed, int max_retries);

/// Ideal of the linear subspace spanned by the given points (the kernel
/// forms of their coordinate matrix).
Ideal span_ideal(RingPtr R, const std::vector<std::vector<std::uint32_t>>& pts);

/// Linear form with the given coefficient row, sorted for the module order.
Vec linear_form(const FreeModule& F, const std::vector<std::uint32_t>& row);

}  // namespace gca

#endif  // GCA_CONSTRUCTIONS_HPP
