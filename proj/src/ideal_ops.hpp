#ifndef GCA_IDEAL_OPS_HPP
#define GCA_IDEAL_OPS_HPP

#include "groebner.hpp"
#include "linalg.hpp"

namespace gca {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// I : g for a single nonzero polynomial, via (I ∩ (g))/g.
Ideal ideal_quotient_poly(const Ideal& I, const Vec& g);
/// I : J, intersected over the generators of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// I : J^∞ — per generator g the chain I : g, (I:g) : g, ... is iterated
/// until two consecutive reduced Groebner bases agree; results intersected.
Ideal saturate(const Ideal& I, const Ideal& J);
/// Saturation with respect to the irrelevant ideal (x_0..x_r).
Ideal saturate_irrelevant(const Ideal& I);

/// I ∩ K[vars not in `elim`], returned in the subring that keeps the
/// remaining variables in their original order.
Ideal eliminate(const Ideal& I, const std::vector<int>& elim);

/// x_i ↦ Σ_j coef(i,j) · y_j, applied to every generator.
struct LinearMap {
  RingPtr src;
  RingPtr dst;
  FpMatrix coef;  // src.nvars() rows, dst.nvars() cols
};
Ideal substitute(const Ideal& I, const LinearMap& map);

Vec exact_divide(const FreeModule& F, const Vec& f, const Vec& g);

/// Moves a polynomial between rings that share variable names (by name
/// lookup); variables absent from the target must not occur.
Vec transport_poly(const Ring& src, const Ring& dst, const Vec& f);
Ideal transport_ideal(const Ideal& I, RingPtr dst);

/// Re-bases an ideal onto a ring with the same variable count, matching
/// variables by position (pure renaming).
Ideal rename_positional(const Ideal& I, RingPtr dst);

/// Is the degree-1 form f a nonzerodivisor on S/I?  Decided exactly via
/// the Hilbert-numerator identity N_{I+f} = (1-t)·N_I.
bool is_nzd_linear(const Ideal& I, const Vec& f);

/// Parse helper used all over tests and the CLI.
Ideal ideal_from_strings(RingPtr ring, const std::vector<std::string>& polys);

}  // namespace gca

#endif  // GCA_IDEAL_OPS_HPP
