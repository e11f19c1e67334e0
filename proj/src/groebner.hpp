#ifndef GCA_GROEBNER_HPP
#define GCA_GROEBNER_HPP

#include <functional>
#include <map>
#include <mutex>

#include "ring.hpp"

namespace gca {

/// Reduced Groebner basis: monic, autoreduced, sorted ascending by
/// (degree, order on lead terms).
struct GroebnerBasis {
  FreeModule module;
  std::vector<Vec> elems;

  std::vector<MTerm> lead_terms() const {
    std::vector<MTerm> out;
    out.reserve(elems.size());
    for (const auto& g : elems) out.push_back(g.lead());
    return out;
  }
};

/// Fully reduced normal form: no term of the result is divisible by any
/// lead term of G. Deterministic: the largest reducible term is reduced by
/// the first eligible element of G.
Vec normal_form(const FreeModule& F, Vec f, const std::vector<Vec>& G);

/// Normal form with division tracking: records (index, coeff, monomial)
/// for every reduction step performed.
struct DivisionStep {
  int index;
  std::uint32_t c;
  Monomial m;
};
Vec normal_form_tracked(const FreeModule& F, Vec f, const std::vector<Vec>& G,
                        std::vector<DivisionStep>& steps);

/// Buchberger's algorithm with the product criterion (rank-1 only) and the
/// chain criterion; normal selection strategy (lowest lcm degree first,
/// then lexicographic on the index pair). Returns the reduced basis.
std::vector<Vec> buchberger(const FreeModule& F, std::vector<Vec> gens,
                            bool require_homogeneous = true);

/// Autoreduction of an arbitrary generating set: minimal lead terms, monic,
/// tails fully reduced, ascending sort.
std::vector<Vec> interreduce(const FreeModule& F, std::vector<Vec> G);

/// Certifies the Groebner property by reducing every S-pair.
bool is_groebner(const FreeModule& F, const std::vector<Vec>& G);

/// GB of the kernel of the map (source free module with `src_twists`) ->
/// G sending e_b to cols[b]; computed by component elimination on G ⊕ F.
std::vector<Vec> kernel_gb(const FreeModule& G,
                           const std::vector<int>& src_twists,
                           const std::vector<Vec>& cols);

/// A homogeneous ideal with cached reduced Groebner bases per order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Vec> gens);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Vec>& gens() const { return gens_; }
  bool is_zero() const;

  const GroebnerBasis& groebner(MonomialOrder order = {}) const;
  bool contains(const Vec& f, MonomialOrder order = {}) const;
  bool is_unit() const;

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

 private:
  RingPtr ring_;
  std::vector<Vec> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_subset(const Ideal& a, const Ideal& b);

}  // namespace gca

#endif  // GCA_GROEBNER_HPP
