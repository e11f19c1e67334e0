#ifndef GCA_COHOMOLOGY_HPP
#define GCA_COHOMOLOGY_HPP

#include <array>
#include <optional>

#include "hilbert.hpp"
#include "resolution.hpp"

namespace gca {

/// Graded dimensions of Ext^j_S(A, S(-n0)) for A with minimal resolution C;
/// n0 = number of variables, so these dualize to the local cohomologies of
/// A via h^i(n) = ext_dim(r+1-i, -n).
class ExtCalculator {
 public:
  explicit ExtCalculator(const FreeComplex& C);

  long long ext_dim(int j, int m) const;
  int pd() const { return static_cast<int>(C_->twists.size()) - 1; }

 private:
  const FreeComplex* C_;
  int n0_;
  // hilbert functions of the images of the dualized differentials
  // delta^j : Hom(F_j) -> Hom(F_{j+1}); index j, computed on demand (the
  // middle terms of a long resolution are large and usually never queried)
  mutable std::vector<std::optional<SubmoduleHF>> im_;
  const SubmoduleHF& image(int j) const;
  long long dual_free_dim(int j, int m) const;
};

struct CohomologyProfile {
  int lo = 0, hi = 0;
  std::array<std::vector<long long>, 4> h;  // h[i][n - lo]
  int reg_a = 0;       // regularity of A = S/I (Betti route)
  int depth = 0;       // r + 1 - pd
  int dim = 0;         // Krull dimension of A
  long long degree = 0;

  bool in_window(int n) const { return n >= lo && n <= hi; }
  long long value(int i, int n) const;
  std::string format() const;
  std::string machine_format() const;  // "h i n value" lines
};

/// Local cohomology table of S/I over the window via graded duality.
/// When check_h0 is set, h^0 is verified against dim (I^sat / I)_n.
CohomologyProfile cohomology_profile(const Ideal& I, int lo, int hi,
                                     bool check_h0 = false);

struct DerivedInvariants {
  bool delta_finite = false;
  int delta = 0;              // valid when delta_finite
  long long e = 0;            // stable value of h^2 at the low end
  bool e_caveat = false;      // stability hypothesis (sigma = 0) not met
  long long sigma = 0;
  bool h1_nonzero = false;
  int beg_h1 = 0, end_h1 = 0;  // valid when h1_nonzero
  long long lin_deficiency = 0;  // h^1(1)
};

/// Descent-theoretic invariants of a surface profile; throws WindowError when the
/// window cannot support a definitive answer.
DerivedInvariants derived_invariants(const CohomologyProfile& P);

/// reg X = reg(S/I_X) + 1 for the saturated ideal of a scheme X.
inline int scheme_regularity(const BettiTable& B) { return B.reg() + 1; }

}  // namespace gca

#endif  // GCA_COHOMOLOGY_HPP
