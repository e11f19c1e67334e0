#ifndef GCA_HILBERT_HPP
#define GCA_HILBERT_HPP

#include "groebner.hpp"

namespace gca {

/// Coefficients of the Hilbert numerator N(t) of S/I over the full
/// denominator (1-t)^{nvars}, computed from a monomial generating set by
/// the pivot-variable splitting recursion.
std::vector<long long> hilbert_numerator(const Ring& R,
                                         std::vector<Monomial> gens);

/// Hilbert series of S/I with derived invariants. Standard grading only.
class HilbertSeries {
 public:
  HilbertSeries(int nvars, std::vector<long long> numerator);

  const std::vector<long long>& numerator() const { return num_; }
  const std::vector<long long>& reduced_numerator() const { return red_; }

  /// Krull dimension of S/I (0 for the unit ideal).
  int krull_dim() const { return kdim_; }
  /// Dimension of Proj(S/I); -1 when empty.
  int proj_dim() const { return kdim_ - 1; }
  /// Degree of the projective scheme (value of the reduced numerator at 1).
  long long degree() const { return degree_; }

  /// Hilbert function n -> dim_K (S/I)_n, exact for every n.
  long long hf(int n) const;
  /// Hilbert polynomial evaluated at n.
  long long hp(int n) const;
  /// Least n0 such that hf(n) == hp(n) for all n >= n0.
  int hp_agreement_bound() const;

 private:
  int nvars_;
  std::vector<long long> num_;
  std::vector<long long> red_;
  int kdim_;
  long long degree_;
};

HilbertSeries hilbert_series(const Ideal& I);

/// dim_K S_n for an n-variable polynomial ring: C(n + nv - 1, nv - 1).
long long ring_hf(int nvars, int n);
long long binomial(long long n, long long k);
/// The polynomial extension of C(n, k): a degree-k polynomial in n, valid
/// for negative n as well (unlike the combinatorial `binomial`).
long long poly_binomial(long long n, int k);

/// Graded dimensions of a submodule U ⊆ ⊕_c S(-t_c) from the lead terms of
/// a Groebner basis of U.
class SubmoduleHF {
 public:
  SubmoduleHF(const FreeModule& F, const std::vector<Vec>& gb);
  long long dim(int n) const;  // dim_K U_n

 private:
  int nvars_;
  std::vector<int> twists_;
  std::vector<std::vector<long long>> complement_num_;  // numerator of S/M_c
};

}  // namespace gca

#endif  // GCA_HILBERT_HPP
