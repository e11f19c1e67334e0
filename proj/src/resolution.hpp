#ifndef GCA_RESOLUTION_HPP
#define GCA_RESOLUTION_HPP

#include <map>

#include "groebner.hpp"

namespace gca {

/// A complex of free modules F_len -> ... -> F_1 -> F_0 with graded maps.
/// maps[k] is the differential F_{k+1} -> F_k; each column is stored as a
/// sparse row -> polynomial map over the base ring.
struct FreeComplex {
  using Column = std::map<int, Vec>;
  struct Matrix {
    std::vector<Column> col;
  };

  RingPtr ring;
  std::vector<std::vector<int>> twists;  // twists[k] = twists of F_k
  std::vector<Matrix> maps;              // maps[k]: F_{k+1} -> F_k

  int length() const { return static_cast<int>(maps.size()); }
  /// Largest k with F_k != 0.
  int top() const {
    for (int k = static_cast<int>(twists.size()) - 1; k >= 0; --k)
      if (!twists[k].empty()) return k;
    return 0;
  }
};

/// Free resolution of S/I by iterated syzygy computation; the level-k
/// differentials are Groebner bases with respect to the induced orders, so
/// the result is a (generally non-minimal) resolution.
FreeComplex free_resolution(const Ideal& I);

/// In-place reduction to the minimal resolution: constant entries are
/// pivoted away until every differential maps into m·F.
void minimalize(FreeComplex& C);

/// d_k ∘ d_{k+1} == 0 for all k.
bool is_complex_zero_composition(const FreeComplex& C);
/// No differential entry has a nonzero constant term.
bool is_minimal(const FreeComplex& C);
/// Alternating sum of the free-module Hilbert functions at n; equals the
/// Hilbert function of the resolved module when the complex is a resolution.
long long euler_characteristic(const FreeComplex& C, int n);

/// Graded Betti numbers beta_{i,d} = #(minimal generators of F_i in twist d).
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeComplex& minimal);

  long long beta(int i, int d) const;
  int pd() const { return pd_; }
  /// Castelnuovo-Mumford regularity of the resolved quotient: max(d - i).
  int reg() const { return reg_; }
  int max_twist(int i) const;
  const std::map<std::pair<int, int>, long long>& entries() const {
    return b_;
  }

  /// Tabular display, rows indexed by d - i (the standard staircase layout).
  std::string format() const;
  /// One "beta i j value" line per nonzero entry (machine format).
  std::string machine_format() const;

 private:
  std::map<std::pair<int, int>, long long> b_;  // (i, d) -> count
  int pd_ = 0;
  int reg_ = 0;
};

/// Schreyer resolution of S/I followed by minimalization.
FreeComplex minimal_resolution(const Ideal& I);

}  // namespace gca

#endif  // GCA_RESOLUTION_HPP
