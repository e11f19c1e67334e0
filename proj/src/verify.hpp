#ifndef GCA_VERIFY_HPP
#define GCA_VERIFY_HPP

#include <optional>

#include "cohomology.hpp"
#include "constructions.hpp"

namespace gca {

struct HypothesisError : Error { using Error::Error; };

/// Predicted Tor pattern for a curve of maximal regularity of degree d in
/// P^r: Tor_i lives in degrees i+1, i+2 and i+d-r+1 with multiplicities
/// u_i, v_i and C(r-1, i-1). Entries are indexed 1..r (index 0 unused).
struct Thm32Prediction {
  int r = 0, d = 0;
  std::vector<long long> a, c;  // 1..r+1
  std::vector<long long> u, v;  // 1..r
  std::vector<bool> u_bound;    // true: only u_i <= c_i is claimed
};
/// Requires r > 3 and r+2 <= d <= 2r-3.
Thm32Prediction thm32_predict(int r, int d);

struct CheckLine {
  std::string what;
  bool pass = true;
  std::string detail;
};
struct Report {
  bool pass = true;
  std::vector<CheckLine> lines;

  void add(const std::string& what, bool ok, const std::string& detail = "");
  std::string format() const;  // one PASS/FAIL line per check
};

/// Diffs a computed Betti table of S/I against the prediction, cell by
/// cell: degree support, exact multiplicities, and bound cells as <=.
Report thm32_check(const BettiTable& B, const Thm32Prediction& P);

enum class DescentClaim { Lemma45b, Cor46, Prop43d };

/// Inequalities on the descent invariant delta for a surface of degree d
/// in P^r; section_reg is the regularity of a computed reduced irreducible
/// hyperplane section curve, when available.
Report descent_audit(int d, int r, const CohomologyProfile& P,
                     const DerivedInvariants& D,
                     std::optional<int> section_reg, DescentClaim claim);
/// All applicable descent claims at once.
Report descent_audit_all(int d, int r, const CohomologyProfile& P,
                         const DerivedInvariants& D,
                         std::optional<int> section_reg);

struct Thm510Input {
  int d = 0, r = 0, depth = 0;
  bool max_sect_reg = false;
  bool delta_finite = false;
  int delta = 0;
};
/// Maximal sectional regularity + depth 1 + delta <= d-r+1 forces d > 2r-5;
/// reports vacuous / holds / VIOLATED.
Report thm510_audit(const Thm510Input& in);

struct Thm63Signature {
  long long h = 0;          // h^1(1)
  std::string tag = "no-match";
  bool sigma_discrepancy = false;  // the c-iii printed values disagree
  std::string note;
};
/// Matches the computed cohomological signature (h, h^2 profile, sigma)
/// against the case table; geometric conclusions are not checked.
Thm63Signature thm63_classify(const CohomologyProfile& P,
                              const DerivedInvariants& D, int d, int r);

struct SregEstimate {
  int estimate = 0;            // min over trials; an upper bound for sreg
  std::vector<int> per_trial;
  bool maximal = false;        // estimate == d - r + 3
};
/// Regularity of Proj(A/fA) over seeded nonzerodivisor linear forms f.
SregEstimate sreg_estimate(const Ideal& I, int trials, std::uint64_t seed);

}  // namespace gca

#endif  // GCA_VERIFY_HPP
