#include "verify.hpp"

#include "doctest.h"

using namespace gca;

namespace {

// synthetic profile with prescribed h^1 (from n=1) and h^2 tail
CohomologyProfile make_profile(int lo, int hi, std::vector<long long> h1,
                               long long h2_tail, long long h2_0,
                               long long h2_1, long long h3_0,
                               long long h3_m1, int reg_a) {
  CohomologyProfile P;
  P.lo = lo;
  P.hi = hi;
  P.reg_a = reg_a;
  for (int i = 0; i <= 3; ++i) P.h[i].assign(hi - lo + 1, 0);
  for (std::size_t k = 0; k < h1.size(); ++k)
    P.h[1][1 + static_cast<int>(k) - lo] = h1[k];
  for (int n = lo; n <= -1; ++n) P.h[2][n - lo] = h2_tail;
  P.h[2][0 - lo] = h2_0;
  P.h[2][1 - lo] = h2_1;
  P.h[3][0 - lo] = h3_0;
  P.h[3][-1 - lo] = h3_m1;
  return P;
}

}  // namespace

TEST_CASE("thm32 prediction tables") {
  SUBCASE("(r,d) = (6,8)") {
    Thm32Prediction P = thm32_predict(6, 8);
    CHECK(P.u[1] == 12);  // C(7,2) - 9
    CHECK(P.v[5] == 3);   // d - r + 1
    // v_i = 0 for i <= 2r-d-2 = 2 and i = r
    CHECK(P.v[1] == 0);
    CHECK(P.v[2] == 0);
    CHECK(P.v[6] == 0);
    // exact u range: 2 <= i <= 2r-d-1 = 3
    CHECK(!P.u_bound[2]);
    CHECK(!P.u_bound[3]);
    CHECK(P.u_bound[4]);
    CHECK(P.u[2] == P.c[2] - P.a[2]);
  }
  SUBCASE("(r,d) = (6,9)") {
    Thm32Prediction P = thm32_predict(6, 9);
    CHECK(P.v[1] == 0);  // 2r-d-2 = 1
    CHECK(P.v[5] == 4);
    CHECK(!P.u_bound[2]);  // i = 2 = 2r-d-1 is still exact
    CHECK(P.u_bound[3]);   // bounds start at 2r-d = 3
    CHECK(!P.u_bound[1]);
  }
  SUBCASE("hypothesis gate") {
    CHECK_THROWS_AS(thm32_predict(6, 12), HypothesisError);
    CHECK_THROWS_AS(thm32_predict(3, 5), HypothesisError);
    CHECK_THROWS_AS(thm32_predict(6, 7), HypothesisError);
  }
}

TEST_CASE("thm32 check against a computed curve") {
  MaxRegCurve M = maxreg_curve(32003, 6, 8, 17);
  BettiTable B(minimal_resolution(M.curve));
  Thm32Prediction P = thm32_predict(6, 8);
  Report rep = thm32_check(B, P);
  for (const auto& l : rep.lines) CHECK_MESSAGE(l.pass, l.what, " ", l.detail);
  CHECK(rep.pass);
  // top strand multiplicities C(5, i-1)
  long long expect[] = {1, 5, 10, 10, 5, 1};
  for (int i = 1; i <= 6; ++i) CHECK(B.beta(i, i + 3) == expect[i - 1]);

  // hilbert numerator balance: sum_i (-1)^i beta_{i,d} t^d equals the
  // numerator of the curve's hilbert series
  HilbertSeries hs = hilbert_series(M.curve);
  std::vector<long long> acc(16, 0);
  for (const auto& [key, count] : B.entries()) {
    auto [i, deg] = key;
    acc[deg] += (i % 2 ? -1 : 1) * count;
  }
  std::vector<long long> nume = hs.numerator();
  for (std::size_t k = 0; k < acc.size(); ++k) {
    long long want = k < nume.size() ? nume[k] : 0;
    CHECK(acc[k] == want);
  }
}

TEST_CASE("thm32 check flags a doctored table") {
  MaxRegCurve M = maxreg_curve(32003, 6, 8, 17);
  BettiTable B(minimal_resolution(M.curve));
  Thm32Prediction P = thm32_predict(6, 8);
  P.u[1] += 1;  // sabotage one exact cell
  Report rep = thm32_check(B, P);
  CHECK(!rep.pass);
}

TEST_CASE("descent audit") {
  // shape of the first example surface: h^1 = (2,2), delta = 2
  CohomologyProfile P = make_profile(-6, 5, {2, 2}, 0, 0, 0, 0, 0, 3);
  DerivedInvariants D = derived_invariants(P);
  CHECK(D.delta == 2);
  Report rep = descent_audit_all(7, 6, P, D, 3);
  CHECK(rep.pass);
  SUBCASE("single claims") {
    CHECK(descent_audit(7, 6, P, D, 3, DescentClaim::Lemma45b).pass);
    CHECK(descent_audit(7, 6, P, D, {}, DescentClaim::Cor46).pass);
    CHECK(descent_audit(7, 6, P, D, {}, DescentClaim::Prop43d).pass);
  }
  SUBCASE("vacuous out of range") {
    Report r2 = descent_audit(9, 6, P, D, {}, DescentClaim::Cor46);
    CHECK(r2.pass);
    CHECK(r2.lines.front().detail.find("vacuous") != std::string::npos);
  }
  SUBCASE("h^1 = 0 is trivially descending") {
    CohomologyProfile P0 = make_profile(-6, 5, {}, 0, 0, 0, 0, 0, 1);
    DerivedInvariants D0 = derived_invariants(P0);
    CHECK(descent_audit(7, 6, P0, D0, {}, DescentClaim::Lemma45b).pass);
  }
}

TEST_CASE("thm510 audit") {
  SUBCASE("holds") {
    Report rep = thm510_audit({9, 6, 1, true, true, 3});
    CHECK(rep.pass);
  }
  SUBCASE("vacuous when depth is 3") {
    Report rep = thm510_audit({9, 8, 3, true, false, 0});
    CHECK(rep.pass);
    CHECK(rep.lines.front().detail.find("vacuous") != std::string::npos);
  }
  SUBCASE("violation is surfaced") {
    Report rep = thm510_audit({7, 6, 1, true, true, 2});
    CHECK(!rep.pass);
    CHECK(rep.lines.front().detail.find("VIOLATED") != std::string::npos);
  }
}

TEST_CASE("thm63 classifier") {
  SUBCASE("case a") {
    CohomologyProfile P = make_profile(-6, 5, {4, 8, 8, 4}, 0, 0, 0, 0, 0, 5);
    DerivedInvariants D = derived_invariants(P);
    Thm63Signature sig = thm63_classify(P, D, 9, 6);
    CHECK(sig.tag == "a");
    CHECK(!sig.sigma_discrepancy);
  }
  SUBCASE("case b-ii") {
    // h = 3 = d-r, h^2 = 1 for n <= 0, sigma = 0
    CohomologyProfile P = make_profile(-6, 5, {3, 4, 3}, 1, 1, 0, 0, 0, 4);
    DerivedInvariants D = derived_invariants(P);
    CHECK(D.sigma == 0);
    Thm63Signature sig = thm63_classify(P, D, 9, 6);
    CHECK(sig.tag == "b-ii");
  }
  SUBCASE("case c-ii") {
    // h = 2 = d-r-1, h^2 spike at 0, sigma = 1
    CohomologyProfile P = make_profile(-6, 5, {2, 2}, 0, 1, 0, 0, 0, 3);
    DerivedInvariants D = derived_invariants(P);
    CHECK(D.sigma == 1);
    Thm63Signature sig = thm63_classify(P, D, 9, 6);
    CHECK(sig.tag == "c-ii");
  }
  SUBCASE("case c-iii carries the discrepancy flag") {
    CohomologyProfile P = make_profile(-6, 5, {1}, 1, 1, 0, 0, 0, 2);
    DerivedInvariants D = derived_invariants(P);
    Thm63Signature sig = thm63_classify(P, D, 9, 7);
    CHECK(sig.tag == "c-iii");
    CHECK(sig.sigma_discrepancy);
  }
  SUBCASE("case c-v") {
    // h^2 = 3 for n <= 0, 1 at n = 1; sigma = 0 needs h3(0)-h3(-1) = 0
    CohomologyProfile P = make_profile(-6, 5, {1}, 3, 3, 1, 0, 0, 3);
    DerivedInvariants D = derived_invariants(P);
    CHECK(D.sigma == 0);
    Thm63Signature sig = thm63_classify(P, D, 9, 7);
    CHECK(sig.tag == "c-v");
  }
  SUBCASE("no match") {
    CohomologyProfile P = make_profile(-6, 5, {7}, 0, 0, 0, 0, 0, 2);
    DerivedInvariants D = derived_invariants(P);
    Thm63Signature sig = thm63_classify(P, D, 9, 6);
    CHECK(sig.tag == "no-match");
    CHECK(!sig.note.empty());
  }
}

TEST_CASE("sreg estimate on a cone") {
  // cone over the twisted cubic: generic sections are twisted cubics
  auto Rp = Ring::standard(32003, 5);
  Ideal I = ideal_from_strings(
      Rp, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  SregEstimate est = sreg_estimate(I, 3, 11);
  CHECK(est.per_trial.size() == 3);
  CHECK(est.estimate == 2);
  CHECK(est.maximal);  // d - r + 3 = 3 - 4 + 3 = 2
}
