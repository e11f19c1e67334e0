#include "verify.hpp"

#include <random>
#include <sstream>

namespace gca {

namespace {

std::string num(long long v) { return std::to_string(v); }

}  // namespace

void Report::add(const std::string& what, bool ok, const std::string& detail) {
  pass = pass && ok;
  lines.push_back({what, ok, detail});
}

std::string Report::format() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    os << (l.pass ? "PASS " : "FAIL ") << l.what;
    if (!l.detail.empty()) os << ": " << l.detail;
    os << '\n';
  }
  return os.str();
}

Thm32Prediction thm32_predict(int r, int d) {
  if (r <= 3 || d < r + 2 || d > 2 * r - 3)
    throw HypothesisError("thm32 requires r > 3 and r+2 <= d <= 2r-3");
  Thm32Prediction P;
  P.r = r;
  P.d = d;
  P.a.assign(r + 2, 0);
  P.c.assign(r + 2, 0);
  P.u.assign(r + 1, 0);
  P.v.assign(r + 1, 0);
  P.u_bound.assign(r + 1, false);
  for (int i = 1; i <= r + 1; ++i) {
    P.a[i] = (d - r) * binomial(r, i) + binomial(r - 1, i - 1);
    P.c[i] = (d - 1) * binomial(r - 1, i) - binomial(r - 1, i + 1);
  }
  for (int i = 1; i <= r; ++i) {
    if (i == 1)
      P.u[i] = binomial(r + 1, 2) - d - 1;
    else if (i <= 2 * r - d - 1)
      P.u[i] = P.c[i] - P.a[i];
    else {
      P.u[i] = P.c[i];  // only an upper bound
      P.u_bound[i] = true;
    }
  }
  for (int i = 1; i <= r; ++i) {
    if (i <= 2 * r - d - 2 || i == r)
      P.v[i] = 0;
    else if (i == r - 1)
      P.v[i] = d - r + 1;
    else  // 2r-d-1 <= i <= r-2: exact in terms of the actual u_{i+1}
      P.v[i] = P.u[i + 1] + P.a[i + 1] - P.c[i + 1];
  }
  return P;
}

Report thm32_check(const BettiTable& B, const Thm32Prediction& P) {
  const int r = P.r, d = P.d;
  Report rep;
  rep.add("pd", B.pd() == r, "pd = " + num(B.pd()) + ", expect " + num(r));

  // degree support: Tor_i only in degrees i+1, i+2, i+d-r+1
  bool support_ok = true;
  std::string stray;
  for (const auto& [key, count] : B.entries()) {
    auto [i, deg] = key;
    if (count == 0) continue;
    if (i == 0) {
      if (deg != 0) {
        support_ok = false;
        stray = "beta_{0," + num(deg) + "}";
      }
      continue;
    }
    if (deg != i + 1 && deg != i + 2 && deg != i + d - r + 1) {
      support_ok = false;
      stray = "beta_{" + num(i) + "," + num(deg) + "} = " + num(count);
    }
  }
  rep.add("degree support", support_ok, stray);

  for (int i = 1; i <= r; ++i) {
    long long top = B.beta(i, i + d - r + 1);
    long long want_top = binomial(r - 1, i - 1);
    rep.add("top strand i=" + num(i), top == want_top,
            num(top) + " vs C(" + num(r - 1) + "," + num(i - 1) + ") = " +
                num(want_top));

    long long ui = B.beta(i, i + 1);
    if (P.u_bound[i])
      rep.add("u_" + num(i) + " bound", ui <= P.c[i],
              num(ui) + " <= c_" + num(i) + " = " + num(P.c[i]));
    else
      rep.add("u_" + num(i), ui == P.u[i],
              num(ui) + " vs " + num(P.u[i]));

    long long vi = B.beta(i, i + 2);
    if (i <= 2 * r - d - 2 || i == r)
      rep.add("v_" + num(i), vi == 0, num(vi) + " vs 0");
    else if (i == r - 1)
      rep.add("v_" + num(i), vi == d - r + 1,
              num(vi) + " vs d-r+1 = " + num(d - r + 1));
    else {
      // exact via the actual u_{i+1}
      long long want = B.beta(i + 1, i + 2) + P.a[i + 1] - P.c[i + 1];
      rep.add("v_" + num(i), vi == want, num(vi) + " vs " + num(want));
    }
  }

  // generator counts (Corollary of the same theorem)
  rep.add("quadric generators", B.beta(1, 2) == P.u[1],
          num(B.beta(1, 2)) + " vs " + num(P.u[1]));
  rep.add("no cubic generators", B.beta(1, 3) == 0, num(B.beta(1, 3)));
  rep.add("one generator of degree d-r+2", B.beta(1, d - r + 2) == 1,
          num(B.beta(1, d - r + 2)));
  return rep;
}

namespace {

bool delta_le(const DerivedInvariants& D, long long bound) {
  return !D.delta_finite || D.delta <= bound;
}

void audit_lemma45b(int d, int r, const CohomologyProfile& P,
                    const DerivedInvariants& D,
                    std::optional<int> section_reg, Report& rep) {
  if (!D.h1_nonzero) {
    rep.add("lemma45b", true, "h^1 = 0, descent trivial");
    return;
  }
  rep.add("lemma45b delta<=end(H^1)", D.delta <= D.end_h1,
          num(D.delta) + " <= " + num(D.end_h1));
  rep.add("lemma45b delta<=reg X - 2", D.delta <= P.reg_a - 1,
          num(D.delta) + " <= " + num(P.reg_a - 1));
  if (section_reg) {
    rep.add("lemma45b delta<=reg C - 1", D.delta <= *section_reg - 1,
            num(D.delta) + " <= " + num(*section_reg - 1));
    rep.add("lemma45a reg C bound",
            *section_reg <= std::min(P.reg_a + 1, d - r + 3),
            num(*section_reg) + " <= min(" + num(P.reg_a + 1) + "," +
                num(d - r + 3) + ")");
  }
}

void audit_cor46(int d, int r, const CohomologyProfile& P,
                 const DerivedInvariants& D, Report& rep) {
  if (!(4 < d && d < 2 * r - 4)) {
    rep.add("cor46", true, "vacuous: needs 4 < d < 2r-4");
    return;
  }
  long long bound = std::min<long long>(d - r + 2,
                                        P.value(1, 1) + P.value(2, 0));
  rep.add("cor46 delta bound", delta_le(D, bound),
          (D.delta_finite ? num(D.delta) : "-inf") + " <= " + num(bound));
}

void audit_prop43d(int d, int r, const CohomologyProfile& P,
                   const DerivedInvariants& D, Report& rep) {
  if (!(6 <= r + 1 && r + 1 <= d && d <= 2 * r - 4)) {
    rep.add("prop43d", true, "vacuous: needs 6 <= r+1 <= d <= 2r-4");
    return;
  }
  // m runs over positive integers (the statement's N excludes 0)
  for (int m = 1; m <= 3; ++m) {
    long long bound = P.value(1, m) + P.value(2, m - 1) + m;
    rep.add("prop43d m=" + num(m), delta_le(D, bound - 1),
            (D.delta_finite ? num(D.delta) : "-inf") + " <= " +
                num(bound - 1));
  }
}

}  // namespace

Report descent_audit(int d, int r, const CohomologyProfile& P,
                     const DerivedInvariants& D,
                     std::optional<int> section_reg, DescentClaim claim) {
  Report rep;
  switch (claim) {
    case DescentClaim::Lemma45b:
      audit_lemma45b(d, r, P, D, section_reg, rep);
      break;
    case DescentClaim::Cor46:
      audit_cor46(d, r, P, D, rep);
      break;
    case DescentClaim::Prop43d:
      audit_prop43d(d, r, P, D, rep);
      break;
  }
  return rep;
}

Report descent_audit_all(int d, int r, const CohomologyProfile& P,
                         const DerivedInvariants& D,
                         std::optional<int> section_reg) {
  Report rep;
  audit_lemma45b(d, r, P, D, section_reg, rep);
  audit_cor46(d, r, P, D, rep);
  audit_prop43d(d, r, P, D, rep);
  return rep;
}

Report thm510_audit(const Thm510Input& in) {
  Report rep;
  bool hyp = 4 < in.r && in.r < in.d && in.max_sect_reg && in.depth == 1 &&
             (!in.delta_finite || in.delta <= in.d - in.r + 1);
  if (!hyp) {
    rep.add("thm510", true,
            "vacuous: hypothesis not met (max sect reg / depth 1 / delta)");
    return rep;
  }
  bool concl = in.d > 2 * in.r - 5;
  rep.add("thm510", concl,
          concl ? num(in.d) + " > " + num(2 * in.r - 5)
                : "VIOLATED: d = " + num(in.d) + " <= 2r-5 = " +
                      num(2 * in.r - 5));
  return rep;
}

Thm63Signature thm63_classify(const CohomologyProfile& P,
                              const DerivedInvariants& D, int d, int r) {
  Thm63Signature sig;
  sig.h = P.value(1, 1);
  auto h2 = [&](int n) { return P.value(2, n); };

  bool zero_h2 = true;
  for (int n = P.lo; n <= P.hi; ++n) zero_h2 &= h2(n) == 0;
  // h^2 = c for n <= 0 and 0 for n > 0
  auto tail_shape = [&](long long c) {
    for (int n = P.lo; n <= 0; ++n)
      if (h2(n) != c) return false;
    for (int n = 1; n <= P.hi; ++n)
      if (h2(n) != 0) return false;
    return true;
  };
  // h^2(0) = 1, zero elsewhere
  bool spike0 = h2(0) == 1;
  for (int n = P.lo; n <= P.hi && spike0; ++n)
    if (n != 0 && h2(n) != 0) spike0 = false;
  // h^2 = 3 for n <= 0, 1 at n = 1, 0 beyond
  bool shape_iva1 = h2(1) == 1;
  for (int n = P.lo; n <= 0 && shape_iva1; ++n)
    if (h2(n) != 3) shape_iva1 = false;
  for (int n = 2; n <= P.hi && shape_iva1; ++n)
    if (h2(n) != 0) shape_iva1 = false;

  long long sigma = D.sigma;
  if (sig.h == d - r + 1) {
    if (zero_h2 && sigma == 0) sig.tag = "a";
  } else if (sig.h == d - r) {
    if (zero_h2 && sigma == 1)
      sig.tag = "b-i";
    else if (tail_shape(1) && sigma == 0)
      sig.tag = "b-ii";
  } else if (sig.h == d - r - 1) {
    if (zero_h2 && sigma == 2)
      sig.tag = "c-i";
    else if (spike0 && sigma == 1)
      sig.tag = "c-ii";
    else if (tail_shape(1) && (sigma == 0 || sigma == 1)) {
      sig.tag = "c-iii";
      sig.sigma_discrepancy = true;
      sig.note = "printed sigma values disagree (theorem: 1, type table: 0); "
                 "computed sigma = " + num(sigma);
    } else if (tail_shape(2) && sigma == 0)
      sig.tag = "c-iv";
    else if (shape_iva1 && sigma == 0)
      sig.tag = "c-v";
  }
  if (sig.tag == "no-match")
    sig.note = "h = " + num(sig.h) + " (d-r-1.." + "d-r+1 = " +
               num(d - r - 1) + ".." + num(d - r + 1) + "), sigma = " +
               num(sigma) + ", h2(0) = " + num(h2(0)) + ", h2(-1) = " +
               num(h2(-1));
  return sig;
}

SregEstimate sreg_estimate(const Ideal& I, int trials, std::uint64_t seed) {
  const Ring& R = I.ring();
  FreeModule F = poly_module(I.ring_ptr());
  HilbertSeries hs = hilbert_series(I);
  int r = R.nvars() - 1;
  long long d = hs.degree();

  SregEstimate out;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::uniform_int_distribution<std::uint32_t> coefd(0, R.p() - 1);
    Vec f;
    bool found = false;
    for (int attempt = 0; attempt < 60 && !found; ++attempt) {
      std::vector<std::uint32_t> row(R.nvars());
      bool allzero = true;
      for (auto& c : row) {
        c = coefd(rng);
        allzero &= c == 0;
      }
      if (allzero) continue;
      f = linear_form(F, row);
      found = is_nzd_linear(I, f);
    }
    if (!found)
      throw RetryExhaustedError(
          "sreg_estimate: no nonzerodivisor linear form found");
    Ideal sec = hyperplane_section(I, f);
    out.per_trial.push_back(
        scheme_regularity(BettiTable(minimal_resolution(sec))));
  }
  out.estimate = *std::min_element(out.per_trial.begin(), out.per_trial.end());
  out.maximal = out.estimate == d - r + 3;
  return out;
}

}  // namespace gca
