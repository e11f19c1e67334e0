#include "cohomology.hpp"

#include <sstream>

#include "ideal_ops.hpp"

namespace gca {

ExtCalculator::ExtCalculator(const FreeComplex& C) : C_(&C) {
  n0_ = C.ring->nvars();
  im_.resize(C.length());
}

const SubmoduleHF& ExtCalculator::image(int j) const {
  if (!im_[j]) {
    // dualized differential delta^j : Hom(F_j) -> Hom(F_{j+1});
    // column a is the a-th row of maps[j]
    std::vector<int> dual_tw;
    for (int t : C_->twists[j + 1]) dual_tw.push_back(n0_ - t);
    FreeModule D(C_->ring, dual_tw);
    int src_rank = static_cast<int>(C_->twists[j].size());
    std::vector<Vec> cols;
    for (int a = 0; a < src_rank; ++a) {
      std::vector<MTerm> terms;
      for (int b = 0; b < static_cast<int>(C_->maps[j].col.size()); ++b) {
        auto it = C_->maps[j].col[b].find(a);
        if (it == C_->maps[j].col[b].end()) continue;
        for (const auto& t : it->second.terms())
          terms.push_back(MTerm{t.m, b, t.c});
      }
      Vec v = make_vec(D, std::move(terms));
      if (!v.is_zero()) cols.push_back(std::move(v));
    }
    im_[j].emplace(D, buchberger(D, std::move(cols)));
  }
  return *im_[j];
}

long long ExtCalculator::dual_free_dim(int j, int m) const {
  if (j < 0 || j >= static_cast<int>(C_->twists.size())) return 0;
  long long s = 0;
  for (int t : C_->twists[j]) s += ring_hf(n0_, m - (n0_ - t));
  return s;
}

long long ExtCalculator::ext_dim(int j, int m) const {
  if (j < 0 || j >= static_cast<int>(C_->twists.size())) return 0;
  long long dim = dual_free_dim(j, m);
  if (j < C_->length()) dim -= image(j).dim(m);       // rank of delta^j
  if (j >= 1) dim -= image(j - 1).dim(m);             // image inside C^j
  return dim;
}

long long CohomologyProfile::value(int i, int n) const {
  if (i < 0 || i > 3) throw Error("cohomology index out of range");
  if (!in_window(n))
    throw WindowError("degree " + std::to_string(n) + " outside window [" +
                      std::to_string(lo) + "," + std::to_string(hi) + "]");
  return h[i][n - lo];
}

std::string CohomologyProfile::format() const {
  std::ostringstream out;
  const int w = 6;
  out << "     n";
  for (int n = lo; n <= hi; ++n) {
    std::string s = std::to_string(n);
    out << std::string(w - s.size(), ' ') << s;
  }
  out << "\n";
  for (int i = 0; i <= 3; ++i) {
    out << "h^" << i << "(n)";
    for (int n = lo; n <= hi; ++n) {
      std::string s = std::to_string(h[i][n - lo]);
      out << std::string(w - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

std::string CohomologyProfile::machine_format() const {
  std::ostringstream out;
  for (int i = 0; i <= 3; ++i)
    for (int n = lo; n <= hi; ++n)
      out << "h " << i << " " << n << " " << h[i][n - lo] << "\n";
  return out.str();
}

CohomologyProfile cohomology_profile(const Ideal& I, int lo, int hi,
                                     bool check_h0) {
  if (lo > hi) throw WindowError("empty cohomology window");
  if (hi - lo > 400)
    throw ResourceError("cohomology window wider than 400 degrees");
  const Ring& R = I.ring();
  int nv = R.nvars();
  FreeComplex C = minimal_resolution(I);
  BettiTable B(C);
  HilbertSeries hs = hilbert_series(I);

  CohomologyProfile P;
  P.lo = lo;
  P.hi = hi;
  P.reg_a = B.reg();
  P.depth = nv - B.pd();
  P.dim = hs.krull_dim();
  P.degree = hs.degree();

  ExtCalculator ext(C);
  for (int i = 0; i <= 3; ++i) {
    P.h[i].resize(hi - lo + 1, 0);
    for (int n = lo; n <= hi; ++n) P.h[i][n - lo] = ext.ext_dim(nv - i, -n);
  }

  if (check_h0) {
    Ideal sat = saturate_irrelevant(I);
    HilbertSeries hsat = hilbert_series(sat);
    for (int n = lo; n <= hi; ++n) {
      long long expect = hs.hf(n) - hsat.hf(n);
      if (P.h[0][n - lo] != expect)
        throw Error("h^0 cross-check failed at degree " + std::to_string(n));
    }
  }
  return P;
}

DerivedInvariants derived_invariants(const CohomologyProfile& P) {
  auto h1 = [&](int n) { return P.value(1, n); };
  auto h2 = [&](int n) { return P.value(2, n); };
  auto h3 = [&](int n) { return P.value(3, n); };

  // the window must capture all of H^1 ...
  if (P.hi < P.reg_a)
    throw WindowError("window top below reg(A); widen window");
  if (P.lo + 1 > 0 || h1(P.lo) != 0 || h1(P.lo + 1) != 0)
    throw WindowError("window bottom does not reach the vanishing range of "
                      "H^1; widen window");
  // ... and three stable values of h^2 at the bottom
  if (P.lo + 2 > -1 || h2(P.lo) != h2(P.lo + 1) || h2(P.lo) != h2(P.lo + 2))
    throw WindowError("h^2 not stabilized at the window bottom; widen window");

  DerivedInvariants out;
  out.e = h2(P.lo);
  out.sigma = h2(0) - h2(-1) - (h3(0) - h3(-1));
  out.e_caveat = out.sigma != 0;
  out.lin_deficiency = P.in_window(1) ? h1(1) : 0;

  for (int n = P.lo; n <= P.hi; ++n) {
    if (h1(n) == 0) continue;
    if (!out.h1_nonzero) out.beg_h1 = n;
    out.h1_nonzero = true;
    out.end_h1 = n;
  }

  // delta = least m such that h^1 descends strictly (until zero) past m;
  // beyond the window H^1 vanishes, so the condition holds there
  auto descends_at = [&](int n) {
    long long prev = n - 1 >= P.lo ? h1(n - 1) : 0;
    return h1(n) <= std::max(prev - 1, 0LL);
  };
  int m = P.lo;  // all conditions hold above m = hi trivially; scan down
  for (m = P.hi; m > P.lo; --m)
    if (!descends_at(m)) break;
  // now either m == P.lo (descends everywhere above lo) or the condition
  // fails at m, so delta = m
  if (m == P.lo && descends_at(P.lo + 1)) {
    out.delta_finite = false;  // descends for every n: delta = -infinity
  } else {
    out.delta_finite = true;
    out.delta = m;
  }
  return out;
}

}  // namespace gca
