#include <random>

#include "doctest.h"
#include "hilbert.hpp"
#include "linalg.hpp"
#include "resolution.hpp"
#include "test_util.hpp"

using namespace gca;

namespace {

// Dense matrix of the degree-n slice of maps[k]: F_{k+1} -> F_k.
FpMatrix degree_slice(const FreeComplex& C, int k, int n) {
  const Ring& R = *C.ring;
  FreeModule Fp = poly_module(C.ring);
  auto basis_of = [&](const std::vector<int>& tw) {
    std::vector<std::pair<int, Monomial>> basis;
    for (std::size_t c = 0; c < tw.size(); ++c)
      for (const auto& m : monomials_of_degree(R, n - tw[c]))
        basis.push_back({static_cast<int>(c), m});
    return basis;
  };
  auto src = basis_of(C.twists[k + 1]);
  auto tgt = basis_of(C.twists[k]);
  std::map<std::pair<int, std::string>, int> tgt_index;
  for (std::size_t i = 0; i < tgt.size(); ++i)
    tgt_index[{tgt[i].first, R.format_monomial(tgt[i].second)}] =
        static_cast<int>(i);
  FpMatrix M(R.field(), static_cast<int>(tgt.size()),
             static_cast<int>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& [c, m] = src[j];
    for (const auto& [r, p] : C.maps[k].col[c])
      for (const auto& t : p.terms()) {
        Monomial prod = R.mul(t.m, m);
        auto it = tgt_index.find({r, R.format_monomial(prod)});
        REQUIRE(it != tgt_index.end());
        M.at(it->second, static_cast<int>(j)) =
            R.field().add(M.at(it->second, static_cast<int>(j)), t.c);
      }
  }
  return M;
}

// Independent oracle: verify exactness at every interior spot of the
// complex in degrees up to `maxdeg` by dense rank computations.
void check_exactness(const FreeComplex& C, int maxdeg) {
  for (int j = 1; j <= C.top(); ++j) {
    for (int n = 0; n <= maxdeg; ++n) {
      long long dim = 0;
      for (int t : C.twists[j]) dim += ring_hf(C.ring->nvars(), n - t);
      long long rk_out = degree_slice(C, j - 1, n).rank();
      long long rk_in =
          j < C.top() ? degree_slice(C, j, n).rank() : 0;
      CHECK(dim == rk_out + rk_in);
    }
  }
}

Ideal twisted_cubic(RingPtr R) {
  return Ideal(R, {parse_poly(poly_module(R), "x0*x2 - x1^2"),
                   parse_poly(poly_module(R), "x0*x3 - x1*x2"),
                   parse_poly(poly_module(R), "x1*x3 - x2^2")});
}

}  // namespace

TEST_CASE("resolution of the twisted cubic: 1, 3, 2") {
  auto Rp = Ring::standard(32003, 4);
  Ideal I = twisted_cubic(Rp);
  FreeComplex C = free_resolution(I);
  CHECK(is_complex_zero_composition(C));
  minimalize(C);
  CHECK(is_complex_zero_composition(C));
  CHECK(is_minimal(C));
  BettiTable B(C);
  CHECK(B.pd() == 2);
  CHECK(B.reg() == 1);
  CHECK(B.beta(0, 0) == 1);
  CHECK(B.beta(1, 2) == 3);
  CHECK(B.beta(2, 3) == 2);
  check_exactness(C, 6);
}

TEST_CASE("koszul complex of the irrelevant ideal") {
  auto Rp = Ring::standard(32003, 4);
  std::vector<Vec> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(poly_variable(*Rp, i));
  FreeComplex C = minimal_resolution(Ideal(Rp, gens));
  BettiTable B(C);
  CHECK(B.pd() == 4);
  CHECK(B.reg() == 0);
  for (int i = 1; i <= 4; ++i) CHECK(B.beta(i, i) == binomial(4, i));
  CHECK(is_minimal(C));
  check_exactness(C, 5);
}

TEST_CASE("complete intersection of two quadrics") {
  auto Rp = Ring::standard(32003, 4);
  FreeModule F = poly_module(Rp);
  Ideal I(Rp, {parse_poly(F, "x0^2 + x1*x2"), parse_poly(F, "x3^2 + x0*x1")});
  BettiTable B(minimal_resolution(I));
  CHECK(B.pd() == 2);
  CHECK(B.beta(1, 2) == 2);
  CHECK(B.beta(2, 4) == 1);
  CHECK(B.reg() == 2);
}

TEST_CASE("euler characteristic matches the hilbert function") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    auto Rp = Ring::standard(32003, 4);
    FreeModule F = poly_module(Rp);
    std::vector<Vec> gens;
    for (int k = 0; k < 2 + trial % 2; ++k)
      gens.push_back(testutil::random_homog_poly(*Rp, 2 + trial % 3, 4, rng));
    Ideal I(Rp, gens);
    HilbertSeries hs = hilbert_series(I);
    FreeComplex C = free_resolution(I);
    for (int n = 0; n <= 8; ++n) CHECK(euler_characteristic(C, n) == hs.hf(n));
    minimalize(C);
    CHECK(is_minimal(C));
    CHECK(is_complex_zero_composition(C));
    for (int n = 0; n <= 8; ++n) CHECK(euler_characteristic(C, n) == hs.hf(n));
    // alternating column sums reproduce the hilbert numerator
    BettiTable B(C);
    const auto& num = hs.numerator();
    int maxd = 0;
    for (const auto& [key, v] : B.entries()) maxd = std::max(maxd, key.second);
    for (int d = 0; d <= maxd; ++d) {
      long long s = 0;
      for (int i = 0; i <= B.pd(); ++i)
        s += (i % 2 ? -1 : 1) * B.beta(i, d);
      long long expect =
          d < static_cast<int>(num.size()) ? num[d] : 0;
      CHECK(s == expect);
    }
  }
}

TEST_CASE("random ideals: minimal resolution is exact") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 3; ++trial) {
    auto Rp = Ring::standard(32003, 3);
    std::vector<Vec> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(testutil::random_homog_poly(*Rp, 2, 3, rng));
    FreeComplex C = minimal_resolution(Ideal(Rp, gens));
    CHECK(is_minimal(C));
    check_exactness(C, 6);
  }
}

TEST_CASE("betti table text formats") {
  auto Rp = Ring::standard(32003, 4);
  BettiTable B(minimal_resolution(twisted_cubic(Rp)));
  std::string txt = B.format();
  CHECK(txt.find("3") != std::string::npos);
  std::string mach = B.machine_format();
  CHECK(mach.find("beta 0 0 1") != std::string::npos);
  CHECK(mach.find("beta 1 1 3") != std::string::npos);
  CHECK(mach.find("beta 2 1 2") != std::string::npos);
}

TEST_CASE("zero ideal resolves to the ring itself") {
  auto Rp = Ring::standard(32003, 3);
  FreeComplex C = minimal_resolution(Ideal::zero(Rp));
  CHECK(C.length() == 0);
  BettiTable B(C);
  CHECK(B.pd() == 0);
  CHECK(B.beta(0, 0) == 1);
}
