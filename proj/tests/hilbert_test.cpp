#include <random>

#include "doctest.h"
#include "hilbert.hpp"
#include "test_util.hpp"

using namespace gca;

namespace {

// Brute-force oracle: count monomials of degree n outside the monomial ideal.
long long count_standard_monomials(const Ring& R,
                                   const std::vector<Monomial>& gens, int n) {
  long long count = 0;
  for (const auto& m : monomials_of_degree(R, n)) {
    bool in = false;
    for (const auto& g : gens)
      if (R.divides(g, m)) {
        in = true;
        break;
      }
    if (!in) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(ring_hf(4, 3) == 20);
  CHECK(ring_hf(4, -1) == 0);
}

TEST_CASE("hilbert function of monomial ideals matches brute-force counting") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    int nv = 2 + trial % 4;  // 2..5 variables
    auto Rp = Ring::standard(32003, nv);
    std::uniform_int_distribution<int> ngens(1, 5);
    std::vector<Monomial> gens;
    int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
      Monomial m = testutil::random_monomial(*Rp, 3, rng);
      if (!m.is_one()) gens.push_back(m);
    }
    HilbertSeries hs(nv, hilbert_numerator(*Rp, gens));
    for (int n = 0; n <= 8; ++n)
      CHECK(hs.hf(n) == count_standard_monomials(*Rp, gens, n));
  }
}

TEST_CASE("degenerate numerators") {
  auto Rp = Ring::standard(32003, 3);
  // zero ideal: series of the full ring
  HilbertSeries full(3, hilbert_numerator(*Rp, {}));
  CHECK(full.krull_dim() == 3);
  CHECK(full.degree() == 1);
  CHECK(full.hf(4) == ring_hf(3, 4));
  // unit ideal
  HilbertSeries unit(3, hilbert_numerator(*Rp, {Rp->one()}));
  CHECK(unit.krull_dim() == 0);
  CHECK(unit.hf(0) == 0);
}

TEST_CASE("twisted cubic: dimension, degree, hilbert polynomial") {
  auto Rp = Ring::standard(32003, 4);
  FreeModule F = poly_module(Rp);
  Ideal I(Rp, {parse_poly(F, "x0*x2 - x1^2"), parse_poly(F, "x0*x3 - x1*x2"),
               parse_poly(F, "x1*x3 - x2^2")});
  HilbertSeries hs = hilbert_series(I);
  CHECK(hs.krull_dim() == 2);
  CHECK(hs.proj_dim() == 1);
  CHECK(hs.degree() == 3);
  for (int n = 0; n <= 10; ++n) CHECK(hs.hf(n) == 3 * n + 1);
  for (int n = hs.hp_agreement_bound(); n <= 12; ++n)
    CHECK(hs.hp(n) == hs.hf(n));
  CHECK(hs.hp(5) == 16);
}

TEST_CASE("complete intersection of two quadrics in P^3") {
  auto Rp = Ring::standard(32003, 4);
  FreeModule F = poly_module(Rp);
  Ideal I(Rp, {parse_poly(F, "x0^2 + x1*x2"), parse_poly(F, "x3^2 + x0*x1")});
  HilbertSeries hs = hilbert_series(I);
  CHECK(hs.krull_dim() == 2);
  CHECK(hs.degree() == 4);
  // numerator of a (2,2) complete intersection is (1-t^2)^2
  std::vector<long long> expect{1, 0, -2, 0, 1};
  CHECK(hs.numerator() == expect);
}

TEST_CASE("hp_agreement_bound is tight") {
  auto Rp = Ring::standard(32003, 2);
  // I = (x0^2): hf = 1,2,2,2..., hp = 2; they first agree at n = 1
  HilbertSeries hs(
      2, hilbert_numerator(*Rp, {Rp->monomial(std::vector<int>{2, 0})}));
  CHECK(hs.hp_agreement_bound() == 1);
  CHECK(hs.hf(0) == 1);
  CHECK(hs.hp(0) == 2);
}

TEST_CASE("graded dimensions of a submodule from its lead terms") {
  auto Rp = Ring::standard(32003, 3);
  const Ring& R = *Rp;
  // U = image of (x0, x1, x2) : S(-1)^3 -> S, i.e. the irrelevant ideal
  FreeModule G = poly_module(Rp);
  std::vector<Vec> gens{poly_variable(R, 0), poly_variable(R, 1),
                        poly_variable(R, 2)};
  std::vector<Vec> gb = buchberger(G, gens);
  SubmoduleHF hf(G, gb);
  for (int n = 1; n <= 6; ++n) CHECK(hf.dim(n) == ring_hf(3, n));
  CHECK(hf.dim(0) == 0);

  // rank-2: U = x0*e0 + x1*e1 generates a free submodule of S^2
  FreeModule F2(Rp, {0, 0});
  Vec u = make_vec(F2, {MTerm{R.variable(0), 0, 1}, MTerm{R.variable(1), 1, 1}});
  SubmoduleHF hf2(F2, buchberger(F2, {u}));
  // S*u is free on one degree-1 generator
  for (int n = 0; n <= 5; ++n) CHECK(hf2.dim(n) == ring_hf(3, n - 1));
}
