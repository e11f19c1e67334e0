#ifndef TESTS_TEST_UTIL_HPP
#define TESTS_TEST_UTIL_HPP

#include <random>

#include "groebner.hpp"

namespace gca::testutil {

inline Vec random_homog_poly(const Ring& R, int deg, int nterms,
                             std::mt19937& rng) {
  auto mons = monomials_of_degree(R, deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<std::uint32_t> coef(1, R.p() - 1);
  FreeModule F = poly_module(std::make_shared<Ring>(R));
  std::vector<MTerm> terms;
  for (int i = 0; i < nterms; ++i)
    terms.push_back(MTerm{mons[pick(rng)], 0, coef(rng)});
  return make_vec(F, std::move(terms));
}

inline Monomial random_monomial(const Ring& R, int max_exp, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> exps(R.nvars());
  for (auto& x : exps) x = e(rng);
  return R.monomial(exps);
}

}  // namespace gca::testutil

#endif
