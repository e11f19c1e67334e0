#include <random>

#include "doctest.h"
#include "ring.hpp"
#include "test_util.hpp"

using namespace gca;

TEST_CASE("prime field arithmetic against the defining identities") {
  PrimeField K(32003);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(0, 32002);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint32_t a = d(rng), b = d(rng);
    CHECK(K.sub(K.add(a, b), b) == a);
    CHECK(K.add(a, K.neg(a)) == 0);
    // independent inverse oracle: Fermat exponentiation
    if (a) {
      CHECK(K.mul(a, K.inv(a)) == 1);
      CHECK(K.inv(a) == K.pow(a, 32003 - 2));
    }
    std::int64_t signedv = std::int64_t(a) - std::int64_t(b) * 7;
    CHECK(K.reduce(signedv) ==
          K.sub(a % 32003, K.mul(b % 32003, 7 % 32003)));
  }
  CHECK_THROWS_AS(K.inv(0), DivisionByZeroError);
  CHECK_THROWS_AS(PrimeField(32004), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK(PrimeField::is_prime(32003));
  CHECK(!PrimeField::is_prime(32001));
}

TEST_CASE("monomial arithmetic and degree cache") {
  auto Rp = Ring::standard(32003, 4);
  const Ring& R = *Rp;
  Monomial a = R.monomial(std::vector<int>{2, 0, 1, 0});
  Monomial b = R.monomial(std::vector<int>{1, 3, 0, 0});
  CHECK(R.degree_of(a) == 3);
  Monomial ab = R.mul(a, b);
  CHECK(R.degree_of(ab) == 7);
  CHECK(R.divides(a, ab));
  CHECK(R.divides(b, ab));
  CHECK(!R.divides(ab, a));
  Monomial q = R.quotient(ab, b);
  CHECK(q == a);
  Monomial l = R.lcm(a, b);
  CHECK(R.degree_of(l) == 6);
  CHECK(!R.coprime(a, b));
  CHECK(R.coprime(R.variable(0), R.variable(3)));
  CHECK_THROWS_AS(R.monomial(std::vector<int>{300, 0, 0, 0}),
                  ExponentOverflowError);
}

TEST_CASE("degrevlex is a multiplicative total order") {
  auto Rp = Ring::standard(32003, 5);
  const Ring& R = *Rp;
  MonomialOrder ord;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Monomial u = testutil::random_monomial(R, 4, rng);
    Monomial v = testutil::random_monomial(R, 4, rng);
    Monomial w = testutil::random_monomial(R, 4, rng);
    int c = ord.compare(R, u, v);
    CHECK(ord.compare(R, v, u) == -c);
    CHECK((c == 0) == (u == v));
    // compatibility with multiplication
    CHECK(ord.compare(R, R.mul(u, w), R.mul(v, w)) == c);
    // 1 is the least monomial
    if (!u.is_one()) CHECK(ord.compare(R, u, R.one()) > 0);
  }
  // the classical degrevlex tie-break: x1^2 > x0*x2 in K[x0,x1,x2]
  auto R3p = Ring::standard(32003, 3);
  Monomial m1 = R3p->monomial(std::vector<int>{1, 0, 1});
  Monomial m2 = R3p->monomial(std::vector<int>{0, 2, 0});
  CHECK(ord.compare(*R3p, m2, m1) > 0);
}

TEST_CASE("block order eliminates the leading variables") {
  auto Rp = Ring::standard(32003, 4);
  const Ring& R = *Rp;
  MonomialOrder ord{MonomialOrder::Kind::Block, 1};
  // any monomial containing x0 beats any x0-free monomial
  Monomial u = R.monomial(std::vector<int>{1, 0, 0, 0});
  Monomial v = R.monomial(std::vector<int>{0, 5, 5, 5});
  CHECK(ord.compare(R, u, v) > 0);
}

TEST_CASE("vector arithmetic in a free module") {
  auto Rp = Ring::standard(32003, 3);
  FreeModule F(Rp, {0, 1});
  const Ring& R = *Rp;
  Vec a = make_vec(F, {MTerm{R.variable(0), 0, 5}, MTerm{R.one(), 1, 3}});
  Vec b = make_vec(F, {MTerm{R.variable(0), 0, 32000}, MTerm{R.one(), 1, 1}});
  Vec s = add(F, a, b);
  CHECK(s.size() == 2);
  CHECK(sub(F, s, b) == a);
  CHECK(add(F, a, negate(F, a)).is_zero());
  CHECK(is_homogeneous(F, a));
  CHECK(degree(F, a) == 1);
  Vec bad = make_vec(F, {MTerm{R.variable(0), 0, 5}, MTerm{R.one(), 0, 3}});
  CHECK(!is_homogeneous(F, bad));
  CHECK_THROWS_AS(degree(F, bad), HomogeneityError);
  CHECK(monic(F, a).lead().c == 1);
}

TEST_CASE("monomials_of_degree counts match the binomial formula") {
  auto Rp = Ring::standard(32003, 4);
  for (int d = 0; d <= 6; ++d) {
    auto mons = monomials_of_degree(*Rp, d);
    long long expect = 1;
    for (int i = 1; i <= 3; ++i) expect = expect * (d + i) / i;
    CHECK(static_cast<long long>(mons.size()) == expect);
  }
}

TEST_CASE("polynomial parsing and formatting round trip") {
  auto Rp = Ring::standard(32003, 4);
  FreeModule F = poly_module(Rp);
  Vec f = parse_poly(F, "x0^2*x3 - 2*x1*x2^2 + 7*x0*x1*x2");
  CHECK(f.size() == 3);
  CHECK(is_homogeneous(F, f));
  Vec g = parse_poly(F, format_poly(*Rp, f));
  CHECK(f == g);
  // omitted exponent and explicit unary plus
  Vec h = parse_poly(F, "+x0*x0 - x1^2");
  CHECK(h == parse_poly(F, "x0^2 - x1^2"));
  CHECK(parse_poly(F, "3 - 3").is_zero());
  CHECK_THROWS_AS(parse_poly(F, "x9"), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "x0 +* x1"), ParseError);
}

TEST_CASE("ring header round trip") {
  auto Rp = Ring::standard(32003, 7);
  std::string hdr = format_ring_header(*Rp);
  auto back = parse_ring_header(hdr);
  CHECK(back->same_as(*Rp));
  CHECK_THROWS_AS(parse_ring_header("ring q 5 vars x order degrevlex"),
                  ParseError);
}

TEST_CASE("random homogeneous polynomials stay sorted and merged") {
  auto Rp = Ring::standard(32003, 4);
  FreeModule F = poly_module(Rp);
  std::mt19937 rng(3);
  MonomialOrder ord;
  for (int trial = 0; trial < 50; ++trial) {
    Vec f = testutil::random_homog_poly(*Rp, 4, 10, rng);
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      CHECK(ord.compare(*Rp, f.terms()[i].m, f.terms()[i + 1].m) > 0);
    for (const auto& t : f.terms()) CHECK(t.c != 0);
  }
}
