#include <random>

#include "descent/algebra.hpp"
#include "descent/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descent;

TEST_CASE("parse and print") {
  auto p = IntegerPolynomial::parse("x^3 + x + 1");
  CHECK(p == IntegerPolynomial{1, 1, 0, 1});
  CHECK(p.to_list_string() == "[1,1,0,1]");
  CHECK(p.to_string() == "x^3+x+1");
  CHECK(IntegerPolynomial::parse("[1,1,0,1]") == p);
  CHECK(IntegerPolynomial::parse("2*x^2 - 3x") == IntegerPolynomial{0, -3, 2});
  CHECK(IntegerPolynomial::parse("-x^4+17") == IntegerPolynomial{17, 0, 0, 0, -1});
  CHECK(IntegerPolynomial::parse("[0,0,0]").is_zero());
  CHECK(IntegerPolynomial::parse("[0,0,0]").degree() == -1);
  CHECK(IntegerPolynomial::parse("123456789012345678901234567890x").coeff(1) ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(IntegerPolynomial::parse("x^^2"), Error);
  CHECK_THROWS_AS(IntegerPolynomial::parse("[1,,2]"), Error);
  CHECK_THROWS_AS(IntegerPolynomial::parse(""), Error);
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> v(1 + rng() % 7);
    for (auto& x : v) x = c(rng);
    IntegerPolynomial p(v);
    CHECK(IntegerPolynomial::parse(p.to_string()) == p);
    CHECK(IntegerPolynomial::parse(p.to_list_string()) == p);
  }
}

TEST_CASE("arithmetic and evaluation") {
  IntegerPolynomial a{1, 1}, b{-1, 1};
  CHECK(a * b == IntegerPolynomial{-1, 0, 1});
  CHECK(a + b == IntegerPolynomial{0, 2});
  CHECK((a - a).is_zero());
  CHECK(IntegerPolynomial{1, 2, 3}.derivative() == IntegerPolynomial{2, 6});
  CHECK(IntegerPolynomial{4, 0, 1}.evaluate(-3) == 13);
  CHECK(Integer(3) * a == IntegerPolynomial{3, 3});
}

TEST_CASE("resultant fixed values") {
  using P = IntegerPolynomial;
  CHECK(resultant(P{0, 1}, P{-5, 1}) == -5);
  CHECK(resultant(P::parse("x^4+x^2+2"), P::parse("2x^2-1")) == 121);
  CHECK(resultant(P::parse("x^3+x+1"), P::parse("x^4+2x^3-3x^2+4x+4")) == -31);
  CHECK(resultant(P::parse("x^4-1"), P::parse("x^2+5x+1")) == -525);
  CHECK(resultant(P::parse("x^3+691"), P::parse("x^2-17")) == 472568);
  CHECK(resultant(P::parse("x^3+625"), P::parse("x+1")) == -624);
  CHECK(resultant(P::parse("x^5-724"), P::parse("x+2")) == 756);
  CHECK(resultant(P::parse("x^2-1"), P::parse("x^2+2x+1")) == 0);
  CHECK(!coprime_over_closure(P::parse("x^4-1"), P::parse("x^2+1")));
  CHECK(coprime_over_closure(P::parse("x^4-1"), P::parse("x^2+5x+1")));
}

TEST_CASE("resultant matches rational Sylvester elimination") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int t = 0; t < 300; ++t) {
    std::vector<Integer> u(2 + rng() % 5), v(2 + rng() % 5);
    for (auto& x : u) x = c(rng);
    for (auto& x : v) x = c(rng);
    if (u.back() == 0) u.back() = 1;
    if (v.back() == 0) v.back() = -1;
    IntegerPolynomial p(u), q(v);
    CHECK(resultant(p, q) == oracle::sylvester_resultant(p, q));
    // res(q, p) = (-1)^(deg p deg q) res(p, q)
    Integer s = resultant(p, q);
    if ((p.degree() * q.degree()) % 2) s = -s;
    CHECK(resultant(q, p) == s);
  }
}

TEST_CASE("resultant product formula") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> r(-30, 30), c(-9, 9);
  for (int t = 0; t < 200; ++t) {
    Integer lc = 1 + rng() % 4;
    std::vector<Integer> roots{r(rng), r(rng), r(rng)};
    auto f = oracle::from_roots(lc, roots);
    std::vector<Integer> gv(1 + rng() % 5);
    for (auto& x : gv) x = c(rng);
    gv.back() = 1 + rng() % 3;
    IntegerPolynomial g(gv);
    CHECK(resultant(f, g) == oracle::product_resultant(lc, roots, g));
  }
}

TEST_CASE("roots") {
  CHECK(integer_nth_root(Integer(125), 3) == Integer(5));
  CHECK(!integer_nth_root(Integer(126), 3));
  CHECK(perfect_power_root(Integer(-32), 5) == Integer(-2));
  CHECK_THROWS_AS(perfect_power_root(Integer(-4), 2), Error);
  CHECK(!exact_power_root(Integer(-4), 2));
  CHECK(exact_power_root(Integer(0), 7) == Integer(0));
  CHECK(integer_roots(IntegerPolynomial::parse("x^3-3x^2+2x")) == std::vector<Integer>{0, 1, 2});
  CHECK(integer_roots(IntegerPolynomial::parse("x^2+1")).empty());
  CHECK(integer_roots(IntegerPolynomial::parse("2x^2-x-1")) == std::vector<Integer>{1});
  auto f = oracle::from_roots(3, {-7, 4, 4, 11});
  CHECK(integer_roots(f) == std::vector<Integer>{-7, 4, 11});
}
