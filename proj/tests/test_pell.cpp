#include "descent/error.hpp"
#include "descent/pell.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descent;

TEST_CASE("continued fractions") {
  auto e = continued_fraction_sqrt(Integer(14));
  CHECK(e.a0 == 3);
  CHECK(e.period == std::vector<Integer>{1, 2, 1, 6});
  CHECK(continued_fraction_sqrt(Integer(2)).period == std::vector<Integer>{2});
  CHECK(continued_fraction_sqrt(Integer(13)).period.size() == 5);
  CHECK_THROWS_AS(continued_fraction_sqrt(Integer(49)), Error);

  // u64 and big-integer paths agree
  for (unsigned long d = 2; d < 400; ++d) {
    if (oracle::is_square(Integer(d))) continue;
    auto a = expand_sqrt<std::uint64_t>(d);
    auto b = expand_sqrt<Integer>(Integer(d));
    REQUIRE(a.period.size() == b.period.size());
    for (std::size_t i = 0; i < a.period.size(); ++i) CHECK(Integer(a.period[i]) == b.period[i]);
  }
  Integer big = (Integer(1) << 70) + 1;
  auto eb = continued_fraction_sqrt(big);
  CHECK(eb.a0 == Integer(1) << 35);
}

TEST_CASE("Pell fundamentals against brute force") {
  for (long d = 2; d <= 60; ++d) {
    if (oracle::is_square(Integer(d)) || d == 61) continue;
    auto scan = oracle::brute_pell(d, 100000000);
    REQUIRE(scan.found);
    auto f = pell_fundamental(Integer(d));
    CHECK(f.x == Integer(std::to_string(scan.x)));
    CHECK(f.y == Integer(std::to_string(scan.y)));
    auto n = negative_pell_fundamental(Integer(d));
    CHECK(n.has_value() == scan.negative.has_value());
    CHECK(n.has_value() == (f.cf_period % 2 == 1));
    if (n) {
      CHECK(n->x == Integer(std::to_string(scan.negative->first)));
      CHECK(n->y == Integer(std::to_string(scan.negative->second)));
    }
  }
  auto f61 = pell_fundamental(Integer(61));
  CHECK(f61.x == Integer("1766319049"));
  CHECK(f61.y == Integer("226153980"));
  CHECK(f61.x * f61.x - 61 * f61.y * f61.y == 1);
}

TEST_CASE("digit budget") {
  PellLimits small{10};
  CHECK_THROWS_AS(pell_fundamental(Integer(421), small), Error);
  try {
    pell_fundamental(Integer(421), small);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DigitBudgetExceeded);
  }
  CHECK_NOTHROW(pell_fundamental(Integer(421)));
}

TEST_CASE("Lucas sequence") {
  for (long v0 : {1L, 2L, 3L, 7L, 41L})
    for (unsigned long n = 0; n < 40; ++n) CHECK(lucas_s(n, Integer(v0)) == lucas_s_fast(Integer(n), Integer(v0)));
  // mu = 1 + sqrt 2: s_n = 1, 1, 3, 7, 17, 41
  CHECK(lucas_s(5, Integer(1)) == 41);
}

TEST_CASE("quartic solvers against exhaustive search") {
  for (long d = 2; d <= 150; ++d) {
    if (!oracle::squarefree(d)) continue;
    for (auto variant : {QuarticVariant::minus, QuarticVariant::plus}) {
      const int sign = variant == QuarticVariant::minus ? -1 : 1;
      auto brute = oracle::brute_quartic(d, sign, 1000);
      if (sign < 0) std::erase_if(brute, [](const auto& s) { return s.first == 1; });
      auto got = variant == QuarticVariant::minus ? solve_quartic_minus(Integer(d)) : solve_quartic_plus(Integer(d));
      std::vector<std::pair<Integer, Integer>> small;
      for (const auto& s : got.solutions) {
        CHECK(d * s.second * s.second == s.first * s.first * s.first * s.first + sign);
        if (s.first <= 1000) small.push_back(s);
      }
      CHECK_MESSAGE(small == brute, "d=" << d << " sign=" << sign);
    }
  }
  auto [a, b] = quartic_minus_integrality(Integer(1785));
  CHECK(a);
  CHECK(b);
  auto s = solve_quartic_minus(Integer(1785));
  CHECK(s.solutions.size() == 2);
  CHECK(s.solutions[0].first == 13);
  CHECK(s.solutions[1].first == 239);
}
