#include <filesystem>
#include <random>

#include "descent/engine.hpp"
#include "descent/error.hpp"
#include "descent/report.hpp"
#include "descent/tables.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace descent;

namespace {

CurveProblem curve(unsigned p, const char* f, const char* g, long D = 1) {
  CurveProblem c;
  c.p = p;
  c.f = IntegerPolynomial::parse(f);
  c.g = IntegerPolynomial::parse(g);
  c.D = D;
  return c;
}

std::vector<std::pair<long, long>> pts(const std::vector<CurvePoint>& v) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : v) out.emplace_back(p.x.get_si(), p.y.get_si());
  return out;
}

SolveOptions bounded(unsigned long h) {
  SolveOptions o;
  o.backend = Backend::bounded;
  o.height = h;
  return o;
}

}  // namespace

TEST_CASE("superelliptic examples") {
  auto r = solve(curve(3, "x^3+691", "x^2-17"));
  CHECK(pts(r.points) == std::vector<std::pair<long, long>>{{13, 76}});
  CHECK(r.c == 472568);
  CHECK_FALSE(r.complete);
  CHECK(r.bounded_height == 10000ul);

  CHECK(pts(solve(curve(3, "x^3+625", "x+1")).points) ==
        std::vector<std::pair<long, long>>{{-10, 15}, {-1, 0}, {15, 40}});
  CHECK(pts(solve(curve(5, "x^5-724", "x+2")).points) == std::vector<std::pair<long, long>>{{-2, 0}, {5, 7}});
}

TEST_CASE("superelliptic input errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Parse;
  };
  CHECK(code([] { solve(curve(3, "x^3+x+1", "x+1")); }) == Errc::NotBinomial);
  CHECK(code([] { solve(curve(4, "x^4+1", "x+1")); }) == Errc::InvalidArgument);
  CHECK(code([] { solve(curve(3, "x^3+1", "x+1")); }) == Errc::CommonRoots);
  CHECK(code([] { solve(curve(3, "x^3+1", "[0]")); }) == Errc::ZeroPolynomial);
  CHECK(code([] { solve(curve(3, "x^3+2", "x+1", 0)); }) == Errc::ZeroScale);
  CHECK(code([] { solve(curve(2, "x^5+1", "x+3")); }) == Errc::UnsupportedShape);
  CHECK(code([] { solve(curve(2, "x^3-x^2", "x+3")); }) == Errc::SingularCurve);
}

TEST_CASE("hyperelliptic examples") {
  auto r = solve(curve(2, "x^3+x+1", "x^4+2x^3-3x^2+4x+4"), bounded(10000));
  CHECK(pts(r.positive_points()) == std::vector<std::pair<long, long>>{{-2, 12}, {-1, 2}, {0, 2}, {3, 62}});
  CHECK(r.divisor_set == std::vector<Integer>{-1, 1, -31, 31});
  CHECK(completeness_label(r) == "complete up to height 10000");

  auto g = oracle::from_roots(1, {-40, -4, 4, 7});
  CurveProblem v{2, IntegerPolynomial::parse("x^3-3x^2+2x"), g};
  CHECK(pts(solve(v, bounded(10000)).positive_points()) ==
        std::vector<std::pair<long, long>>{{-7, 2772}, {16, 20160}});
}

TEST_CASE("hyperelliptic via the fake adapter") {
  SolveOptions o;
  o.backend = Backend::external;
  o.adapter = AdapterConfig{FAKE_ADAPTER_PATH, {"--complete", "--height", "3000"}, 20};
  auto r = solve(curve(2, "x^3+x+1", "x^4+2x^3-3x^2+4x+4"), o);
  CHECK(pts(r.positive_points()) == std::vector<std::pair<long, long>>{{-2, 12}, {-1, 2}, {0, 2}, {3, 62}});
  CHECK(r.complete);
  CHECK(completeness_label(r) == "certified complete");
  o.adapter->args = {"--height", "3000"};
  CHECK_FALSE(solve(curve(2, "x^3+x+1", "x^4+2x^3-3x^2+4x+4"), o).complete);
}

TEST_CASE("scale normalization") {
  auto n = normalize(curve(3, "x^3+2", "x+1", 5));
  CHECK(n.problem.D == 1);
  CHECK(n.problem.g == IntegerPolynomial{25, 25});
  CHECK(n.back_map(Integer(10)) == Integer(2));
  CHECK(!n.back_map(Integer(11)));
  // 2 y^2 = (x^3 - x)(x + 3): compare with brute force
  auto c = curve(2, "x^3-x", "x+3", 2);
  auto r = solve(c, bounded(300));
  std::vector<std::pair<long, long>> want;
  for (const auto& [x, y] : oracle::brute_points(c.f, c.g, 2, 2, 300)) want.emplace_back(x.get_si(), y.get_si());
  CHECK(pts(r.points) == want);
}

TEST_CASE("quartic families") {
  auto r = solve_quartic_family(IntegerPolynomial::parse("x^2+65x+1"), QuarticVariant::minus);
  CHECK(pts(r.positive_points()) == std::vector<std::pair<long, long>>{{2, 45}, {5, 468}});
  CHECK(r.complete);
  REQUIRE(r.bound);
  CHECK(Integer(2) <= *r.bound);

  // x = 0 on y^2 = (x^4 - 1) g(x) needs g(0) <= 0
  auto z = solve_quartic_family(IntegerPolynomial::parse("x^2+3x-1"), QuarticVariant::minus);
  CHECK(pts(z.points).front() == std::pair<long, long>{-1, 0});
  bool has_origin = false;
  for (const auto& p : z.points) has_origin = has_origin || (p.x == 0 && p.y == 1);
  CHECK(has_origin);

  auto plus = solve_quartic_family(IntegerPolynomial::parse("x^3+1"), QuarticVariant::plus);
  CHECK(pts(plus.points) == std::vector<std::pair<long, long>>{{-1, 0}, {0, 1}, {1, 2}});
  CHECK(plus.complete);
}

TEST_CASE("quartic families match a bounded scan") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-12, 12);
  int tried = 0;
  for (int t = 0; t < 60; ++t) {
    IntegerPolynomial g{c(rng), c(rng), 1};
    for (auto variant : {QuarticVariant::minus, QuarticVariant::plus}) {
      const auto f = quartic_factor(variant);
      if (resultant(f, g) == 0) continue;
      ++tried;
      auto r = solve_quartic_family(g, variant);
      std::vector<std::pair<long, long>> want;
      for (const auto& [x, y] : oracle::brute_points(f, g, 2, 1, 400)) want.emplace_back(x.get_si(), y.get_si());
      std::vector<std::pair<long, long>> got;
      for (const auto& p : r.points)
        if (abs(p.x) <= 400) got.emplace_back(p.x.get_si(), p.y.get_si());
      CHECK_MESSAGE(got == want, g.to_string());
      CHECK(Integer(static_cast<unsigned long>(r.positive_points().size())) <= *r.bound);
    }
  }
  CHECK(tried > 50);
}

TEST_CASE("threads and cache give the same report") {
  auto c = curve(3, "x^3+691", "x^2-17");
  SolveOptions o = bounded(2000);
  auto serial = solve(c, o);
  o.threads = 4;
  auto parallel = solve(c, o);
  CHECK(emit_report(serial, ReportFormat::json) == emit_report(parallel, ReportFormat::json));

  const auto path = std::filesystem::temp_directory_path() / ("descent_engine_cache_" + std::to_string(::getpid()));
  std::filesystem::remove(path);
  {
    TwistCache cache(path);
    o.cache = &cache;
    auto first = solve(c, o);
    CHECK(cache.size() == first.twist_outcomes.size());
    auto second = solve(c, o);
    CHECK(pts(second.points) == pts(first.points));
    for (const auto& out : second.twist_outcomes) CHECK(out.diagnostics.back() == "cache hit");
    // a larger height is not covered by the cached bounded runs
    o.height = 2500;
    auto third = solve(c, o);
    for (const auto& out : third.twist_outcomes) CHECK(out.diagnostics.back() != "cache hit");
  }
  std::filesystem::remove(path);
}

TEST_CASE("report formats") {
  auto r = solve(curve(3, "x^3+625", "x+1"), bounded(100));
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["points"].size() == 3);
  CHECK(j["points"][0][0] == "-10");
  auto csv = emit_report(r, ReportFormat::csv);
  CHECK(csv.rfind("x,y,d_source,complete\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  auto text = emit_report(r, ReportFormat::text);
  CHECK(text.find("complete up to height 100") != std::string::npos);
}

TEST_CASE("tables") {
  TableOptions t;
  t.kmin = 2;
  t.kmax = 70;
  auto rows = reproduce_table(TableFamily::x2kx1, t);
  std::vector<long> ks;
  for (const auto& row : rows)
    if (!row.points.empty()) ks.push_back(row.k);
  CHECK(ks == std::vector<long>{5, 26, 65});
  CHECK(table_polynomial(TableFamily::x3kx21, 9) == IntegerPolynomial{1, 0, 9, 1});
  auto text = format_table(TableFamily::x2kx1, rows, ReportFormat::text);
  CHECK(text.find("65 | (2,45), (5,468)") != std::string::npos);
  t.threads = 3;
  auto rows3 = reproduce_table(TableFamily::x2kx1, t);
  CHECK(format_table(TableFamily::x2kx1, rows3, ReportFormat::json) ==
        format_table(TableFamily::x2kx1, rows, ReportFormat::json));
}
