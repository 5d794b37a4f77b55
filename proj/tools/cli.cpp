#include "cli.hpp"

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "descent/engine.hpp"
#include "descent/error.hpp"
#include "descent/pell.hpp"
#include "descent/report.hpp"
#include "descent/tables.hpp"
#include "json.hpp"

namespace descent::cli {

namespace {

struct RunConfig {
  unsigned long height = 10000;
  std::string backend = "auto";
  std::string adapter_path;
  std::string cache_path;
  std::string format = "text";
  std::size_t digit_budget = 100000;
  double timeout_seconds = 0;
  unsigned threads = 1;
};

struct CurveArgs {
  std::string f, g;
  std::string D = "1";
  unsigned p = 3;
  std::string variant = "minus";
};

struct TableArgs {
  std::string family = "x2kx1";
  long kmin = 2;
  long kmax = 1000;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--height", cfg.height, "bounded-search height")->check(CLI::PositiveNumber);
  sub->add_option("--backend", cfg.backend, "twist backend")->check(CLI::IsMember({"bounded", "exact", "external", "auto"}));
  sub->add_option("--adapter", cfg.adapter_path, "external solver executable (default $DESCENT_ADAPTER)");
  sub->add_option("--cache", cfg.cache_path, "persistent twist cache file");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--digit-budget", cfg.digit_budget, "largest Pell fundamental to build, in digits")
      ->check(CLI::Range(std::size_t{10}, std::size_t{1} << 40));
  sub->add_option("--timeout", cfg.timeout_seconds, "adapter timeout in seconds")->check(CLI::NonNegativeNumber);
  sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
}

Backend parse_backend(const std::string& s) {
  if (s == "bounded") return Backend::bounded;
  if (s == "exact") return Backend::exact;
  if (s == "external") return Backend::external;
  return Backend::automatic;
}

SolveOptions make_options(const RunConfig& cfg, std::unique_ptr<TwistCache>& cache, std::ostream& err) {
  SolveOptions o;
  o.height = cfg.height;
  o.backend = parse_backend(cfg.backend);
  o.pell.digit_budget = cfg.digit_budget;
  o.threads = cfg.threads;
  std::string adapter = cfg.adapter_path;
  if (adapter.empty())
    if (const char* env = std::getenv(kAdapterEnvVar)) adapter = env;
  if (!adapter.empty()) {
    AdapterConfig a;
    a.executable = adapter;
    if (cfg.timeout_seconds > 0) a.timeout_seconds = cfg.timeout_seconds;
    o.adapter = a;
  }
  if (!cfg.cache_path.empty()) {
    cache = std::make_unique<TwistCache>(cfg.cache_path);
    for (const auto& w : cache->warnings()) err << "warning: " << w << "\n";
    o.cache = cache.get();
  }
  return o;
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::FactorizationTimeout:
    case Errc::DigitBudgetExceeded:
    case Errc::AdapterUnavailable:
    case Errc::AdapterProtocolError:
    case Errc::AdapterTimeout:
    case Errc::CacheCorrupt:
      return false;
    default:
      return true;
  }
}

std::string pell_output(const Integer& d, const RunConfig& cfg) {
  PellLimits limits{cfg.digit_budget};
  nlohmann::ordered_json j;
  j["d"] = d.get_str();
  const auto cf = continued_fraction_sqrt(d);
  j["a0"] = cf.a0.get_str();
  nlohmann::ordered_json period = nlohmann::ordered_json::array();
  for (const auto& a : cf.period) period.push_back(a.get_str());
  j["period"] = period;
  auto put = [&](const char* key, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() != Errc::DigitBudgetExceeded && e.code() != Errc::FactorizationTimeout) throw;
      j[key] = "skipped (digit budget)";
    }
  };
  put("fundamental", [&] {
    auto f = pell_fundamental(d, limits);
    j["fundamental"] = {f.x.get_str(), f.y.get_str()};
  });
  put("negative_fundamental", [&] {
    auto n = negative_pell_fundamental(d, limits);
    j["negative_fundamental"] = n ? nlohmann::ordered_json{n->x.get_str(), n->y.get_str()} : nlohmann::ordered_json(nullptr);
  });
  auto sols = [](const QuarticPellSolutions& q) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [x, y] : q.solutions) a.push_back({x.get_str(), y.get_str()});
    return a;
  };
  put("quartic_minus", [&] { j["quartic_minus"] = sols(solve_quartic_minus(d, limits)); });
  put("quartic_plus", [&] { j["quartic_plus"] = sols(solve_quartic_plus(d, limits)); });

  if (cfg.format == "json") return j.dump() + "\n";
  std::string s;
  s += "sqrt(" + d.get_str() + ") = [" + j["a0"].get<std::string>() + "; (";
  for (std::size_t i = 0; i < cf.period.size(); ++i) s += (i ? "," : "") + cf.period[i].get_str();
  s += ")]  period " + std::to_string(cf.period.size()) + "\n";
  for (const char* key : {"fundamental", "negative_fundamental", "quartic_minus", "quartic_plus"})
    s += std::string(key) + ": " + j[key].dump() + "\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer points on y^p = f(x) g(x) by descent to twists", "descent"};
  app.require_subcommand(1);
  RunConfig cfg;
  CurveArgs curve;
  TableArgs table;
  std::string pell_d;

  auto* super = app.add_subcommand("super", "y^p = (A x^p + B) g(x), p an odd prime");
  super->add_option("--p", curve.p, "prime exponent")->check(CLI::Range(3u, 1000u));
  super->add_option("--f", curve.f, "A x^p + B")->required();
  super->add_option("--g", curve.g, "cofactor g(x)")->required();
  super->add_option("--D", curve.D, "scale D in D y^p = f g");
  add_common(super, cfg);

  auto* hyper = app.add_subcommand("hyper", "y^2 = f(x) g(x) with f a cubic or quartic");
  hyper->add_option("--f", curve.f, "cubic or quartic f(x)")->required();
  hyper->add_option("--g", curve.g, "cofactor g(x)")->required();
  hyper->add_option("--D", curve.D, "scale D in D y^2 = f g");
  add_common(hyper, cfg);

  auto* quartic = app.add_subcommand("quartic", "y^2 = (x^4 -+ 1) g(x)");
  quartic->add_option("--variant", curve.variant, "minus: x^4-1, plus: x^4+1")->check(CLI::IsMember({"minus", "plus"}));
  quartic->add_option("--g", curve.g, "cofactor g(x)")->required();
  add_common(quartic, cfg);

  auto* tables = app.add_subcommand("tables", "tabulate y^2 = (x^4-1) g_k(x) over a range of k");
  tables->add_option("--family", table.family, "x2kx1 | x3kx21 | x3kx1")
      ->check(CLI::IsMember({"x2kx1", "x3kx21", "x3kx1"}));
  tables->add_option("--kmin", table.kmin, "first k (default 2)");
  tables->add_option("--kmax", table.kmax, "last k")->required();
  add_common(tables, cfg);

  auto* pell = app.add_subcommand("pell", "continued fraction, Pell fundamentals and d y^2 = x^4 -+ 1");
  pell->add_option("--d", pell_d, "non-square d >= 2")->required();
  add_common(pell, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto format = *parse_report_format(cfg.format);
  try {
    std::unique_ptr<TwistCache> cache;
    SolveOptions options = make_options(cfg, cache, err);

    if (*pell) {
      out << pell_output(parse_integer(pell_d), cfg);
      return kExitOk;
    }
    if (*tables) {
      TableOptions t;
      t.kmin = table.kmin;
      t.kmax = table.kmax;
      t.solve = options;
      t.threads = cfg.threads;
      const auto family = *parse_table_family(table.family);
      out << format_table(family, reproduce_table(family, t), format);
      return kExitOk;
    }

    CurveProblem problem;
    problem.g = IntegerPolynomial::parse(curve.g);
    problem.D = parse_integer(curve.D);
    if (*super) {
      problem.p = curve.p;
      problem.f = IntegerPolynomial::parse(curve.f);
    } else if (*hyper) {
      problem.p = 2;
      problem.f = IntegerPolynomial::parse(curve.f);
    } else {
      const auto variant = curve.variant == "minus" ? QuarticVariant::minus : QuarticVariant::plus;
      problem.p = 2;
      problem.f = quartic_factor(variant);
      problem.family_hint = variant == QuarticVariant::minus ? FamilyHint::quartic_minus : FamilyHint::quartic_plus;
    }
    const DescentReport report = solve(problem, options);
    out << emit_report(report, format);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace descent::cli
