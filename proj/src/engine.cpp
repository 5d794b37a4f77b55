#include "descent/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "descent/error.hpp"

namespace descent {

namespace {

bool is_prime_exponent(unsigned p) { return p >= 2 && mpz_probab_prime_p(Integer(p).get_mpz_t(), 25) > 0; }

void sort_by_magnitude(std::vector<Integer>& ds) {
  std::sort(ds.begin(), ds.end(), [](const Integer& a, const Integer& b) {
    const int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    return c != 0 ? c < 0 : a < b;
  });
}

TwistOutcome solve_one(const TwistEquation& t, const SolveOptions& o) {
  const std::string key = t.canonical_key();
  if (o.cache) {
    if (auto hit = o.cache->get(key); hit && cache_entry_covers(*hit, o.height)) {
      hit->twist = t;
      hit->diagnostics.push_back("cache hit");
      return *hit;
    }
  }

  TwistOutcome out;
  const bool quartic = t.kind == TwistKind::quartic_minus || t.kind == TwistKind::quartic_plus;
  switch (o.backend) {
    case Backend::bounded:
      out = solve_twist_bounded(t, o.height);
      break;
    case Backend::external:
      if (quartic) {
        out = *solve_twist_exact(t, o.pell);
        out.diagnostics.push_back("adapter protocol has no quartic request; solved exactly");
      } else {
        if (!o.adapter) throw Error(Errc::AdapterUnavailable, "external backend selected without an adapter");
        out = solve_twist_external(t, *o.adapter);
      }
      break;
    case Backend::exact:
    case Backend::automatic:
      if (auto exact = solve_twist_exact(t, o.pell)) {
        out = std::move(*exact);
      } else {
        out = solve_twist_bounded(t, o.height);
        out.diagnostics.push_back("no exact backend for " + std::string(twist_kind_name(t.kind)) +
                                  "; fell back to bounded search");
      }
      break;
  }
  finalize_candidates(out);
  if (o.cache && !out.skipped) o.cache->put(key, out);
  return out;
}

std::vector<TwistOutcome> solve_all(const std::vector<TwistEquation>& twists, const SolveOptions& o) {
  std::vector<TwistOutcome> results(twists.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(twists.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < twists.size(); ++i) results[i] = solve_one(twists[i], o);
    return results;
  }
  std::vector<std::exception_ptr> errors(twists.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < twists.size();) {
          try {
            results[i] = solve_one(twists[i], o);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

struct Assembly {
  std::vector<TwistEquation> twists;
  /// x-values that need no twist: roots of f*g and analytically settled cases.
  std::vector<std::pair<Integer, std::string>> extra_candidates;
};

void assemble(DescentReport& report, Assembly assembly, const SolveOptions& options) {
  report.twist_outcomes = solve_all(assembly.twists, options);

  std::map<Integer, std::string> source;
  report.complete = true;
  for (const auto& out : report.twist_outcomes) {
    report.complete = report.complete && out.complete;
    if (out.backend == "bounded")
      report.bounded_height = std::max(report.bounded_height.value_or(0), out.height);
    for (const auto& x : out.x_candidates) source.emplace(x, "d=" + out.twist.d.get_str());
  }
  for (auto& [x, why] : assembly.extra_candidates) source.emplace(x, why);

  std::vector<Integer> xs;
  for (const auto& [x, why] : source) xs.push_back(x);
  report.points = lift_and_verify(xs, report.problem);
  for (const auto& pt : report.points) report.point_sources.push_back(source.at(pt.x));

  if (report.bound) {
    const auto positive = report.positive_points().size();
    if (Integer(static_cast<unsigned long>(positive)) > *report.bound)
      report.notes.push_back("point count " + std::to_string(positive) + " exceeds the theoretical bound");
  }
  for (const auto& out : report.twist_outcomes)
    if (out.skipped) report.notes.push_back("twist d=" + out.twist.d.get_str() + " skipped");
}

void add_roots(Assembly& a, const CurveProblem& problem) {
  for (const auto* poly : {&problem.f, &problem.g})
    for (const auto& r : integer_roots(*poly)) a.extra_candidates.emplace_back(r, "root");
}

Integer nonzero_resultant(const IntegerPolynomial& f, const IntegerPolynomial& g) {
  Integer r = resultant(f, g);
  if (r == 0) throw Error(Errc::CommonRoots, f.to_string() + " and " + g.to_string() + " share a root");
  return abs(r);
}

void require_nonzero(const CurveProblem& problem) {
  if (problem.f.is_zero() || problem.g.is_zero()) throw Error(Errc::ZeroPolynomial, "f and g must be nonzero");
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::bounded: return "bounded";
    case Backend::exact: return "exact";
    case Backend::external: return "external";
    case Backend::automatic: return "auto";
  }
  return "unknown";
}

std::string_view pipeline_name(Pipeline p) noexcept {
  switch (p) {
    case Pipeline::superelliptic: return "superelliptic";
    case Pipeline::hyperelliptic: return "hyperelliptic";
    case Pipeline::quartic_minus: return "quartic_minus";
    case Pipeline::quartic_plus: return "quartic_plus";
  }
  return "unknown";
}

std::optional<Integer> NormalizedProblem::back_map(const Integer& y_prime) const {
  if (!mpz_divisible_p(y_prime.get_mpz_t(), scale.get_mpz_t())) return std::nullopt;
  return Integer(y_prime / scale);
}

NormalizedProblem normalize(const CurveProblem& problem) {
  if (problem.D == 0) throw Error(Errc::ZeroScale, "D must be nonzero");
  NormalizedProblem n{problem, problem.D};
  if (problem.D != 1) {
    n.problem.g = pow(problem.D, problem.p - 1) * problem.g;
    n.problem.D = 1;
  }
  return n;
}

std::vector<CurvePoint> DescentReport::positive_points() const {
  std::vector<CurvePoint> out;
  for (const auto& pt : points)
    if (pt.y > 0) out.push_back(pt);
  return out;
}

std::vector<CurvePoint> lift_and_verify(const std::vector<Integer>& x_candidates, const CurveProblem& problem) {
  if (problem.D == 0) throw Error(Errc::ZeroScale, "D must be nonzero");
  std::vector<Integer> xs = x_candidates;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<CurvePoint> points;
  for (const auto& x : xs) {
    const Integer v = problem.f.evaluate(x) * problem.g.evaluate(x);
    if (!mpz_divisible_p(v.get_mpz_t(), problem.D.get_mpz_t())) continue;
    const Integer q = v / problem.D;
    auto y = exact_power_root(q, problem.p);
    if (!y) continue;
    if (problem.D * pow(*y, problem.p) != v) throw Error(Errc::InvalidArgument, "lift verification failed");
    points.push_back({x, *y});
  }
  return points;
}

std::optional<std::pair<Integer, Integer>> match_binomial(const IntegerPolynomial& f, unsigned p) {
  if (f.degree() != static_cast<int>(p)) return std::nullopt;
  for (unsigned k = 1; k < p; ++k)
    if (f.coeff(k) != 0) return std::nullopt;
  if (f.coeff(0) == 0) return std::nullopt;
  return std::make_pair(f.coeff(p), f.coeff(0));
}

std::optional<BinomialProductShape> match_binomial_product(const CurveProblem& problem) {
  if (problem.p < 3) return std::nullopt;
  auto fb = match_binomial(problem.f, problem.p);
  if (!fb || abs(fb->second) != 1) return std::nullopt;
  const int m = problem.g.degree();
  if (m < 2 || problem.g.coeff(0) == 0) return std::nullopt;
  for (int k = 1; k < m; ++k)
    if (problem.g.coeff(static_cast<unsigned>(k)) != 0) return std::nullopt;
  return BinomialProductShape{fb->first, sgn(fb->second), problem.g.leading(), static_cast<unsigned>(m),
                              problem.g.coeff(0)};
}

Integer binomial_product_closed_form(const BinomialProductShape& s, unsigned p) {
  return -pow(s.alpha, s.m) * pow(s.beta, p) - s.s * pow(s.gamma, p);
}

IntegerPolynomial quartic_factor(QuarticVariant variant) {
  return IntegerPolynomial{variant == QuarticVariant::minus ? -1 : 1, 0, 0, 0, 1};
}

std::optional<Integer> theoretical_bound(const CurveProblem& problem) {
  if (problem.D != 1 || problem.f.is_zero() || problem.g.is_zero()) return std::nullopt;
  if (problem.family_hint != FamilyHint::none) {
    const Integer n = abs(resultant(problem.f, problem.g));
    if (n == 0) return std::nullopt;
    const unsigned extra = problem.family_hint == FamilyHint::quartic_minus ? 2 : 1;
    return pow(Integer(2), omega(factor(n)) + extra);
  }
  if (match_binomial_product(problem)) {
    const Integer c = abs(resultant(problem.f, problem.g));
    if (c == 0) return std::nullopt;
    return 2 * tau(factor(c));
  }
  return std::nullopt;
}

DescentReport solve_superelliptic(const CurveProblem& problem, const SolveOptions& options) {
  require_nonzero(problem);
  if (problem.p < 3 || !is_prime_exponent(problem.p))
    throw Error(Errc::InvalidArgument, "superelliptic exponent must be an odd prime");
  const NormalizedProblem norm = normalize(problem);
  auto ab = match_binomial(norm.problem.f, problem.p);
  if (!ab) throw Error(Errc::NotBinomial, "f = " + problem.f.to_string() + " is not A x^p + B");

  DescentReport report;
  report.problem = problem;
  report.pipeline = Pipeline::superelliptic;
  report.c = nonzero_resultant(norm.problem.f, norm.problem.g);
  report.divisor_set = pfree_twist_coefficients(factor(report.c, options.factor_budget), problem.p);

  Assembly a;
  for (const auto& d : report.divisor_set) a.twists.push_back(build_thue_twist(ab->first, ab->second, problem.p, d));
  add_roots(a, problem);

  report.bound = theoretical_bound(problem);
  if (auto shape = match_binomial_product(problem)) {
    report.closed_form_c = binomial_product_closed_form(*shape, problem.p);
    if (abs(*report.closed_form_c) != report.c)
      report.notes.push_back("closed-form constant " + report.closed_form_c->get_str() +
                             " differs from |res(f,g)| = " + report.c.get_str());
  }
  assemble(report, std::move(a), options);
  return report;
}

DescentReport solve_hyperelliptic(const CurveProblem& problem, const SolveOptions& options) {
  require_nonzero(problem);
  if (problem.p != 2) throw Error(Errc::InvalidArgument, "hyperelliptic pipeline needs p = 2");
  const NormalizedProblem norm = normalize(problem);
  const IntegerPolynomial& f = norm.problem.f;

  bool elliptic = false;
  if (f.degree() == 3) {
    if (discriminant_resultant(f) == 0) throw Error(Errc::SingularCurve, f.to_string() + " has a repeated root");
    elliptic = f.is_monic();
  } else if (f.degree() != 4) {
    throw Error(Errc::UnsupportedShape, "f must be a cubic or a quartic, got " + f.to_string());
  }

  DescentReport report;
  report.problem = problem;
  report.pipeline = Pipeline::hyperelliptic;
  report.c = nonzero_resultant(f, norm.problem.g);
  report.divisor_set = squarefree_divisors(factor(report.c, options.factor_budget), true);
  sort_by_magnitude(report.divisor_set);

  Assembly a;
  for (const auto& d : report.divisor_set)
    a.twists.push_back(elliptic ? build_elliptic_twist(f, d) : build_generic_twist(f, d));
  add_roots(a, problem);
  if (!elliptic) report.notes.push_back("f is not a monic cubic; twists use the form d*y^2 = f(x)");
  assemble(report, std::move(a), options);
  return report;
}

DescentReport solve_quartic_family(const CurveProblem& problem, const SolveOptions& options) {
  require_nonzero(problem);
  if (problem.family_hint == FamilyHint::none)
    throw Error(Errc::InvalidArgument, "quartic pipeline needs a minus/plus family hint");
  const QuarticVariant variant =
      problem.family_hint == FamilyHint::quartic_minus ? QuarticVariant::minus : QuarticVariant::plus;
  if (problem.p != 2 || problem.f != quartic_factor(variant))
    throw Error(Errc::UnsupportedShape, "quartic family needs p = 2 and f = " + quartic_factor(variant).to_string());
  const NormalizedProblem norm = normalize(problem);

  DescentReport report;
  report.problem = problem;
  report.pipeline = variant == QuarticVariant::minus ? Pipeline::quartic_minus : Pipeline::quartic_plus;
  report.c = nonzero_resultant(norm.problem.f, norm.problem.g);
  report.divisor_set = squarefree_divisors(factor(report.c, options.factor_budget), false);

  Assembly a;
  for (const auto& d : report.divisor_set) a.twists.push_back(build_quartic_twist(variant, d));
  // Negative d: x^4 + 1 = d y^2 is impossible, and x^4 - 1 = d y^2 leaves
  // |x| <= 1 only (x = 0 through d = -1).
  if (variant == QuarticVariant::minus)
    for (long x : {-1L, 0L, 1L}) a.extra_candidates.emplace_back(Integer(x), "analytic");
  add_roots(a, problem);

  report.bound = theoretical_bound(problem);
  assemble(report, std::move(a), options);
  return report;
}

DescentReport solve_quartic_family(const IntegerPolynomial& g, QuarticVariant variant, const SolveOptions& options) {
  CurveProblem problem;
  problem.p = 2;
  problem.f = quartic_factor(variant);
  problem.g = g;
  problem.family_hint = variant == QuarticVariant::minus ? FamilyHint::quartic_minus : FamilyHint::quartic_plus;
  return solve_quartic_family(problem, options);
}

DescentReport solve(const CurveProblem& problem, const SolveOptions& options) {
  if (problem.family_hint != FamilyHint::none) return solve_quartic_family(problem, options);
  if (problem.p >= 3) return solve_superelliptic(problem, options);
  return solve_hyperelliptic(problem, options);
}

}  // namespace descent
