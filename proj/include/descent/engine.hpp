#ifndef DESCENT_ENGINE_HPP
#define DESCENT_ENGINE_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "descent/adapter.hpp"
#include "descent/algebra.hpp"
#include "descent/arith.hpp"
#include "descent/cache.hpp"
#include "descent/pell.hpp"
#include "descent/twists.hpp"

namespace descent {

enum class FamilyHint { none, quartic_minus, quartic_plus };

/// D * y^p = f(x) * g(x)
struct CurveProblem {
  unsigned p = 2;
  IntegerPolynomial f;
  IntegerPolynomial g;
  Integer D = 1;
  FamilyHint family_hint = FamilyHint::none;
};

/// Integer point. For even p, y >= 0; for odd p y carries its sign.
struct CurvePoint {
  Integer x;
  Integer y;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// y'^p = f(x) * (D^{p-1} g(x)) with y' = D y.
struct NormalizedProblem {
  CurveProblem problem;
  Integer scale = 1;

  /// y = y'/scale, or nullopt when scale does not divide y'.
  std::optional<Integer> back_map(const Integer& y_prime) const;
};

NormalizedProblem normalize(const CurveProblem& problem);

enum class Backend { bounded, exact, external, automatic };
enum class Pipeline { superelliptic, hyperelliptic, quartic_minus, quartic_plus };

std::string_view backend_name(Backend b) noexcept;
std::string_view pipeline_name(Pipeline p) noexcept;

struct SolveOptions {
  unsigned long height = 10000;
  Backend backend = Backend::automatic;
  std::optional<AdapterConfig> adapter;
  TwistCache* cache = nullptr;
  PellLimits pell;
  FactorBudget factor_budget;
  /// Worker threads for twist solving; results are merged in divisor order.
  unsigned threads = 1;
};

struct DescentReport {
  CurveProblem problem;
  Pipeline pipeline = Pipeline::hyperelliptic;
  /// |resultant| driving the divisor enumeration (c, or N for the quartic families).
  Integer c;
  std::vector<Integer> divisor_set;
  std::vector<TwistOutcome> twist_outcomes;
  std::vector<CurvePoint> points;
  /// Parallel to points: the twist coefficient (or "root"/"analytic") that
  /// first produced the x-value.
  std::vector<std::string> point_sources;
  bool complete = false;
  std::optional<Integer> bound;
  /// Largest bounded-search height used by any twist, when one was used.
  std::optional<unsigned long> bounded_height;
  /// Closed-form constant -alpha^m beta^p -+ gamma^p for the binomial-product family.
  std::optional<Integer> closed_form_c;
  std::vector<std::string> notes;

  /// Points with y > 0.
  std::vector<CurvePoint> positive_points() const;
};

/// Exact substitution into D y^p = f(x) g(x); deduplicated and sorted by x.
std::vector<CurvePoint> lift_and_verify(const std::vector<Integer>& x_candidates, const CurveProblem& problem);

/// f = alpha x^p + s (s = +-1), g = gamma x^m + beta with m >= 2.
struct BinomialProductShape {
  Integer alpha;
  int s = 1;
  Integer gamma;
  unsigned m = 0;
  Integer beta;
};

std::optional<BinomialProductShape> match_binomial_product(const CurveProblem& problem);

/// -alpha^m beta^p - s gamma^p
Integer binomial_product_closed_form(const BinomialProductShape& shape, unsigned p);

/// 2 tau(|res(f,g)|) for the binomial-product family, 2^(omega(N)+2) and
/// 2^(omega(N)+1) for the x^4 -+ 1 families; nullopt otherwise.
std::optional<Integer> theoretical_bound(const CurveProblem& problem);

/// f = A x^p + B with A, B nonzero.
std::optional<std::pair<Integer, Integer>> match_binomial(const IntegerPolynomial& f, unsigned p);

DescentReport solve_superelliptic(const CurveProblem& problem, const SolveOptions& options = {});
DescentReport solve_hyperelliptic(const CurveProblem& problem, const SolveOptions& options = {});
DescentReport solve_quartic_family(const IntegerPolynomial& g, QuarticVariant variant,
                                   const SolveOptions& options = {});
DescentReport solve_quartic_family(const CurveProblem& problem, const SolveOptions& options = {});

/// Dispatches on family_hint and p.
DescentReport solve(const CurveProblem& problem, const SolveOptions& options = {});

/// x^4 - 1 or x^4 + 1
IntegerPolynomial quartic_factor(QuarticVariant variant);

}  // namespace descent

#endif  // DESCENT_ENGINE_HPP
