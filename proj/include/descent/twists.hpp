#ifndef DESCENT_TWISTS_HPP
#define DESCENT_TWISTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/algebra.hpp"
#include "descent/integer.hpp"
#include "descent/pell.hpp"

namespace descent {

enum class TwistKind { elliptic_cubic, generic_dsquare, binomial_thue, quartic_minus, quartic_plus };

std::string_view twist_kind_name(TwistKind kind) noexcept;
std::optional<TwistKind> parse_twist_kind(std::string_view name) noexcept;

/// Short Weierstrass-style model y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
  Integer a2, a4, a6;
};

/// One descended equation d*y^p = f(x), tagged with its coefficient d.
///
/// The direct form always lives in `f` (for Thue twists f = A x^p + B, for the
/// quartic kinds f = x^4 -+ 1). Elliptic twists also carry the model E_d.
struct TwistEquation {
  TwistKind kind = TwistKind::generic_dsquare;
  Integer d = 1;
  unsigned p = 2;
  IntegerPolynomial f;
  std::optional<WeierstrassModel> model;
  Integer thue_a = 0, thue_b = 0;

  /// Canonical one-line JSON used both as adapter request and cache key.
  std::string canonical_key() const;
};

/// E_d : y^2 = x^3 + A d x^2 + B d^2 x + C d^3 for monic cubic f = x^3+Ax^2+Bx+C.
/// Throws NotMonicCubic, SingularCurve.
TwistEquation build_elliptic_twist(const IntegerPolynomial& f, const Integer& d);
TwistEquation build_generic_twist(const IntegerPolynomial& f, const Integer& d);
/// d*y^p = A x^p + B
TwistEquation build_thue_twist(const Integer& A, const Integer& B, unsigned p, const Integer& d);
TwistEquation build_quartic_twist(QuarticVariant variant, const Integer& d);

/// Is there an integer y with d*y^p = f(x)?
bool satisfies_direct_form(const TwistEquation& t, const Integer& x);

struct TwistOutcome {
  TwistEquation twist;
  /// Curve-level x values, ascending, each satisfying the direct form.
  std::vector<Integer> x_candidates;
  bool complete = false;
  bool skipped = false;
  std::string backend;
  /// Search height for the bounded backend; 0 otherwise.
  unsigned long height = 0;
  std::vector<std::string> diagnostics;
};

/// Exhaustive scan of the direct form over |x| <= height. Never complete.
TwistOutcome solve_twist_bounded(const TwistEquation& t, unsigned long height);

/// Quartic kinds through the Pell solvers; nullopt for kinds without an exact
/// backend. DigitBudgetExceeded / FactorizationTimeout become skipped outcomes.
std::optional<TwistOutcome> solve_twist_exact(const TwistEquation& t, const PellLimits& limits = {});

/// Sorts, dedups and keeps only x satisfying the direct form.
void finalize_candidates(TwistOutcome& outcome);

}  // namespace descent

#endif  // DESCENT_TWISTS_HPP
