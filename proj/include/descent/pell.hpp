#ifndef DESCENT_PELL_HPP
#define DESCENT_PELL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "descent/arith.hpp"
#include "descent/integer.hpp"

namespace descent {

/// sqrt(d) = [a0; period...] with minimal period.
template <class Int>
struct SqrtExpansion {
  Int a0{};
  std::vector<Int> period;
};

/// Quadratic-surd recurrence P' = aQ - P, Q' = (d - P'^2)/Q. Int is either a
/// machine unsigned type (d < 2^62) or Integer.
template <class Int>
SqrtExpansion<Int> expand_sqrt(const Int& d);

/// Throws PerfectSquareInput for square d.
SqrtExpansion<Integer> continued_fraction_sqrt(const Integer& d);

/// Fundamental solution of x^2 - d y^2 = equation_sign.
struct PellFundamental {
  Integer d;
  int equation_sign = 1;
  Integer x;
  Integer y;
  std::size_t cf_period = 0;
};

/// Guards against fundamental solutions too large to materialize.
struct PellLimits {
  std::size_t digit_budget = 100000;
};

PellFundamental pell_fundamental(const Integer& d, const PellLimits& limits = {});
std::optional<PellFundamental> negative_pell_fundamental(const Integer& d, const PellLimits& limits = {});

/// s_n = (mu^n + lambda^n)/2 with mu = v0 + u0 sqrt(d), mu*lambda = -1, by
/// the recurrence s_{n+1} = 2 v0 s_n + s_{n-1}.
Integer lucas_s(unsigned long n, const Integer& v0);

/// Same sequence by index doubling; O(log n) multiplications.
Integer lucas_s_fast(const Integer& n, const Integer& v0);

enum class QuarticVariant { minus, plus };

/// Positive solutions of d*y^2 = x^4 - 1 (minus) or d*y^2 = x^4 + 1 (plus).
struct QuarticPellSolutions {
  Integer d;
  QuarticVariant variant = QuarticVariant::minus;
  std::vector<std::pair<Integer, Integer>> solutions;
  bool complete = true;
};

/// Candidates x^2 = u and x^2 = 2u^2 - 1 from the fundamental solution u of
/// X^2 - dY^2 = 1. Small-prime residue tests settle most d without building u;
/// DigitBudgetExceeded is thrown only when u must be materialized.
QuarticPellSolutions solve_quartic_minus(const Integer& d, const PellLimits& limits = {});

/// From the norm -1 fundamental (v0, u0): x^2 = s_A with A the squarefree part
/// of v0, followed by an exact check of d*y^2 = x^4 + 1.
QuarticPellSolutions solve_quartic_plus(const Integer& d, const PellLimits& limits = {},
                                        const FactorBudget& budget = {});

/// Which of sqrt(u), sqrt(2u^2-1) are integral for the fundamental u of
/// X^2 - dY^2 = 1. Exposed for diagnostics and tests.
std::pair<bool, bool> quartic_minus_integrality(const Integer& d, const PellLimits& limits = {});

}  // namespace descent

#endif  // DESCENT_PELL_HPP
