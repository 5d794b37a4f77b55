// Independent references for the test suites (mostly brute force). Nothing here calls
// into the library's number theory; only Integer and IntegerPolynomial
// (as plain containers) are shared.
#ifndef DESCENT_TESTS_ORACLES_HPP
#define DESCENT_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "descent/algebra.hpp"

namespace oracle {

using descent::Integer;
using descent::IntegerPolynomial;

/// Sylvester determinant by Gaussian elimination over Q.
inline Integer sylvester_resultant(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  const int m = p.degree(), n = q.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(N));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = mpq_class(p.coeff(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = mpq_class(q.coeff(n - k));
  mpq_class det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < N; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num();
}

/// lc^deg(g) * prod g(r) for f = lc * prod (x - r).
inline Integer product_resultant(const Integer& lc, const std::vector<Integer>& roots, const IntegerPolynomial& g) {
  Integer r = 1;
  for (int i = 0; i < g.degree(); ++i) r *= lc;
  for (const auto& x : roots) r *= g.evaluate(x);
  return r;
}

inline IntegerPolynomial from_roots(const Integer& lc, const std::vector<Integer>& roots) {
  IntegerPolynomial f = IntegerPolynomial::constant(lc);
  for (const auto& r : roots) f = f * IntegerPolynomial(std::vector<Integer>{-r, 1});
  return f;
}

/// Distinct primes of |n| by trial division.
inline std::vector<long> distinct_primes(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool squarefree(long n) {
  if (n < 0) n = -n;
  for (long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return n != 0;
}

inline long divisor_count(long n) {
  if (n < 0) n = -n;
  long c = 0;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) ++c;
  return c;
}

inline bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

inline bool is_square_u128(unsigned __int128 n, std::uint64_t& root) {
  // Residue prefilter, then a floating estimate with exact correction.
  const unsigned r64 = static_cast<unsigned>(n & 63);
  if (!((0x0202021202030213ULL >> r64) & 1)) return false;
  long double s = std::sqrt(static_cast<long double>(n));
  auto x = static_cast<std::uint64_t>(s);
  while (static_cast<unsigned __int128>(x) * x > n) --x;
  while (static_cast<unsigned __int128>(x + 1) * (x + 1) <= n) ++x;
  root = x;
  return static_cast<unsigned __int128>(x) * x == n;
}

struct PellScan {
  std::uint64_t x = 0, y = 0;
  /// First solution of x^2 - d y^2 = -1 seen before (x, y), if any.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> negative;
  bool found = false;
};

/// Scans y = 1, 2, ... up to y_cap for x^2 - d y^2 = +1, recording any
/// x^2 - d y^2 = -1 met on the way (its y is always below the +1 fundamental).
inline PellScan brute_pell(std::uint64_t d, std::uint64_t y_cap) {
  PellScan s;
  std::uint64_t root;
  for (std::uint64_t y = 1; y <= y_cap; ++y) {
    const unsigned __int128 dy2 = static_cast<unsigned __int128>(d) * y * y;
    if (!s.negative && is_square_u128(dy2 - 1, root)) s.negative = {{root, y}};
    if (is_square_u128(dy2 + 1, root)) {
      s.x = root;
      s.y = y;
      s.found = true;
      return s;
    }
  }
  return s;
}

/// Fundamental solution of x^2 - d y^2 = 1 by the chakravala method.
inline std::pair<Integer, Integer> chakravala(long d) {
  long m0 = 1;
  while ((m0 + 1) * (m0 + 1) <= d) ++m0;
  if ((m0 + 1) * (m0 + 1) - d < d - m0 * m0) ++m0;
  Integer a = m0, b = 1, k = Integer(m0) * m0 - d;
  while (k != 1) {
    const long ak = Integer(abs(k)).get_si();
    long best = -1;
    Integer best_gap;
    for (long m = 1; m <= 2 * m0 + ak + 1; ++m) {
      if (Integer(a + b * m) % ak != 0) continue;
      Integer gap = abs(Integer(m) * m - d);
      if (best < 0 || gap < best_gap) {
        best = m;
        best_gap = gap;
      }
    }
    const Integer na = (a * best + d * b) / ak;
    const Integer nb = (a + b * best) / ak;
    k = (Integer(best) * best - d) / k;
    a = abs(na);
    b = abs(nb);
  }
  return {a, b};
}

/// Positive x <= xmax with d*y^2 = x^4 + sign for some integer y >= 0.
inline std::vector<std::pair<Integer, Integer>> brute_quartic(long d, int sign, long xmax) {
  std::vector<std::pair<Integer, Integer>> out;
  Integer v, q;
  for (long x = 1; x <= xmax; ++x) {
    v = Integer(x);
    v = v * v * v * v + sign;
    if (v % d != 0) continue;
    q = v / d;
    if (is_square(q)) out.emplace_back(Integer(x), Integer(sqrt(q)));
  }
  return out;
}

/// Every (x, y) with |x| <= h and D y^p = f(x) g(x). For even p only y >= 0.
inline std::vector<std::pair<Integer, Integer>> brute_points(const IntegerPolynomial& f, const IntegerPolynomial& g,
                                                             unsigned p, const Integer& D, long h) {
  std::vector<std::pair<Integer, Integer>> out;
  Integer v, q, r;
  for (long x = -h; x <= h; ++x) {
    v = f.evaluate(Integer(x)) * g.evaluate(Integer(x));
    if (v % D != 0) continue;
    q = v / D;
    const bool neg = q < 0;
    if (neg && p % 2 == 0) continue;
    Integer a = neg ? Integer(-q) : q;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), p) == 0) continue;
    out.emplace_back(Integer(x), neg ? Integer(-r) : r);
  }
  return out;
}

}  // namespace oracle

#endif  // DESCENT_TESTS_ORACLES_HPP
