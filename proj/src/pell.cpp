#include "descent/pell.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "descent/algebra.hpp"
#include "descent/error.hpp"

namespace descent {

namespace {

using u64 = std::uint64_t;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer isqrt(const Integer& n) { return sqrt(n); }

double log10_plus_one(u64 a) { return std::log10(static_cast<double>(a) + 1.0); }

double log10_plus_one(const Integer& a) {
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  if (bits < 60) return std::log10(a.get_d() + 1.0);
  return static_cast<double>(bits) * 0.30103;
}

void mul_add(Integer& acc, const Integer& prev, u64 a) {
  // acc = a * prev + acc, with acc holding h_{i-2} on entry
  mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(a));
}

void mul_add(Integer& acc, const Integer& prev, const Integer& a) { acc += a * prev; }

template <class Int>
const Int& partial_quotient(const SqrtExpansion<Int>& e, std::size_t i) {
  if (i == 0) return e.a0;
  return e.period[(i - 1) % e.period.size()];
}

/// Convergent numerator/denominator h_index, k_index of sqrt(d).
template <class Int>
std::pair<Integer, Integer> convergent(const SqrtExpansion<Int>& e, std::size_t index,
                                       std::size_t digit_budget) {
  double digits = 0;
  for (std::size_t i = 0; i <= index; ++i) digits += log10_plus_one(partial_quotient(e, i));
  if (digits > static_cast<double>(digit_budget)) {
    throw Error(Errc::DigitBudgetExceeded,
                "fundamental solution needs about " + std::to_string(static_cast<long long>(digits)) +
                    " digits (budget " + std::to_string(digit_budget) + ")");
  }
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
  for (std::size_t i = 0; i <= index; ++i) {
    const Int& a = partial_quotient(e, i);
    mul_add(h, h_prev, a);
    mul_add(k, k_prev, a);
    std::swap(h, h_prev);
    std::swap(k, k_prev);
  }
  return {h_prev, k_prev};
}

void require_nonsquare(const Integer& d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "Pell solvers need d >= 2, got " + d.get_str());
  if (mpz_perfect_square_p(d.get_mpz_t())) throw Error(Errc::PerfectSquareInput, d.get_str() + " is a perfect square");
}

bool fits_fast_path(const Integer& d) { return mpz_sizeinbase(d.get_mpz_t(), 2) <= 62; }

u64 to_u64(const Integer& d) {
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, d.get_mpz_t());
  return v;
}

PellFundamental fundamental_from(const Integer& d, int sign, std::size_t period, std::pair<Integer, Integer> hk) {
  PellFundamental f;
  f.d = d;
  f.equation_sign = sign;
  f.x = std::move(hk.first);
  f.y = std::move(hk.second);
  f.cf_period = period;
  return f;
}

template <class Int>
PellFundamental positive_fundamental(const Integer& d, const SqrtExpansion<Int>& e, const PellLimits& limits) {
  const std::size_t L = e.period.size();
  const std::size_t index = L % 2 == 0 ? L - 1 : 2 * L - 1;
  return fundamental_from(d, 1, L, convergent(e, index, limits.digit_budget));
}

// Residue filter for the quartic-minus candidates. Each modulus is a product
// of distinct small primes below 2^32 so one step fits in 64-bit arithmetic.
struct ResidueModulus {
  u64 modulus;
  std::vector<unsigned> primes;
};

const std::array<ResidueModulus, 3>& residue_moduli() {
  static const std::array<ResidueModulus, 3> moduli{{
      {3ull * 5 * 7 * 11 * 13 * 17 * 19 * 23, {3, 5, 7, 11, 13, 17, 19, 23}},
      {29ull * 31 * 37 * 41 * 43 * 47, {29, 31, 37, 41, 43, 47}},
      {53ull * 59 * 61 * 67 * 71, {53, 59, 61, 67, 71}},
  }};
  return moduli;
}

bool is_square_mod(u64 v, unsigned q) {
  v %= q;
  for (u64 t = 0; t <= q / 2; ++t)
    if (t * t % q == v) return true;
  return false;
}

/// h_index mod m without building h.
u64 convergent_numerator_mod(const SqrtExpansion<u64>& e, std::size_t index, u64 m) {
  u64 h_prev = 1 % m, h = 0;
  for (std::size_t i = 0; i <= index; ++i) {
    const u64 a = partial_quotient(e, i) % m;
    const u64 next = static_cast<u64>((static_cast<unsigned __int128>(a) * h_prev + h) % m);
    h = h_prev;
    h_prev = next;
  }
  return h_prev;
}

/// Which of u, 2u^2-1 survive every small-prime quadratic-residue test.
std::pair<bool, bool> residue_survivors(const SqrtExpansion<u64>& e, std::size_t index) {
  bool first = true, second = true;
  for (const auto& rm : residue_moduli()) {
    const u64 u = convergent_numerator_mod(e, index, rm.modulus);
    for (unsigned q : rm.primes) {
      const u64 uq = u % q;
      if (first && !is_square_mod(uq, q)) first = false;
      if (second && !is_square_mod((2 * uq * uq + q - 1) % q, q)) second = false;
    }
    if (!first && !second) break;
  }
  return {first, second};
}

/// s_n mod m by the same index doubling as lucas_s_fast.
u64 lucas_s_mod(const Integer& n, u64 v0, u64 m) {
  using u128 = unsigned __int128;
  auto mul = [m](u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % m); };
  auto sub1 = [m](u64 a, u64 b) { return (a + m - b % m) % m; };
  u64 sk = 1 % m, sk1 = v0 % m;
  bool k_odd = false;
  for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    // (-1)^k subtracted when k is even, added when odd
    const u64 s2k = k_odd ? (mul(2, mul(sk, sk)) + 1) % m : sub1(mul(2, mul(sk, sk)), 1);
    const u64 t = mul(2, mul(sk1, sk));
    const u64 s2k1 = k_odd ? (t + v0) % m : sub1(t, v0);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      const u64 u = mul(2, mul(sk1, sk1));
      sk = s2k1;
      sk1 = k_odd ? sub1(u, 1) : (u + 1) % m;
      k_odd = true;
    } else {
      sk = s2k;
      sk1 = s2k1;
      k_odd = false;
    }
  }
  return sk;
}

/// False when some small prime shows s_n is not a square.
bool lucas_square_survives(const Integer& n, const Integer& v0) {
  for (const auto& rm : residue_moduli()) {
    const u64 v0m = mpz_fdiv_ui(v0.get_mpz_t(), static_cast<unsigned long>(rm.modulus));
    const u64 s = lucas_s_mod(n, v0m, rm.modulus);
    for (unsigned q : rm.primes)
      if (!is_square_mod(s % q, q)) return false;
  }
  return true;
}

struct SquarefreeEstimate {
  Integer value;
  bool exact = false;
};

/// Squarefree part of n > 0 from trial division below 2^16. When the
/// cofactor left over is neither 1, a square nor a prime, `value` is only a
/// lower bound (that cofactor holds a prime above 2^16 to an odd power).
SquarefreeEstimate squarefree_part_estimate(Integer n) {
  SquarefreeEstimate e{1, true};
  for (unsigned long q = 2; q < 65536 && n > 1; ++q) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
      ++exponent;
    }
    if (exponent % 2) e.value *= q;
  }
  if (n == 1 || mpz_perfect_square_p(n.get_mpz_t())) return e;
  if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0) {
    e.value *= n;
    return e;
  }
  e.value *= 65537;
  e.exact = false;
  return e;
}

struct MinusCandidates {
  bool sqrt_u = false;
  bool sqrt_2u2m1 = false;
  std::optional<Integer> u;
};

MinusCandidates minus_candidates(const Integer& d, const PellLimits& limits) {
  require_nonsquare(d);
  MinusCandidates out;
  if (fits_fast_path(d)) {
    const auto e = expand_sqrt<u64>(to_u64(d));
    const std::size_t L = e.period.size();
    const std::size_t index = L % 2 == 0 ? L - 1 : 2 * L - 1;
    auto [first, second] = residue_survivors(e, index);
    if (!first && !second) return out;
    out.u = convergent(e, index, limits.digit_budget).first;
  } else {
    out.u = positive_fundamental(d, expand_sqrt<Integer>(d), limits).x;
  }
  const Integer& u = *out.u;
  out.sqrt_u = mpz_perfect_square_p(u.get_mpz_t()) != 0;
  Integer w = 2 * u * u - 1;
  out.sqrt_2u2m1 = mpz_perfect_square_p(w.get_mpz_t()) != 0;
  return out;
}

void add_if_solution(QuarticPellSolutions& out, const Integer& x) {
  Integer rhs = pow(x, 4) + (out.variant == QuarticVariant::minus ? -1 : 1);
  if (rhs <= 0 || !mpz_divisible_p(rhs.get_mpz_t(), out.d.get_mpz_t())) return;
  Integer q = rhs / out.d;
  auto y = integer_nth_root(q, 2);
  if (!y || *y == 0) return;
  for (const auto& s : out.solutions)
    if (s.first == x) return;
  out.solutions.emplace_back(x, *y);
}

}  // namespace

template <class Int>
SqrtExpansion<Int> expand_sqrt(const Int& d) {
  SqrtExpansion<Int> e;
  e.a0 = isqrt(d);
  if (e.a0 * e.a0 == d) return e;
  const Int two_a0 = e.a0 + e.a0;
  Int m = 0, den = 1, a = e.a0;
  do {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (e.a0 + m) / den;
    e.period.push_back(a);
  } while (a != two_a0);
  return e;
}

template SqrtExpansion<u64> expand_sqrt<u64>(const u64&);
template SqrtExpansion<Integer> expand_sqrt<Integer>(const Integer&);

SqrtExpansion<Integer> continued_fraction_sqrt(const Integer& d) {
  require_nonsquare(d);
  return expand_sqrt<Integer>(d);
}

PellFundamental pell_fundamental(const Integer& d, const PellLimits& limits) {
  require_nonsquare(d);
  if (fits_fast_path(d)) return positive_fundamental(d, expand_sqrt<u64>(to_u64(d)), limits);
  return positive_fundamental(d, expand_sqrt<Integer>(d), limits);
}

std::optional<PellFundamental> negative_pell_fundamental(const Integer& d, const PellLimits& limits) {
  require_nonsquare(d);
  auto solve = [&](const auto& e) -> std::optional<PellFundamental> {
    const std::size_t L = e.period.size();
    if (L % 2 == 0) return std::nullopt;
    return fundamental_from(d, -1, L, convergent(e, L - 1, limits.digit_budget));
  };
  if (fits_fast_path(d)) return solve(expand_sqrt<u64>(to_u64(d)));
  return solve(expand_sqrt<Integer>(d));
}

Integer lucas_s(unsigned long n, const Integer& v0) {
  if (n == 0) return 1;
  Integer prev = 1, cur = v0;
  for (unsigned long i = 1; i < n; ++i) {
    Integer next = 2 * v0 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer lucas_s_fast(const Integer& n, const Integer& v0) {
  if (n < 0) throw Error(Errc::InvalidArgument, "lucas_s index must be nonnegative");
  // (s_k, s_{k+1}) walked down the bits of n.
  Integer sk = 1, sk1 = v0;
  bool k_odd = false;
  for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    const int sign_k = k_odd ? -1 : 1;  // (-1)^k
    Integer s2k = 2 * sk * sk - sign_k;
    Integer s2k1 = 2 * sk1 * sk - sign_k * v0;
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      // k -> 2k+1; s_{2k+2} = 2 s_{k+1}^2 - (-1)^{k+1}
      Integer s2k2 = 2 * sk1 * sk1 + sign_k;
      sk = std::move(s2k1);
      sk1 = std::move(s2k2);
      k_odd = true;
    } else {
      sk = std::move(s2k);
      sk1 = std::move(s2k1);
      k_odd = false;
    }
  }
  return sk;
}

std::pair<bool, bool> quartic_minus_integrality(const Integer& d, const PellLimits& limits) {
  auto c = minus_candidates(d, limits);
  return {c.sqrt_u, c.sqrt_2u2m1};
}

QuarticPellSolutions solve_quartic_minus(const Integer& d, const PellLimits& limits) {
  QuarticPellSolutions out;
  out.d = d;
  out.variant = QuarticVariant::minus;
  auto c = minus_candidates(d, limits);
  if (c.sqrt_u) add_if_solution(out, sqrt(*c.u));
  if (c.sqrt_2u2m1) add_if_solution(out, sqrt(Integer(2 * *c.u * *c.u - 1)));
  return out;
}

QuarticPellSolutions solve_quartic_plus(const Integer& d, const PellLimits& limits, const FactorBudget& budget) {
  QuarticPellSolutions out;
  out.d = d;
  out.variant = QuarticVariant::plus;
  auto neg = negative_pell_fundamental(d, limits);
  if (!neg) return out;
  // log10 of mu = v0 + u0 sqrt(d) < 2 v0 + 1
  const double log_mu = log10_plus_one(Integer(2 * neg->x));
  const auto estimate = squarefree_part_estimate(neg->x);
  if (!estimate.exact && estimate.value.get_d() * log_mu > static_cast<double>(limits.digit_budget))
    throw Error(Errc::DigitBudgetExceeded,
                "s_A with A >= " + estimate.value.get_str() + " exceeds the digit budget");
  const Integer A = estimate.exact ? estimate.value : squarefree_part(neg->x, budget);
  if (!lucas_square_survives(A, neg->x)) return out;
  if (A.get_d() * log_mu > static_cast<double>(limits.digit_budget)) {
    throw Error(Errc::DigitBudgetExceeded, "s_A with A = " + A.get_str() + " exceeds the digit budget");
  }
  const Integer s = lucas_s_fast(A, neg->x);
  if (auto x = integer_nth_root(s, 2)) add_if_solution(out, *x);
  return out;
}

}  // namespace descent
