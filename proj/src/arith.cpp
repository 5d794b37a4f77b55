#include "descent/arith.hpp"

#include <algorithm>
#include <map>

#include "descent/error.hpp"

namespace descent {

namespace {

constexpr unsigned long kTrialBound = 1u << 16;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0; }

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of the odd composite n, consuming from `steps_left`.
Integer rho_split(const Integer& n, std::uint64_t& steps_left) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        if (steps_left < lim) throw Error(Errc::FactorizationTimeout, "rho budget exhausted on " + n.get_str());
        steps_left -= lim;
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          q *= abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t& steps_left) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Perfect powers defeat rho's birthday argument less often than they slow it down.
  Integer root;
  for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) / k >= 16; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Integer, unsigned> sub;
      split_into(root, sub, steps_left);
      for (auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
      return;
    }
  }
  Integer d = rho_split(n, steps_left);
  split_into(d, out, steps_left);
  split_into(Integer(n / d), out, steps_left);
}

}  // namespace

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& pp : factors) v *= pow(pp.prime, pp.exponent);
  return v;
}

Factorization factor(const Integer& n, const FactorBudget& budget) {
  if (n == 0) throw Error(Errc::ZeroInput, "cannot factor 0");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Integer rest = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) found[Integer(p)] = e;
  }
  std::uint64_t steps_left = budget.max_rho_steps;
  split_into(rest, found, steps_left);
  for (auto& [p, e] : found) f.factors.push_back({p, e});
  return f;
}

std::vector<Integer> positive_divisors(const Factorization& f) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> squarefree_divisors(const Factorization& f, bool signed_) {
  std::vector<Integer> pos{Integer(1)};
  for (const auto& pp : f.factors) {
    const std::size_t base = pos.size();
    for (std::size_t i = 0; i < base; ++i) pos.push_back(pos[i] * pp.prime);
  }
  std::vector<Integer> out = pos;
  if (signed_)
    for (const auto& d : pos) out.push_back(-d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> squarefree_divisors(const Integer& n, bool signed_) {
  return squarefree_divisors(factor(n), signed_);
}

std::vector<Integer> pfree_twist_coefficients(const Factorization& c, unsigned p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "exponent must be prime");
  std::vector<Integer> pos{Integer(1)};
  for (const auto& pp : c.factors) {
    const std::size_t base = pos.size();
    Integer qa = 1;
    for (unsigned a = 1; a < p; ++a) {
      qa *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) pos.push_back(pos[i] * qa);
    }
  }
  std::sort(pos.begin(), pos.end());
  std::vector<Integer> out;
  out.reserve(2 * pos.size());
  for (const auto& d : pos) {
    out.push_back(-d);
    out.push_back(d);
  }
  return out;
}

std::vector<Integer> pfree_twist_coefficients(const Integer& c, unsigned p) {
  return pfree_twist_coefficients(factor(c), p);
}

Integer squarefree_part(const Integer& n, const FactorBudget& budget) {
  if (n < 1) throw Error(Errc::InvalidArgument, "squarefree_part needs n >= 1");
  Integer a = 1;
  for (const auto& pp : factor(n, budget).factors)
    if (pp.exponent % 2) a *= pp.prime;
  return a;
}

unsigned omega(const Factorization& f) { return static_cast<unsigned>(f.factors.size()); }

Integer tau(const Factorization& f) {
  Integer t = 1;
  for (const auto& pp : f.factors) t *= pp.exponent + 1;
  return t;
}

Integer radical(const Factorization& f) {
  Integer r = 1;
  for (const auto& pp : f.factors) r *= pp.prime;
  return r;
}

unsigned omega(const Integer& n) { return omega(factor(n)); }
Integer tau(const Integer& n) { return tau(factor(n)); }
Integer radical(const Integer& n) { return radical(factor(n)); }

bool is_pfree(const Integer& n, unsigned p) {
  if (n == 0) return false;
  for (const auto& pp : factor(n).factors)
    if (pp.exponent >= p) return false;
  return true;
}

}  // namespace descent
