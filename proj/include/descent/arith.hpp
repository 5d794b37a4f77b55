#ifndef DESCENT_ARITH_HPP
#define DESCENT_ARITH_HPP

#include <cstdint>
#include <vector>

#include "descent/integer.hpp"

namespace descent {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Work cap for Pollard rho, counted in polynomial steps summed over all
/// composite cofactors of one call.
struct FactorBudget {
  std::uint64_t max_rho_steps = std::uint64_t{1} << 26;
};

/// Complete prime factorization of a nonzero integer. Trial division by small
/// primes, then Brent's variant of Pollard rho with a per-call deterministic
/// seed sequence. Throws ZeroInput or FactorizationTimeout.
Factorization factor(const Integer& n, const FactorBudget& budget = {});

/// Squarefree divisors of |n| in ascending order; both signs when `signed_`.
std::vector<Integer> squarefree_divisors(const Integer& n, bool signed_);
std::vector<Integer> squarefree_divisors(const Factorization& f, bool signed_);

/// Every nonzero d = +-prod q_i^{a_i} with q_i | c prime and 1 <= a_i <= p-1,
/// ordered by |d| then sign.
std::vector<Integer> pfree_twist_coefficients(const Integer& c, unsigned p);
std::vector<Integer> pfree_twist_coefficients(const Factorization& c, unsigned p);

/// A with n = A * m^2 and A squarefree.
Integer squarefree_part(const Integer& n, const FactorBudget& budget = {});

unsigned omega(const Factorization& f);
Integer tau(const Factorization& f);
Integer radical(const Factorization& f);

unsigned omega(const Integer& n);
Integer tau(const Integer& n);
Integer radical(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> positive_divisors(const Factorization& f);

/// True iff no prime appears to exponent >= p.
bool is_pfree(const Integer& n, unsigned p);

}  // namespace descent

#endif  // DESCENT_ARITH_HPP
