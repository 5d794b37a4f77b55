#ifndef DESCENT_ALGEBRA_HPP
#define DESCENT_ALGEBRA_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/error.hpp"
#include "descent/integer.hpp"

namespace descent {

/// Dense univariate polynomial over Z.
///
/// Coefficients are stored in ascending degree order: coeffs()[k] multiplies
/// x^k. Trailing zeros are stripped on construction, so the zero polynomial
/// has an empty coefficient list and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coeffs);
  IntegerPolynomial(std::initializer_list<long> coeffs);

  /// c * x^k
  static IntegerPolynomial monomial(const Integer& c, unsigned k);
  static IntegerPolynomial constant(const Integer& c) { return monomial(c, 0); }

  /// Accepts `[c0,c1,...]` or a human form such as `x^3 - 2x + 1`.
  static IntegerPolynomial parse(std::string_view text);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^k, zero beyond the degree.
  Integer coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const;

  Integer evaluate(const Integer& x) const;
  IntegerPolynomial derivative() const;

  /// Bracketed ascending list, e.g. `[1,1,0,1]`.
  std::string to_list_string() const;
  /// Human form with descending powers, e.g. `x^3+x+1`.
  std::string to_string() const;

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const Integer& s, const IntegerPolynomial& a);
  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
};

inline Integer evaluate(const IntegerPolynomial& p, const Integer& x) { return p.evaluate(x); }

/// Determinant of the Sylvester matrix of (p, q), rows of p first.
/// With this convention resultant(x, x - c) == -c.
Integer resultant(const IntegerPolynomial& p, const IntegerPolynomial& q);

/// res(p, p') based discriminant, without the leading-coefficient normalization.
Integer discriminant_resultant(const IntegerPolynomial& p);

/// True iff p and q have no common root over the algebraic closure.
bool coprime_over_closure(const IntegerPolynomial& p, const IntegerPolynomial& q);

/// r >= 0 with r^k == n, when it exists.
std::optional<Integer> integer_nth_root(const Integer& n, unsigned k);

/// r with r^k == n, possibly negative for odd k. Throws NegativeEvenPower for
/// n < 0 with k even.
std::optional<Integer> perfect_power_root(const Integer& n, unsigned k);

/// Non-throwing variant: negative n with even k gives nullopt.
std::optional<Integer> exact_power_root(const Integer& n, unsigned k);

/// Distinct integer roots of a nonzero polynomial, ascending.
std::vector<Integer> integer_roots(const IntegerPolynomial& p);

}  // namespace descent

#endif  // DESCENT_ALGEBRA_HPP
