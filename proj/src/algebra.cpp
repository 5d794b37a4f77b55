#include "descent/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "descent/arith.hpp"

namespace descent {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NegativeEvenPower: return "NegativeEvenPower";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::FactorizationTimeout: return "FactorizationTimeout";
    case Errc::PerfectSquareInput: return "PerfectSquareInput";
    case Errc::DigitBudgetExceeded: return "DigitBudgetExceeded";
    case Errc::NotMonicCubic: return "NotMonicCubic";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::AdapterUnavailable: return "AdapterUnavailable";
    case Errc::AdapterProtocolError: return "AdapterProtocolError";
    case Errc::AdapterTimeout: return "AdapterTimeout";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::CommonRoots: return "CommonRoots";
    case Errc::NotBinomial: return "NotBinomial";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string s(text.substr(i, j - i));
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(Errc::Parse, "not an integer: '" + std::string(text) + "'");
  }
  return Integer(s, 10);
}

// ---------------------------------------------------------------------------
// IntegerPolynomial

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

void IntegerPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial IntegerPolynomial::monomial(const Integer& c, unsigned k) {
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = c;
  return IntegerPolynomial(std::move(v));
}

const Integer& IntegerPolynomial::leading() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer IntegerPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntegerPolynomial(std::move(d));
}

std::string IntegerPolynomial::to_list_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ',';
    s += coeffs_[k].get_str();
  }
  return s + "]";
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? '-' : '+';
    }
    if (k == 0 || mag != 1) s += mag.get_str();
    if (k >= 1) s += 'x';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s;
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  return a + Integer(-1) * b;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial operator*(const Integer& s, const IntegerPolynomial& a) {
  std::vector<Integer> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return IntegerPolynomial(std::move(r));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

IntegerPolynomial parse_list(std::string_view body) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  if (body.find_first_not_of(" \t") == std::string_view::npos) return {};
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    coeffs.push_back(parse_integer(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial parse_human(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::Parse, "empty polynomial");

  std::vector<Integer> coeffs;
  auto add = [&](const Integer& c, unsigned k) {
    if (coeffs.size() <= k) coeffs.resize(k + 1, Integer(0));
    coeffs[k] += c;
  };
  auto fail = [&](const std::string& why) {
    throw Error(Errc::Parse, why + " in '" + std::string(text) + "'");
  };

  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    bool had_sign = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sgn = -sgn;
      had_sign = true;
      ++i;
    }
    if (!had_sign && i != 0) fail("missing operator");
    std::size_t digits_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = digits_begin == i ? Integer(1) : Integer(s.substr(digits_begin, i - digits_begin), 10);
    bool has_coeff = digits_begin != i;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected 'x' after '*'");
    }
    unsigned k = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e0 == i) fail("missing exponent");
        k = static_cast<unsigned>(std::stoul(s.substr(e0, i - e0)));
      }
    } else if (!has_coeff) {
      fail("expected a term");
    }
    add(sgn * c, k);
  }
  return IntegerPolynomial(std::move(coeffs));
}

}  // namespace

IntegerPolynomial IntegerPolynomial::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\n");
  if (b != std::string_view::npos && text[b] == '[') {
    std::size_t e = text.find_last_not_of(" \t\n");
    if (text[e] != ']') throw Error(Errc::Parse, "unterminated coefficient list");
    return parse_list(text.substr(b + 1, e - b - 1));
  }
  return parse_human(text);
}

// ---------------------------------------------------------------------------
// Resultants

Integer resultant(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of zero polynomial");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;

  // Sylvester matrix: n shifted rows of p, then m shifted rows of q, both in
  // descending-power order.
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) a[r][r + k] = p.coeffs()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) a[n + r][r + k] = q.coeffs()[n - k];

  // Fraction-free Bareiss elimination.
  int swaps = 0;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < size && a[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(a[k], a[piv]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det = a[size - 1][size - 1];
  return swaps % 2 ? Integer(-det) : det;
}

Integer discriminant_resultant(const IntegerPolynomial& p) {
  if (p.degree() < 1) throw Error(Errc::InvalidArgument, "discriminant needs degree >= 1");
  return resultant(p, p.derivative());
}

bool coprime_over_closure(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  return resultant(p, q) != 0;
}

// ---------------------------------------------------------------------------
// Roots

std::optional<Integer> integer_nth_root(const Integer& n, unsigned k) {
  if (n < 0 || k < 2) throw Error(Errc::InvalidArgument, "integer_nth_root needs n >= 0, k >= 2");
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Integer> perfect_power_root(const Integer& n, unsigned k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "perfect_power_root needs k >= 2");
  if (n < 0 && k % 2 == 0) throw Error(Errc::NegativeEvenPower, n.get_str() + " has no even root");
  if (n >= 0) return integer_nth_root(n, k);
  auto r = integer_nth_root(Integer(-n), k);
  if (!r) return std::nullopt;
  return Integer(-*r);
}

std::optional<Integer> exact_power_root(const Integer& n, unsigned k) {
  if (n < 0 && k % 2 == 0) return std::nullopt;
  return perfect_power_root(n, k);
}

std::vector<Integer> integer_roots(const IntegerPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of zero polynomial");
  std::set<Integer> roots;
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  if (low > 0) roots.insert(Integer(0));
  if (static_cast<int>(low) < p.degree()) {
    for (const Integer& d : positive_divisors(factor(p.coeffs()[low]))) {
      if (p.evaluate(d) == 0) roots.insert(d);
      if (p.evaluate(Integer(-d)) == 0) roots.insert(Integer(-d));
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace descent
