#include "descent/twists.hpp"

#include <algorithm>

#include "descent/error.hpp"
#include "json.hpp"

namespace descent {

namespace {

using nlohmann::ordered_json;

/// Machine integers stay JSON numbers; anything wider becomes a decimal string.
ordered_json int_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
  return n.get_str();
}

}  // namespace

std::string_view twist_kind_name(TwistKind kind) noexcept {
  switch (kind) {
    case TwistKind::elliptic_cubic: return "elliptic_cubic";
    case TwistKind::generic_dsquare: return "generic_dsquare";
    case TwistKind::binomial_thue: return "binomial_thue";
    case TwistKind::quartic_minus: return "quartic_minus";
    case TwistKind::quartic_plus: return "quartic_plus";
  }
  return "unknown";
}

std::optional<TwistKind> parse_twist_kind(std::string_view name) noexcept {
  for (auto k : {TwistKind::elliptic_cubic, TwistKind::generic_dsquare, TwistKind::binomial_thue,
                 TwistKind::quartic_minus, TwistKind::quartic_plus})
    if (twist_kind_name(k) == name) return k;
  return std::nullopt;
}

std::string TwistEquation::canonical_key() const {
  ordered_json j;
  switch (kind) {
    case TwistKind::elliptic_cubic:
      j["kind"] = "elliptic";
      j["a1"] = 0;
      j["a2"] = int_json(model->a2);
      j["a3"] = 0;
      j["a4"] = int_json(model->a4);
      j["a6"] = int_json(model->a6);
      break;
    case TwistKind::binomial_thue:
      j["kind"] = "thue";
      j["p"] = p;
      j["lhs_coeff"] = int_json(d);
      j["rhs"] = ordered_json::array({int_json(thue_a), int_json(thue_b)});
      break;
    case TwistKind::generic_dsquare: {
      j["kind"] = "dsquare";
      j["d"] = int_json(d);
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : f.coeffs()) coeffs.push_back(int_json(c));
      j["coeffs"] = coeffs;
      break;
    }
    case TwistKind::quartic_minus:
    case TwistKind::quartic_plus:
      j["kind"] = twist_kind_name(kind);
      j["d"] = int_json(d);
      break;
  }
  return j.dump();
}

TwistEquation build_elliptic_twist(const IntegerPolynomial& f, const Integer& d) {
  if (f.degree() != 3 || !f.is_monic()) throw Error(Errc::NotMonicCubic, f.to_string() + " is not a monic cubic");
  if (discriminant_resultant(f) == 0) throw Error(Errc::SingularCurve, f.to_string() + " has a repeated root");
  if (d == 0) throw Error(Errc::InvalidArgument, "twist coefficient must be nonzero");
  TwistEquation t;
  t.kind = TwistKind::elliptic_cubic;
  t.d = d;
  t.p = 2;
  t.f = f;
  t.model = WeierstrassModel{f.coeff(2) * d, f.coeff(1) * d * d, f.coeff(0) * d * d * d};
  return t;
}

TwistEquation build_generic_twist(const IntegerPolynomial& f, const Integer& d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "twist coefficient must be nonzero");
  TwistEquation t;
  t.kind = TwistKind::generic_dsquare;
  t.d = d;
  t.p = 2;
  t.f = f;
  return t;
}

TwistEquation build_thue_twist(const Integer& A, const Integer& B, unsigned p, const Integer& d) {
  if (d == 0 || A == 0 || B == 0) throw Error(Errc::InvalidArgument, "Thue twist needs nonzero A, B, d");
  TwistEquation t;
  t.kind = TwistKind::binomial_thue;
  t.d = d;
  t.p = p;
  t.thue_a = A;
  t.thue_b = B;
  t.f = IntegerPolynomial::monomial(A, p) + IntegerPolynomial::constant(B);
  return t;
}

TwistEquation build_quartic_twist(QuarticVariant variant, const Integer& d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "twist coefficient must be nonzero");
  TwistEquation t;
  t.kind = variant == QuarticVariant::minus ? TwistKind::quartic_minus : TwistKind::quartic_plus;
  t.d = d;
  t.p = 2;
  t.f = IntegerPolynomial{variant == QuarticVariant::minus ? -1 : 1, 0, 0, 0, 1};
  return t;
}

bool satisfies_direct_form(const TwistEquation& t, const Integer& x) {
  const Integer v = t.f.evaluate(x);
  if (!mpz_divisible_p(v.get_mpz_t(), t.d.get_mpz_t())) return false;
  return exact_power_root(Integer(v / t.d), t.p).has_value();
}

void finalize_candidates(TwistOutcome& outcome) {
  auto& xs = outcome.x_candidates;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::erase_if(xs, [&](const Integer& x) { return !satisfies_direct_form(outcome.twist, x); });
}

TwistOutcome solve_twist_bounded(const TwistEquation& t, unsigned long height) {
  TwistOutcome out;
  out.twist = t;
  out.backend = "bounded";
  out.height = height;
  out.complete = false;
  const long h = static_cast<long>(height);
  Integer x, v, q;
  for (long xi = -h; xi <= h; ++xi) {
    x = xi;
    v = t.f.evaluate(x);
    if (!mpz_divisible_p(v.get_mpz_t(), t.d.get_mpz_t())) continue;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), t.d.get_mpz_t());
    if (q < 0 && t.p % 2 == 0) continue;
    if (t.p == 2 ? mpz_perfect_square_p(q.get_mpz_t()) != 0 : exact_power_root(q, t.p).has_value())
      out.x_candidates.push_back(x);
  }
  out.diagnostics.push_back("scanned |x| <= " + std::to_string(height));
  return out;
}

std::optional<TwistOutcome> solve_twist_exact(const TwistEquation& t, const PellLimits& limits) {
  if (t.kind != TwistKind::quartic_minus && t.kind != TwistKind::quartic_plus) return std::nullopt;
  const bool minus = t.kind == TwistKind::quartic_minus;
  TwistOutcome out;
  out.twist = t;
  out.backend = "exact";
  out.complete = true;
  if (t.d < 0) {
    // x^4 - 1 <= 0 forces |x| <= 1; x^4 + 1 > 0 excludes every x.
    if (minus) out.x_candidates = {Integer(-1), Integer(0), Integer(1)};
    out.diagnostics.push_back("negative d: settled analytically");
  } else if (t.d == 1) {
    if (minus) {
      out.x_candidates = {Integer(-1), Integer(1)};
    } else {
      out.x_candidates = {Integer(0)};
    }
    out.diagnostics.push_back("d = 1: settled analytically");
  } else {
    try {
      auto sols = minus ? solve_quartic_minus(t.d, limits) : solve_quartic_plus(t.d, limits);
      if (minus) out.x_candidates = {Integer(-1), Integer(1)};  // y = 0
      for (const auto& [x, y] : sols.solutions) {
        out.x_candidates.push_back(x);
        out.x_candidates.push_back(-x);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::DigitBudgetExceeded && e.code() != Errc::FactorizationTimeout) throw;
      out.complete = false;
      out.skipped = true;
      out.diagnostics.push_back(std::string("skipped (") +
                                (e.code() == Errc::DigitBudgetExceeded ? "digit budget" : "factorization budget") +
                                "): " + e.what());
    }
  }
  finalize_candidates(out);
  return out;
}

}  // namespace descent
