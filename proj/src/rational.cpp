#include "genus_forge/rational.hpp"

#include <cctype>

#include "genus_forge/error.hpp"

namespace genus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorKind::TruncMismatch: return "TruncMismatch";
    case ErrorKind::NonUnitLog: return "NonUnitLog";
    case ErrorKind::NonNilpotentExp: return "NonNilpotentExp";
    case ErrorKind::DivergentEvaluation: return "DivergentEvaluation";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::InconsistentData: return "InconsistentData";
    case ErrorKind::UnknownManifold: return "UnknownManifold";
    case ErrorKind::FitError: return "FitError";
    case ErrorKind::ConvergenceRisk: return "ConvergenceRisk";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::ExponentDomainError: return "ExponentDomainError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CatalogError: return "CatalogError";
  }
  return "UnknownError";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivergentEvaluation:
    case ErrorKind::ConvergenceRisk:
    case ErrorKind::RootNotBracketed:
      return 3;
    default:
      return 2;
  }
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_integer(const mpz_class& n) { return Rational(mpq_class(n)); }

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::DomainError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::DomainError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational::from_integer(f);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational::from_integer(b);
}

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

}  // namespace genus
