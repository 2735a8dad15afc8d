#include "genus_forge/qseries.hpp"

#include <cmath>
#include <sstream>

#include "genus_forge/error.hpp"

namespace genus {
namespace {

void require_same_trunc(const QSeries& a, const QSeries& b) {
  if (a.trunc() != b.trunc())
    throw Error(ErrorKind::TruncMismatch, "truncations " + std::to_string(a.trunc()) + " and " +
                                              std::to_string(b.trunc()) + " differ");
}

}  // namespace

QSeries::QSeries(int trunc) {
  if (trunc < 1) throw Error(ErrorKind::DomainError, "series truncation must be positive");
  coeffs_.assign(static_cast<std::size_t>(trunc), Rational(0));
}

QSeries QSeries::constant(const Rational& c, int trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rational& c, int half_exp, int trunc) {
  QSeries s(trunc);
  if (half_exp < 0) throw Error(ErrorKind::DomainError, "negative exponent");
  if (half_exp < trunc) s.coeffs_[static_cast<std::size_t>(half_exp)] = c;
  return s;
}

QSeries QSeries::from_terms(const std::map<int, Rational>& terms, int trunc) {
  QSeries s(trunc);
  for (const auto& [n, c] : terms) {
    if (n < 0) throw Error(ErrorKind::DomainError, "negative exponent");
    if (n < trunc) s.coeffs_[static_cast<std::size_t>(n)] = c;
  }
  return s;
}

const Rational& QSeries::coeff(int half_exp) const {
  if (half_exp < 0 || half_exp >= trunc())
    throw Error(ErrorKind::TruncMismatch, "coefficient index " + std::to_string(half_exp) +
                                              " outside truncation " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(half_exp)];
}

void QSeries::set_coeff(int half_exp, Rational value) {
  if (half_exp < 0 || half_exp >= trunc())
    throw Error(ErrorKind::TruncMismatch, "coefficient index outside truncation");
  coeffs_[static_cast<std::size_t>(half_exp)] = std::move(value);
}

std::map<int, Rational> QSeries::terms() const {
  std::map<int, Rational> out;
  for (int n = 0; n < trunc(); ++n)
    if (!coeffs_[n].is_zero()) out.emplace(n, coeffs_[n]);
  return out;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool QSeries::has_only_integer_powers() const {
  for (int n = 1; n < trunc(); n += 2)
    if (!coeffs_[n].is_zero()) return false;
  return true;
}

QSeries QSeries::truncated(int new_trunc) const {
  if (new_trunc > trunc()) throw Error(ErrorKind::TruncMismatch, "cannot extend a truncated series");
  QSeries s(new_trunc);
  for (int n = 0; n < new_trunc; ++n) s.coeffs_[n] = coeffs_[n];
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_trunc(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_trunc(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  require_same_trunc(*this, o);
  const int t = trunc();
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  // Factors built from products like (1 - q^j) are sparse, so skip zeros.
  for (int i = 0; i < t; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j < t; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries& QSeries::operator/=(const Rational& s) {
  for (auto& c : coeffs_) c /= s;
  return *this;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  require_same_trunc(a, b);
  if (b.coeffs_[0].is_zero())
    throw Error(ErrorKind::NonUnitDivisor, "divisor has zero constant term");
  // Back-substitution: b * c = a.
  const int t = a.trunc();
  const Rational inv0 = reciprocal(b.coeffs_[0]);
  QSeries c(t);
  for (int n = 0; n < t; ++n) {
    Rational acc = a.coeffs_[n];
    for (int k = 1; k <= n; ++k)
      if (!b.coeffs_[k].is_zero()) acc -= b.coeffs_[k] * c.coeffs_[n - k];
    c.coeffs_[n] = acc * inv0;
  }
  return c;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (n == 0) continue;
    if (n % 2 == 0)
      os << "*q^" << n / 2;
    else
      os << "*q^(" << n << "/2)";
  }
  if (first) os << "0";
  os << " + O(q^(" << trunc() << "/2))";
  return os.str();
}

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
  }
  return a;
}

QSeries reciprocal(const QSeries& a) { return QSeries::constant(1, a.trunc()) / a; }

QSeries series_log(const QSeries& a) {
  if (a.coeff(0) != Rational(1))
    throw Error(ErrorKind::NonUnitLog, "logarithm needs constant term 1");
  // In s = q^{1/2}: n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
  const int t = a.trunc();
  QSeries out(t);
  for (int n = 1; n < t; ++n) {
    Rational acc = Rational(n) * a.coeff(n);
    for (int k = 1; k < n; ++k) {
      const Rational& ank = a.coeff(n - k);
      if (ank.is_zero() || out.coeff(k).is_zero()) continue;
      acc -= Rational(k) * out.coeff(k) * ank;
    }
    out.set_coeff(n, acc / Rational(n));
  }
  return out;
}

QSeries series_exp(const QSeries& a) {
  if (!a.coeff(0).is_zero())
    throw Error(ErrorKind::NonNilpotentExp, "exponential needs zero constant term");
  // n E_n = sum_{k=1}^{n} k A_k E_{n-k}.
  const int t = a.trunc();
  QSeries out = QSeries::constant(1, t);
  for (int n = 1; n < t; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
      const Rational& ak = a.coeff(k);
      if (ak.is_zero()) continue;
      acc += Rational(k) * ak * out.coeff(n - k);
    }
    out.set_coeff(n, acc / Rational(n));
  }
  return out;
}

std::complex<double> series_eval_numeric(const QSeries& a, std::complex<double> q_value) {
  if (std::abs(q_value) >= 1.0)
    throw Error(ErrorKind::DivergentEvaluation, "|q| must be below 1");
  const std::complex<double> s = std::sqrt(q_value);
  // Horner in s = q^{1/2}.
  std::complex<double> acc = 0.0;
  for (int n = a.trunc() - 1; n >= 0; --n) acc = acc * s + a.coeff(n).to_double();
  return acc;
}

}  // namespace genus
