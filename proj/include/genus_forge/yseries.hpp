#pragma once

#include <vector>

#include "genus_forge/error.hpp"
#include "genus_forge/qseries.hpp"
#include "genus_forge/rational.hpp"

namespace genus {

/// Truncated power series in one formal variable (a characteristic root) with
/// coefficients in C, which is Rational or QSeries. Holds y^0 .. y^cap.
template <class C>
class YSeries {
 public:
  YSeries(int cap, const C& zero) : coeffs_(static_cast<std::size_t>(cap) + 1, zero_like(zero)) {
    if (cap < 0) throw Error(ErrorKind::DomainError, "negative y cap");
  }

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  C& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const C& zero() const { return coeffs_.front(); }

  bool is_even() const {
    for (int n = 1; n <= cap(); n += 2)
      if (!is_zero(coeffs_[n])) return false;
    return true;
  }

  YSeries& operator+=(const YSeries& o) {
    check_cap(o);
    for (int n = 0; n <= cap(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  YSeries& operator-=(const YSeries& o) {
    check_cap(o);
    for (int n = 0; n <= cap(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  YSeries& operator*=(const YSeries& o) {
    check_cap(o);
    std::vector<C> out(coeffs_.size(), zero_like(coeffs_[0]));
    for (int i = 0; i <= cap(); ++i) {
      if (is_zero(coeffs_[i])) continue;
      for (int j = 0; i + j <= cap(); ++j) {
        if (is_zero(o.coeffs_[j])) continue;
        out[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    coeffs_ = std::move(out);
    return *this;
  }
  YSeries& operator*=(const C& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend YSeries operator+(YSeries a, const YSeries& b) { return a += b; }
  friend YSeries operator-(YSeries a, const YSeries& b) { return a -= b; }
  friend YSeries operator*(YSeries a, const YSeries& b) { return a *= b; }
  friend YSeries operator*(YSeries a, const C& s) { return a *= s; }
  friend bool operator==(const YSeries& a, const YSeries& b) = default;

  /// Divides by y^k; the low coefficients must vanish. The cap drops by k.
  YSeries shifted_down(int k) const {
    for (int n = 0; n < k; ++n)
      if (!is_zero(coeffs_[n])) throw Error(ErrorKind::DomainError, "series not divisible by y^k");
    YSeries out(cap() - k, coeffs_[0]);
    for (int n = 0; n <= out.cap(); ++n) out.coeffs_[n] = coeffs_[n + k];
    return out;
  }

  YSeries truncated(int new_cap) const {
    YSeries out(new_cap, coeffs_[0]);
    for (int n = 0; n <= new_cap && n <= cap(); ++n) out.coeffs_[n] = coeffs_[n];
    return out;
  }

 private:
  void check_cap(const YSeries& o) const {
    if (o.cap() != cap()) throw Error(ErrorKind::TruncMismatch, "y caps differ");
  }
  std::vector<C> coeffs_;
};

/// Multiplicative inverse; the constant coefficient must be invertible in C.
template <class C>
YSeries<C> inverse(const YSeries<C>& a) {
  const C inv0 = reciprocal(a[0]);
  YSeries<C> out(a.cap(), a.zero());
  out[0] = inv0;
  for (int n = 1; n <= a.cap(); ++n) {
    C acc = zero_like(a[0]);
    for (int k = 1; k <= n; ++k)
      if (!is_zero(a[k])) acc += a[k] * out[n - k];
    out[n] = -(acc * inv0);
  }
  return out;
}

/// log of a series with constant coefficient 1: n L_n = n a_n - sum k L_k a_{n-k}.
template <class C>
YSeries<C> log(const YSeries<C>& a) {
  if (!(a[0] == one_like(a[0]))) throw Error(ErrorKind::NonUnitLog, "constant coefficient is not 1");
  YSeries<C> out(a.cap(), a.zero());
  for (int n = 1; n <= a.cap(); ++n) {
    C acc = a[n] * Rational(n);
    for (int k = 1; k < n; ++k)
      if (!is_zero(out[k]) && !is_zero(a[n - k])) acc -= out[k] * a[n - k] * Rational(k);
    out[n] = acc * Rational(1, n);
  }
  return out;
}

/// Rational series in y: sum_n scale^n y^n / n!  (= e^{scale*y}).
inline YSeries<Rational> exp_linear(int cap, const Rational& scale) {
  YSeries<Rational> out(cap, Rational(0));
  Rational term(1);
  for (int n = 0; n <= cap; ++n) {
    out[n] = term;
    term = term * scale / Rational(n + 1);
  }
  return out;
}

/// Lifts rational coefficients into QSeries constants.
inline YSeries<QSeries> lift(const YSeries<Rational>& a, int q_trunc) {
  YSeries<QSeries> out(a.cap(), QSeries(q_trunc));
  for (int n = 0; n <= a.cap(); ++n) out[n] = QSeries::constant(a[n], q_trunc);
  return out;
}

/// a(y) * c * q^{half_exp/2}.
inline YSeries<QSeries> times_q(const YSeries<Rational>& a, const Rational& c, int half_exp, int q_trunc) {
  YSeries<QSeries> out(a.cap(), QSeries(q_trunc));
  for (int n = 0; n <= a.cap(); ++n) out[n] = QSeries::monomial(a[n] * c, half_exp, q_trunc);
  return out;
}

}  // namespace genus
