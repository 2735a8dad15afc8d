#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "genus_forge/rational.hpp"

namespace genus {

/// Truncated power series in q^{1/2} with exact rational coefficients.
///
/// Index n stands for q^{n/2}. Coefficients at n >= trunc() are unknown and are
/// never produced by arithmetic. Storage is dense; terms() gives the canonical
/// sparse view with zero coefficients dropped.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int trunc);

  static QSeries constant(const Rational& c, int trunc);
  /// c * q^{half_exp/2}; silently zero when half_exp >= trunc.
  static QSeries monomial(const Rational& c, int half_exp, int trunc);
  static QSeries from_terms(const std::map<int, Rational>& terms, int trunc);

  int trunc() const { return static_cast<int>(coeffs_.size()); }
  /// Coefficient of q^{half_exp/2}; throws TruncMismatch at or beyond trunc().
  const Rational& coeff(int half_exp) const;
  void set_coeff(int half_exp, Rational value);
  std::map<int, Rational> terms() const;
  const std::vector<Rational>& dense() const { return coeffs_; }

  bool is_zero() const;
  bool has_only_integer_powers() const;
  /// Same coefficients below new_trunc (new_trunc <= trunc()).
  QSeries truncated(int new_trunc) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& s);
  QSeries& operator/=(const Rational& s);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend QSeries operator/(QSeries a, const Rational& s) { return a /= s; }
  friend QSeries operator/(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, mul, div };

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op);
QSeries reciprocal(const QSeries& a);
QSeries series_log(const QSeries& a);
QSeries series_exp(const QSeries& a);
/// Sum of c_n * q_value^{n/2}, principal square root; |q_value| must be < 1.
std::complex<double> series_eval_numeric(const QSeries& a, std::complex<double> q_value);

inline QSeries zero_like(const QSeries& a) { return QSeries(a.trunc()); }
inline QSeries one_like(const QSeries& a) { return QSeries::constant(1, a.trunc()); }
inline bool is_zero(const QSeries& a) { return a.is_zero(); }

}  // namespace genus
