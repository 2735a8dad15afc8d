#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genus {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(static_cast<long>(n)) {}
  Rational(long n) : value_(n) {}
  Rational(long long n) : value_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class value);
  static Rational from_integer(const mpz_class& n);

  /// Parses "n" or "n/d" (optionally signed); throws DomainError on malformed text.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

// Coefficient-ring hooks shared with QSeries so templates can build zeros and units.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
Rational reciprocal(const Rational& r);
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace genus
