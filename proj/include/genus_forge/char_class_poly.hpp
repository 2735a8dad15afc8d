#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "genus_forge/error.hpp"
#include "genus_forge/qseries.hpp"
#include "genus_forge/rational.hpp"

namespace genus {

/// Monomial p_{i1} p_{i2} ... (or c_...) as its subscripts in descending order.
using Partition = std::vector<int>;

enum class ClassKind { pontryagin, chern };

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

/// Canonical "2,1,1" rendering; the empty partition renders as "".
std::string partition_key(const Partition& p);
/// Parses "2,1,1" in any order and returns it sorted descending.
Partition parse_partition(const std::string& key);
/// All partitions of n, each descending, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Polynomial in weighted characteristic-class generators (p_i or c_i has
/// weight i), truncated above weight_cap, with coefficients in C.
template <class C>
class CharClassPoly {
 public:
  using Terms = std::map<Partition, C>;

  CharClassPoly(ClassKind kind, int weight_cap, const C& zero)
      : kind_(kind), weight_cap_(weight_cap), zero_(zero_like(zero)) {
    if (weight_cap < 0) throw Error(ErrorKind::DomainError, "negative weight cap");
  }

  static CharClassPoly constant(ClassKind kind, int weight_cap, const C& value) {
    CharClassPoly out(kind, weight_cap, value);
    out.add_term({}, value);
    return out;
  }

  /// The single generator p_index (or c_index).
  static CharClassPoly generator(ClassKind kind, int weight_cap, int index, const C& zero) {
    CharClassPoly out(kind, weight_cap, zero);
    out.add_term({index}, one_like(zero));
    return out;
  }

  ClassKind kind() const { return kind_; }
  int weight_cap() const { return weight_cap_; }
  const C& zero() const { return zero_; }
  const Terms& terms() const { return terms_; }

  C coeff(const Partition& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Adds c * mono; dropped when above the weight cap, erased when it cancels.
  void add_term(Partition mono, const C& c) {
    std::sort(mono.begin(), mono.end(), std::greater<>());
    if (weight(mono) > weight_cap_ || is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Terms of exactly weight w.
  CharClassPoly homogeneous(int w) const {
    CharClassPoly out(kind_, weight_cap_, zero_);
    for (const auto& [mono, c] : terms_)
      if (weight(mono) == w) out.terms_.emplace(mono, c);
    return out;
  }

  CharClassPoly& operator+=(const CharClassPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  CharClassPoly& operator-=(const CharClassPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  CharClassPoly& operator*=(const C& s) {
    Terms out;
    for (auto& [mono, c] : terms_) {
      C v = c * s;
      if (!is_zero(v)) out.emplace(mono, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend CharClassPoly operator+(CharClassPoly a, const CharClassPoly& b) { return a += b; }
  friend CharClassPoly operator-(CharClassPoly a, const CharClassPoly& b) { return a -= b; }
  friend CharClassPoly operator*(CharClassPoly a, const C& s) { return a *= s; }

  friend CharClassPoly operator*(const CharClassPoly& a, const CharClassPoly& b) {
    a.check_compatible(b);
    CharClassPoly out(a.kind_, a.weight_cap_, a.zero_);
    for (const auto& [ma, ca] : a.terms_) {
      const int wa = weight(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (wa + weight(mb) > a.weight_cap_) continue;
        Partition m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }
  CharClassPoly& operator*=(const CharClassPoly& o) { return *this = *this * o; }

  friend bool operator==(const CharClassPoly& a, const CharClassPoly& b) {
    return a.kind_ == b.kind_ && a.weight_cap_ == b.weight_cap_ && a.terms_ == b.terms_;
  }

  /// Same polynomial re-truncated to a lower cap.
  CharClassPoly truncated(int new_cap) const {
    CharClassPoly out(kind_, new_cap, zero_);
    for (const auto& [mono, c] : terms_)
      if (weight(mono) <= new_cap) out.terms_.emplace(mono, c);
    return out;
  }

  /// Applies f to every coefficient, producing a polynomial over D.
  template <class D, class F>
  CharClassPoly<D> map_coeffs(const D& zero, F&& f) const {
    CharClassPoly<D> out(kind_, weight_cap_, zero);
    for (const auto& [mono, c] : terms_) out.add_term(mono, f(c));
    return out;
  }

 private:
  void check_compatible(const CharClassPoly& o) const {
    if (o.kind_ != kind_ || o.weight_cap_ != weight_cap_)
      throw Error(ErrorKind::DomainError, "incompatible characteristic-class polynomials");
  }

  ClassKind kind_;
  int weight_cap_;
  C zero_;
  Terms terms_;
};

inline CharClassPoly<QSeries> lift(const CharClassPoly<Rational>& a, int q_trunc) {
  return a.map_coeffs(QSeries(q_trunc), [&](const Rational& r) { return QSeries::constant(r, q_trunc); });
}

/// Exponential of a polynomial without constant term, truncated at its weight cap.
template <class C>
CharClassPoly<C> exp(const CharClassPoly<C>& x) {
  if (!is_zero(x.coeff({})))
    throw Error(ErrorKind::NonNilpotentExp, "exponent has a constant term");
  const C one = one_like(x.zero());
  CharClassPoly<C> result = CharClassPoly<C>::constant(x.kind(), x.weight_cap(), one);
  CharClassPoly<C> power = result;
  // Every term has weight >= 1, so x^k vanishes for k > cap.
  for (int k = 1; k <= x.weight_cap(); ++k) {
    power = power * x;
    power *= one * Rational(1, k);
    result += power;
  }
  return result;
}

/// Power sums P_n = sum_j t_j^n (n = 1..weight_cap) of formal roots t_j whose
/// elementary symmetric functions are the generators, via Newton's identities.
/// Generators beyond `roots` vanish; roots <= 0 means "as many as needed".
std::vector<CharClassPoly<Rational>> power_sums(ClassKind kind, int weight_cap, int roots = 0);

/// Pairs the weight-`top` part of a class with characteristic numbers.
/// Throws InsufficientData if a needed number is missing.
template <class C>
C pair_top(const CharClassPoly<C>& cls, const std::map<Partition, long long>& numbers, int top) {
  C acc = cls.zero();
  for (const auto& [mono, c] : cls.terms()) {
    if (weight(mono) != top) continue;
    auto it = numbers.find(mono);
    if (it == numbers.end())
      throw Error(ErrorKind::InsufficientData, "missing characteristic number for monomial " + partition_key(mono));
    if (it->second != 0) acc += c * Rational(it->second);
  }
  return acc;
}

}  // namespace genus
