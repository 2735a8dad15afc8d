#pragma once

#include <vector>

#include "genus_forge/char_class_poly.hpp"
#include "genus_forge/yseries.hpp"

namespace genus {

// One-variable factor series. The root variable is y = 2*pi*i*x, which keeps
// every coefficient rational.

/// (y/2)/sinh(y/2)
YSeries<Rational> ahat_factor(int y_cap);
/// (y/2)/tanh(y/2); the L-hat factor y/tanh(y/2) is twice this per root.
YSeries<Rational> lhat_unit_factor(int y_cap);
/// y/tanh(y)
YSeries<Rational> signature_factor(int y_cap);
/// z/(1 - e^{-z})
YSeries<Rational> todd_factor(int z_cap);

/// Rewrites prod_j Q(root_j) as a polynomial in the generators.
///
/// For pontryagin kind Q must be even and p_i = e_i(y_j^2); for chern kind
/// c_i = e_i(z_j). Q(0) must be 1. `roots` caps the number of formal roots
/// (0 means 2 * weight_cap); results are root-count stable once roots >= weight_cap.
template <class C>
CharClassPoly<C> multiplicative_class(const YSeries<C>& factor, ClassKind kind, int weight_cap, int roots = 0) {
  if (weight_cap < 1) throw Error(ErrorKind::DomainError, "weight cap must be at least 1");
  const int step = kind == ClassKind::pontryagin ? 2 : 1;
  if (kind == ClassKind::pontryagin && !factor.is_even())
    throw Error(ErrorKind::ParityError, "pontryagin classes need an even factor series");
  if (factor.cap() < step * weight_cap)
    throw Error(ErrorKind::TruncMismatch, "factor series too short for the weight cap");
  if (!(factor[0] == one_like(factor[0])))
    throw Error(ErrorKind::DomainError, "factor series must have constant term 1");

  // Q as a series in the weight-one variable t (t = y^2 or t = z).
  YSeries<C> in_t(weight_cap, factor.zero());
  for (int n = 0; n <= weight_cap; ++n) in_t[n] = factor[step * n];
  const YSeries<C> log_q = log(in_t);

  const auto sums = power_sums(kind, weight_cap, roots > 0 ? roots : 2 * weight_cap);
  CharClassPoly<C> exponent(kind, weight_cap, factor.zero());
  for (int n = 1; n <= weight_cap; ++n) {
    if (is_zero(log_q[n])) continue;
    exponent += sums[n - 1].map_coeffs(factor.zero(), [&](const Rational& r) { return log_q[n] * r; });
  }
  return exp(exponent);
}

/// Todd genus of a degree-d hypersurface-type class: expands (1 - e^{-d})/d with
/// d^{n+1} = 0 and returns the d^n coefficient times D = <d^n, [M]>.
Rational hypersurface_todd(int n, const Rational& d_power_number);

}  // namespace genus
