#include "genus_forge/elliptic.hpp"

#include "genus_forge/char_calculus.hpp"

namespace genus {

std::string_view to_string(EllipticKind kind) {
  switch (kind) {
    case EllipticKind::Ell1: return "ell1";
    case EllipticKind::Ell2: return "ell2";
    case EllipticKind::Witten: return "witten";
  }
  return "?";
}

EllipticKind parse_elliptic_kind(std::string_view name) {
  for (auto k : {EllipticKind::Ell1, EllipticKind::Ell2, EllipticKind::Witten})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::DomainError, "unknown elliptic genus '" + std::string(name) + "'");
}

namespace {

void check_caps(int y_cap, int q_trunc) {
  if (y_cap < 2 || q_trunc < 2) throw Error(ErrorKind::DomainError, "y_cap and q_trunc must be at least 2");
}

// 1 + sign * e^{scale*y} q^{half_exp/2}
CharSeries one_plus_exp_q(int y_cap, int q_trunc, const Rational& sign, const Rational& scale, int half_exp) {
  CharSeries out = times_q(exp_linear(y_cap, scale), sign, half_exp, q_trunc);
  out[0] += QSeries::constant(1, q_trunc);
  return out;
}

// 1 + sign * 2cosh(y) q^{h/2} + q^{h}, the product of the two conjugate root factors.
CharSeries conjugate_pair(int y_cap, int q_trunc, const Rational& sign, int half_exp) {
  YSeries<Rational> two_cosh(y_cap, Rational(0));
  for (int n = 0; n <= y_cap; n += 2) two_cosh[n] = Rational(2) / factorial(n);
  CharSeries out = times_q(two_cosh, sign, half_exp, q_trunc);
  out[0] += QSeries::constant(1, q_trunc) + QSeries::monomial(1, 2 * half_exp, q_trunc);
  return out;
}

QSeries one_plus_q(int q_trunc, const Rational& sign, int half_exp) {
  return QSeries::constant(1, q_trunc) + QSeries::monomial(sign, half_exp, q_trunc);
}

}  // namespace

CharSeries theta_ratio(ThetaKind kind, int y_cap, int q_trunc) {
  check_caps(y_cap, q_trunc);
  const Rational one(1), minus(-1);
  switch (kind) {
    case ThetaKind::theta: {
      // theta(x) is proportional to sinh(y/2) prod (1-q^j)(1-e^y q^j)(1-e^{-y} q^j); keep one
      // extra power of y because the quotient divides by y.
      const int cap = y_cap + 1;
      CharSeries prod = lift((exp_linear(cap, Rational(1, 2)) - exp_linear(cap, Rational(-1, 2))) *
                                 Rational(1, 2), q_trunc);
      for (int j = 1; 2 * j < q_trunc; ++j) {
        prod *= one_plus_q(q_trunc, minus, 2 * j);
        prod *= one_plus_exp_q(cap, q_trunc, minus, one, 2 * j);
        prod *= one_plus_exp_q(cap, q_trunc, minus, minus, 2 * j);
      }
      // y * theta'(0) / theta(y): the y^1 coefficient over theta(y)/y.
      const QSeries derivative_at_zero = prod[1];
      return inverse(prod.shifted_down(1)) * derivative_at_zero;
    }
    case ThetaKind::theta1: {
      CharSeries prod = lift((exp_linear(y_cap, Rational(1, 2)) + exp_linear(y_cap, Rational(-1, 2))) *
                                 Rational(1, 2), q_trunc);
      for (int j = 1; 2 * j < q_trunc; ++j) {
        prod *= one_plus_q(q_trunc, minus, 2 * j);
        prod *= one_plus_exp_q(y_cap, q_trunc, one, one, 2 * j);
        prod *= one_plus_exp_q(y_cap, q_trunc, one, minus, 2 * j);
      }
      return prod * reciprocal(prod[0]);
    }
    case ThetaKind::theta2: {
      CharSeries prod = lift(exp_linear(y_cap, Rational(0)), q_trunc);
      for (int j = 1; 2 * j - 1 < q_trunc; ++j) {
        prod *= one_plus_q(q_trunc, minus, 2 * j);
        prod *= one_plus_exp_q(y_cap, q_trunc, minus, one, 2 * j - 1);
        prod *= one_plus_exp_q(y_cap, q_trunc, minus, minus, 2 * j - 1);
      }
      return prod * reciprocal(prod[0]);
    }
  }
  throw Error(ErrorKind::DomainError, "unknown theta kind");
}

CharSeries elliptic_factor(EllipticKind kind, int y_cap, int q_trunc) {
  check_caps(y_cap, q_trunc);
  const Rational one(1), minus(-1);
  QSeries scalar = QSeries::constant(1, q_trunc);
  CharSeries numer = lift(exp_linear(y_cap, Rational(0)), q_trunc);
  CharSeries denom = numer;
  for (int j = 1; 2 * j < q_trunc; ++j) {
    const QSeries one_minus = one_plus_q(q_trunc, minus, 2 * j);
    scalar *= one_minus * one_minus;
    denom *= conjugate_pair(y_cap, q_trunc, minus, 2 * j);
    if (kind == EllipticKind::Ell1) {
      const QSeries one_plus = one_plus_q(q_trunc, one, 2 * j);
      scalar = scalar / (one_plus * one_plus);
      numer *= conjugate_pair(y_cap, q_trunc, one, 2 * j);
    }
  }
  if (kind == EllipticKind::Ell2) {
    for (int j = 1; 2 * j - 1 < q_trunc; ++j) {
      const QSeries one_minus_half = one_plus_q(q_trunc, minus, 2 * j - 1);
      scalar = scalar / (one_minus_half * one_minus_half);
      numer *= conjugate_pair(y_cap, q_trunc, minus, 2 * j - 1);
    }
  }
  const YSeries<Rational> leading = kind == EllipticKind::Ell1 ? lhat_unit_factor(y_cap) : ahat_factor(y_cap);
  return lift(leading, q_trunc) * numer * inverse(denom) * scalar;
}

namespace {

int weight_of(const ManifoldData& m) {
  auto w = m.pontryagin_weight();
  if (!w) throw Error(ErrorKind::DimensionError, m.name + ": elliptic genera need real_dim divisible by 4");
  return *w;
}

}  // namespace

GenusSeries elliptic_genus(const ManifoldData& m, EllipticKind kind, int q_trunc) {
  const int w = weight_of(m);
  const ManifoldData data = with_pontryagin(m);
  const auto cls = multiplicative_class(elliptic_factor(kind, 2 * w, q_trunc), ClassKind::pontryagin, w);
  QSeries series = pair_top(cls, data.pontryagin_numbers, w);
  if (kind == EllipticKind::Ell1) series *= pow(Rational(2), static_cast<unsigned>(2 * w));
  return {kind, std::move(series), q_trunc, m.name, false};
}

CharClassPoly<QSeries> witten_bundle_ch(WittenBundle kind, int real_dim, int q_trunc) {
  if (real_dim < 4 || real_dim % 4 != 0) throw Error(ErrorKind::DimensionError, "real_dim must be a positive multiple of 4");
  if (q_trunc < 2) throw Error(ErrorKind::DomainError, "q_trunc must be at least 2");
  const int w = real_dim / 4;
  // Adams operations: psi^r ch(T~) = sum_j (e^{r y_j} + e^{-r y_j}) - real_dim
  //                                = sum_{n>=1} 2 r^{2n}/(2n)! P_n.
  // log ch S_t(E) = sum_r t^r psi^r ch(E) / r, log ch L_t(E) = sum_r (-1)^{r-1} t^r psi^r ch(E) / r.
  // Each tensor factor contributes t = q^k (Theta, Theta1) or t = -q^{k-1/2} (Theta2).
  std::vector<QSeries> log_coeff(static_cast<std::size_t>(w), QSeries(q_trunc));
  for (int n = 1; n <= w; ++n) {
    QSeries f(q_trunc);
    for (int k = 1;; ++k) {
      const int base = kind == WittenBundle::Theta2 ? 2 * k - 1 : 2 * k;
      if (base >= q_trunc) break;
      for (int r = 1; r * base < q_trunc; ++r) {
        Rational sign(1);
        if (kind == WittenBundle::Theta1 && r % 2 == 0) sign = Rational(-1);
        if (kind == WittenBundle::Theta2) sign = Rational(-1);
        Rational term = sign * pow(Rational(r), static_cast<unsigned>(2 * n - 1));
        f.set_coeff(r * base, f.coeff(r * base) + term);
      }
    }
    log_coeff[n - 1] = f * (Rational(2) / factorial(2 * n));
  }
  const auto sums = power_sums(ClassKind::pontryagin, w, 2 * w);
  CharClassPoly<QSeries> exponent(ClassKind::pontryagin, w, QSeries(q_trunc));
  for (int n = 1; n <= w; ++n)
    exponent += sums[n - 1].map_coeffs(QSeries(q_trunc), [&](const Rational& r) { return log_coeff[n - 1] * r; });
  return exp(exponent);
}

namespace {

CharClassPoly<QSeries> bundle_class(EllipticKind kind, int real_dim, int q_trunc) {
  const auto theta = witten_bundle_ch(WittenBundle::Theta, real_dim, q_trunc);
  switch (kind) {
    case EllipticKind::Witten: return theta;
    case EllipticKind::Ell1: return theta * witten_bundle_ch(WittenBundle::Theta1, real_dim, q_trunc);
    case EllipticKind::Ell2: return theta * witten_bundle_ch(WittenBundle::Theta2, real_dim, q_trunc);
  }
  throw Error(ErrorKind::DomainError, "unknown elliptic kind");
}

}  // namespace

QSeries bundle_genus(const ManifoldData& m, EllipticKind kind, int q_trunc) {
  const int w = weight_of(m);
  const ManifoldData data = with_pontryagin(m);
  const GenusKind twist = kind == EllipticKind::Ell1 ? GenusKind::Lhat : GenusKind::Ahat;
  const auto cls = lift(genus_class(twist, w, m.real_dim), q_trunc) * bundle_class(kind, m.real_dim, q_trunc);
  return pair_top(cls, data.pontryagin_numbers, w);
}

std::vector<TwistedIndex> twisted_indices(const ManifoldData& m, IndexFamily family, int max_k) {
  if (max_k < 0) throw Error(ErrorKind::DomainError, "max_k must be non-negative");
  const int w = weight_of(m);
  const ManifoldData data = with_pontryagin(m);
  const int step = family == IndexFamily::B ? 1 : 2;
  const int q_trunc = std::max(2, step * max_k + 1);
  const auto bundle = bundle_class(family == IndexFamily::B ? EllipticKind::Ell2 : EllipticKind::Witten,
                                   m.real_dim, q_trunc);
  const auto ahat = genus_class(GenusKind::Ahat, w, m.real_dim);
  std::vector<TwistedIndex> out;
  for (int k = 0; k <= max_k; ++k) {
    // Coefficient bundle of q^{k/2} (B) or q^k (W), twisted into A-hat.
    const auto coefficient = bundle.map_coeffs(Rational(0), [&](const QSeries& s) { return s.coeff(step * k); });
    TwistedIndex idx;
    idx.k = k;
    idx.value = pair_top(ahat * coefficient, data.pontryagin_numbers, w);
    idx.non_integral = m.spin && !idx.value.is_integer();
    out.push_back(std::move(idx));
  }
  return out;
}

Rational twisted_index(const ManifoldData& m, IndexFamily family, int k) {
  return twisted_indices(m, family, k).back().value;
}

}  // namespace genus
