#include "genus_forge/modular.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "genus_forge/elliptic.hpp"

namespace genus {

Rational divisor_sum(int n, unsigned power) {
  Rational acc(0);
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += pow(Rational(d), power);
    if (d != n / d) acc += pow(Rational(n / d), power);
  }
  return acc;
}

QSeries eisenstein(EisensteinKind kind, int q_trunc) {
  if (q_trunc < 2) throw Error(ErrorKind::DomainError, "q_trunc must be at least 2");
  const Rational scale = kind == EisensteinKind::E4 ? Rational(240) : Rational(-504);
  const unsigned power = kind == EisensteinKind::E4 ? 3 : 5;
  QSeries e = QSeries::constant(1, q_trunc);
  for (int n = 1; 2 * n < q_trunc; ++n) e.set_coeff(2 * n, scale * divisor_sum(n, power));
  return e;
}

namespace {

struct EchelonRow {
  std::vector<Rational> a;
  Rational rhs;
  std::size_t pivot;
};

// Inserts a row into an echelon basis; returns false when it is dependent.
bool insert_row(std::vector<EchelonRow>& basis, std::vector<Rational> a, Rational rhs) {
  for (const auto& row : basis) {
    if (a[row.pivot].is_zero()) continue;
    const Rational f = a[row.pivot] / row.a[row.pivot];
    for (std::size_t c = 0; c < a.size(); ++c) a[c] -= f * row.a[c];
    rhs -= f * row.rhs;
  }
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (!a[c].is_zero()) {
      basis.push_back({std::move(a), std::move(rhs), c});
      return true;
    }
  }
  return false;
}

std::vector<Rational> back_substitute(std::vector<EchelonRow> basis, std::size_t n) {
  // Full Gauss-Jordan on the collected independent rows.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t p = basis[i].pivot;
    const Rational inv = reciprocal(basis[i].a[p]);
    for (auto& v : basis[i].a) v *= inv;
    basis[i].rhs *= inv;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (r == i || basis[r].a[p].is_zero()) continue;
      const Rational f = basis[r].a[p];
      for (std::size_t c = 0; c < n; ++c) basis[r].a[c] -= f * basis[i].a[c];
      basis[r].rhs -= f * basis[i].rhs;
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (const auto& row : basis) x[row.pivot] = row.rhs;
  return x;
}

}  // namespace

ModularFit witten_fit(const ManifoldData& m, int q_trunc) {
  const QSeries w = elliptic_genus(m, EllipticKind::Witten, q_trunc).series;
  const int weight = m.real_dim / 2;
  std::vector<std::pair<int, int>> monos;
  for (int i = 0; 4 * i <= weight; ++i)
    if ((weight - 4 * i) % 6 == 0) monos.emplace_back(i, (weight - 4 * i) / 6);
  if (monos.empty())
    throw Error(ErrorKind::FitError, m.name + ": no E4^i E6^j monomial of weight " + std::to_string(weight));

  const QSeries e4 = eisenstein(EisensteinKind::E4, q_trunc), e6 = eisenstein(EisensteinKind::E6, q_trunc);
  std::vector<QSeries> basis_series;
  for (auto [i, j] : monos) {
    QSeries s = QSeries::constant(1, q_trunc);
    for (int t = 0; t < i; ++t) s *= e4;
    for (int t = 0; t < j; ++t) s *= e6;
    basis_series.push_back(std::move(s));
  }

  // Leading integer-power coefficients until the system has full rank.
  std::vector<EchelonRow> echelon;
  for (int n = 0; n < q_trunc && echelon.size() < monos.size(); n += 2) {
    std::vector<Rational> row;
    for (const auto& s : basis_series) row.push_back(s.coeff(n));
    insert_row(echelon, std::move(row), w.coeff(n));
  }
  if (echelon.size() < monos.size())
    throw Error(ErrorKind::FitError, m.name + ": leading coefficients do not determine the E4/E6 fit");
  const auto a = back_substitute(std::move(echelon), monos.size());

  ModularFit fit;
  fit.weight = weight;
  fit.checked_order = q_trunc;
  QSeries residual = w;
  for (std::size_t t = 0; t < monos.size(); ++t) {
    fit.coefficients[monos[t]] = a[t];
    residual -= basis_series[t] * a[t];
  }
  fit.residual_ok = true;
  for (int n = 0; n < q_trunc; ++n) {
    if (!residual.coeff(n).is_zero()) {
      fit.residual_ok = false;
      fit.first_residual_order = n;
      fit.first_residual = residual.coeff(n);
      break;
    }
  }
  return fit;
}

ModularCheck modular_relation_check(const ManifoldData& m, double tau_im, int q_trunc, double tol) {
  if (!(tau_im > 1.0))
    throw Error(ErrorKind::ConvergenceRisk, "tau_im must exceed 1 so that q' = exp(-2 pi / tau_im) stays small");
  const QSeries ell1 = elliptic_genus(m, EllipticKind::Ell1, q_trunc).series;
  const QSeries ell2 = elliptic_genus(m, EllipticKind::Ell2, q_trunc).series;
  constexpr double pi = std::numbers::pi;
  const std::complex<double> tau(0.0, tau_im);
  const std::complex<double> q(std::exp(-2.0 * pi * tau_im), 0.0);
  const std::complex<double> q_dual(std::exp(-2.0 * pi / tau_im), 0.0);
  ModularCheck out;
  out.lhs = series_eval_numeric(ell1, q_dual);
  out.rhs = std::pow(2.0 * tau, m.real_dim / 2) * series_eval_numeric(ell2, q);
  out.abs_error = std::abs(out.lhs - out.rhs);
  out.pass = out.abs_error < tol;
  return out;
}

}  // namespace genus
