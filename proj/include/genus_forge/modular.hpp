#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>

#include "genus_forge/manifold.hpp"
#include "genus_forge/qseries.hpp"

namespace genus {

enum class EisensteinKind { E4, E6 };

/// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(EisensteinKind kind, int q_trunc);

/// Sum of d^power over the divisors d of n.
Rational divisor_sum(int n, unsigned power);

struct ModularFit {
  int weight = 0;
  /// a_ij for the monomial E4^i E6^j, keyed by (i, j).
  std::map<std::pair<int, int>, Rational> coefficients;
  bool residual_ok = false;
  int checked_order = 0;
  /// First half-exponent where W - sum a_ij E4^i E6^j is nonzero, if any.
  std::optional<int> first_residual_order;
  Rational first_residual;
};

/// Fits the Witten genus of a 4m-manifold by weight-2m monomials in E4, E6 on
/// its leading coefficients, then checks the remaining ones up to q_trunc.
ModularFit witten_fit(const ManifoldData& m, int q_trunc);

struct ModularCheck {
  std::complex<double> lhs;  // Ell1(-1/tau)
  std::complex<double> rhs;  // (2 tau)^{2m} Ell2(tau)
  double abs_error = 0.0;
  bool pass = false;
};

/// Numeric check of Ell1(-1/tau) = (2 tau)^{2m} Ell2(tau) at tau = i * tau_im.
ModularCheck modular_relation_check(const ManifoldData& m, double tau_im, int q_trunc, double tol);

}  // namespace genus
