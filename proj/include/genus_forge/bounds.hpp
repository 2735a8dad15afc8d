#pragma once

#include <functional>
#include <optional>

namespace genus {

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-14);

/// Unique positive root x of  x * int_0^b (cosh t + x sinh t)^{m-1} dt = int_0^pi sin^{m-1} t dt,
/// by bisection (relative accuracy 1e-10 or better).
double c_of_b(int m, double b);
/// Same root by a derivative-free bracketing secant (Illinois) iteration.
double c_of_b_secant(int m, double b);

struct BoundParams {
  int m = 4;            // dimension
  double p = 5.0;       // curvature-integral exponent, p > m/2
  double lambda = 0.0;  // normalised curvature integral
  double diam = 1.0;
  double b = 1.0;       // curvature-diameter parameter
  double cmp = 1.0;     // the unspecified constant C(m, p)
  std::optional<double> v;  // m/2 when m > 2; defaults to (1 + p)/2 when m = 2
  long long rank = 1;   // bundle rank for the dimension bound
};

struct BoundReport {
  BoundParams inputs;
  double v = 0, mu = 0, K1 = 0, K2 = 0, B = 0, c_of_b = 0, R = 0, constant = 0;
  std::optional<double> dim_bound;
  std::optional<double> index_bound;
};

/// Sup-norm constant C(m, p, R, Lambda) of the Moser iteration, with every intermediate.
BoundReport moser_constant(const BoundParams& params);
/// dim F <= l * sup L(s).
double berard_dim_bound(long long rank, double l_sup);
/// Moser constant fed into the dimension bound; |ind| <= max(dim ker, dim coker).
BoundReport index_bound_report(const BoundParams& params);

}  // namespace genus
