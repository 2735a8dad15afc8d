#include "genus_forge/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "genus_forge/error.hpp"

namespace genus {
namespace {

// Kronrod 15-point nodes and weights on [-1, 1]; odd indices are the Gauss 7 nodes.
constexpr std::array<double, 8> kXk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double kronrod;
  double error;
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWk[7] * fc, g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double s = f(c - h * kXk[i]) + f(c + h * kXk[i]);
    k += kWk[i] * s;
    if (i % 2 == 1) g += kWg[i / 2] * s;
  }
  return {k * h, std::abs((k - g) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  const Segment whole = gauss_kronrod(f, a, b);
  if (!std::isfinite(whole.kronrod)) return whole.kronrod;
  if (whole.error <= tol || depth >= 40) return whole.kronrod;
  const double mid = 0.5 * (a + b);
  return integrate_rec(f, a, mid, 0.5 * tol, depth + 1) + integrate_rec(f, mid, b, 0.5 * tol, depth + 1);
}

struct RootProblem {
  int m;
  double b;
  double rhs;

  double lhs(double x) const {
    const int e = m - 1;
    const double integral = integrate([&](double t) { return std::pow(std::cosh(t) + x * std::sinh(t), e); }, 0.0, b);
    return x * integral;
  }
  double g(double x) const { return lhs(x) - rhs; }
};

RootProblem make_problem(int m, double b) {
  if (m < 2) throw Error(ErrorKind::DomainError, "c_of_b needs m >= 2");
  if (!(b > 0.0) || !std::isfinite(b)) throw Error(ErrorKind::DomainError, "c_of_b needs b > 0");
  const int e = m - 1;
  const double rhs = integrate([&](double t) { return std::pow(std::sin(t), e); }, 0.0, std::numbers::pi);
  return {m, b, rhs};
}

// g(0) = -rhs < 0 and g increases on x >= 0; grow hi until g(hi) > 0.
double find_upper(const RootProblem& prob) {
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double g = prob.g(hi);
    if (std::isnan(g)) break;
    if (g > 0.0) return hi;
    hi *= 2.0;
  }
  throw Error(ErrorKind::RootNotBracketed, fmt::format("no sign change for m={}, b={:g}", prob.m, prob.b));
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  const Segment rough = gauss_kronrod(f, a, b);
  const double tol = std::max(rel_tol * std::abs(rough.kronrod), 1e-300);
  return integrate_rec(f, a, b, tol, 0);
}

double c_of_b(int m, double b) {
  const RootProblem prob = make_problem(m, b);
  double lo = 0.0, hi = find_upper(prob);
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (prob.g(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double c_of_b_secant(int m, double b) {
  const RootProblem prob = make_problem(m, b);
  double lo = 0.0, hi = find_upper(prob);
  double glo = prob.g(lo), ghi = prob.g(hi);
  int side = 0;
  for (int it = 0; it < 500; ++it) {
    const double x = (lo * ghi - hi * glo) / (ghi - glo);
    const double gx = prob.g(x);
    if (gx == 0.0 || hi - lo < 1e-15 * hi) return x;
    if ((gx > 0.0) == (ghi > 0.0)) {
      hi = x;
      ghi = gx;
      if (side == 1) glo *= 0.5;  // Illinois modification
      side = 1;
    } else {
      lo = x;
      glo = gx;
      if (side == -1) ghi *= 0.5;
      side = -1;
    }
    if (std::abs(hi - lo) < 1e-14 * std::abs(hi)) break;
  }
  return (lo * ghi - hi * glo) / (ghi - glo);
}

namespace {

double resolve_v(const BoundParams& p) {
  if (p.m > 2) {
    const double forced = p.m / 2.0;
    if (p.v && std::abs(*p.v - forced) > 1e-12)
      throw Error(ErrorKind::DomainError, "v is fixed to m/2 when m > 2");
    return forced;
  }
  const double v = p.v.value_or((1.0 + p.p) / 2.0);
  if (!(v > 1.0)) throw Error(ErrorKind::DomainError, "v must exceed 1 for m = 2");
  return v;
}

void validate(const BoundParams& p) {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (p.m < 2) throw Error(ErrorKind::DomainError, "m must be at least 2");
  if (!positive(p.p)) throw Error(ErrorKind::DomainError, "p must be positive");
  if (!std::isfinite(p.lambda) || p.lambda < 0.0) throw Error(ErrorKind::DomainError, "lambda must be >= 0");
  if (!positive(p.diam)) throw Error(ErrorKind::DomainError, "diam must be positive");
  if (!positive(p.b)) throw Error(ErrorKind::DomainError, "b must be positive");
  if (!positive(p.cmp)) throw Error(ErrorKind::DomainError, "cmp must be positive");
  if (p.rank < 1) throw Error(ErrorKind::DomainError, "rank must be at least 1");
}

}  // namespace

BoundReport moser_constant(const BoundParams& params) {
  validate(params);
  BoundReport r;
  r.inputs = params;
  r.v = resolve_v(params);
  r.mu = r.v / (r.v - 1.0);
  const double denom = r.mu * (params.p - 1.0) - params.p;
  if (!(denom > 0.0))
    throw Error(ErrorKind::ExponentDomainError, fmt::format("mu(p-1) - p = {:g} must be positive", denom));
  r.K1 = r.mu / ((r.mu - 1.0) * (r.mu - 1.0));
  r.K2 = 1.0 / (r.mu - 1.0);
  r.c_of_b = c_of_b(params.m, params.b);
  r.R = params.diam / (params.b * r.c_of_b);
  const double exponent = params.p * (r.mu - 1.0) / denom;
  const double lambda_exponent = 0.5 * (r.mu - 1.0) / denom;
  r.B = params.cmp * std::pow(params.lambda, lambda_exponent) * std::pow(r.R, exponent) + 2.0;
  r.constant = std::pow(r.mu, 2.0 * r.K1 * exponent) * std::pow(r.B, 2.0 * r.K2);
  return r;
}

double berard_dim_bound(long long rank, double l_sup) {
  if (rank < 1) throw Error(ErrorKind::DomainError, "rank must be at least 1");
  if (!(l_sup >= 1.0)) throw Error(ErrorKind::DomainError, "sup L(s) is at least 1 by Cauchy-Schwarz");
  return static_cast<double>(rank) * l_sup;
}

BoundReport index_bound_report(const BoundParams& params) {
  BoundReport r = moser_constant(params);
  // Kernel and cokernel obey the same bound for a self-adjoint operator.
  const double kernel = berard_dim_bound(params.rank, r.constant);
  const double cokernel = berard_dim_bound(params.rank, r.constant);
  r.dim_bound = kernel;
  r.index_bound = std::max(kernel, cokernel);
  return r;
}

}  // namespace genus
