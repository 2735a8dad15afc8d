#pragma once

#include <string>
#include <vector>

#include "genus_forge/char_class_poly.hpp"
#include "genus_forge/manifold.hpp"
#include "genus_forge/qseries.hpp"
#include "genus_forge/yseries.hpp"

namespace genus {

/// Per-root factor: series in the root y with q-series coefficients.
using CharSeries = YSeries<QSeries>;

enum class ThetaKind { theta, theta1, theta2 };
enum class EllipticKind { Ell1, Ell2, Witten };
enum class WittenBundle { Theta, Theta1, Theta2 };
enum class IndexFamily { B, W };

std::string_view to_string(EllipticKind kind);
EllipticKind parse_elliptic_kind(std::string_view name);

/// Theta quotients expanded straight from the Jacobi triple products:
///   theta : x theta'(0,tau) / theta(x,tau)
///   theta1: theta1(x,tau) / theta1(0,tau)
///   theta2: theta2(x,tau) / theta2(0,tau)
/// with y = 2 pi i x. y_cap and q_trunc (half-exponents) must be >= 2.
CharSeries theta_ratio(ThetaKind kind, int y_cap, int q_trunc);

/// Closed-form per-root factors of Ell1, Ell2 and the Witten genus, each with
/// constant coefficient 1. The Ell1 genus carries an extra factor 2 per root.
CharSeries elliptic_factor(EllipticKind kind, int y_cap, int q_trunc);

struct GenusSeries {
  EllipticKind kind;
  QSeries series;
  int q_trunc = 0;
  std::string manifold;
  bool asserted_input = false;
};

/// Pairs the theta-product factor with the manifold's Pontryagin numbers.
GenusSeries elliptic_genus(const ManifoldData& m, EllipticKind kind, int q_trunc);

/// Chern character of a Witten bundle of the reduced complexified tangent
/// bundle of a real_dim-manifold, as a polynomial in p_i with q-series
/// coefficients (weight cap real_dim/4).
CharClassPoly<QSeries> witten_bundle_ch(WittenBundle kind, int real_dim, int q_trunc);

/// The same genera assembled from bundles:
///   Ell1 = <L-hat ch(Theta (x) Theta1)>, Ell2 = <A-hat ch(Theta (x) Theta2)>,
///   W = <A-hat ch(Theta)>.
QSeries bundle_genus(const ManifoldData& m, EllipticKind kind, int q_trunc);

struct TwistedIndex {
  int k = 0;
  Rational value;
  /// Set when the manifold is spin but the index is not an integer.
  bool non_integral = false;
};

/// ind(D (x) B_k) for k = 0..max_k (B_k is the q^{k/2} coefficient of
/// Theta (x) Theta2) or ind(D (x) W_k) (the q^k coefficient of Theta).
std::vector<TwistedIndex> twisted_indices(const ManifoldData& m, IndexFamily family, int max_k);
Rational twisted_index(const ManifoldData& m, IndexFamily family, int k);

}  // namespace genus
