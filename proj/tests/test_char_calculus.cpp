#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus_forge/catalog.hpp"
#include "genus_forge/char_calculus.hpp"

using namespace genus;

namespace {

using Poly = std::vector<Rational>;  // coefficients of s^0..s^cap

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Elementary symmetric functions of explicit roots, e_0..e_cap.
Poly elementary(const std::vector<Rational>& roots, int cap) {
  Poly e(static_cast<std::size_t>(cap) + 1, Rational(0));
  e[0] = 1;
  for (const auto& r : roots)
    for (int i = cap; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * r;
  return e;
}

// Oracle: prod_j Q(s * t_j) expanded directly in s, compared against the class
// polynomial evaluated at e_i(t). For pontryagin factors t_j plays y_j^2.
void check_against_roots(const YSeries<Rational>& factor, ClassKind kind, int cap, std::mt19937& rng) {
  const int step = kind == ClassKind::pontryagin ? 2 : 1;
  const auto cls = multiplicative_class(factor, kind, cap);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), count(1, cap + 2);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> roots;
    for (int j = count(rng); j > 0; --j) roots.emplace_back(num(rng), den(rng));
    Poly direct(static_cast<std::size_t>(cap) + 1, Rational(0));
    direct[0] = 1;
    for (const auto& t : roots) {
      Poly one(direct.size(), Rational(0));
      Rational tp(1);
      for (int n = 0; n <= cap; ++n, tp = tp * t) one[static_cast<std::size_t>(n)] = factor[step * n] * tp;
      direct = poly_mul(direct, one);
    }
    const auto e = elementary(roots, cap);
    Poly via_class(direct.size(), Rational(0));
    for (const auto& [mono, c] : cls.terms()) {
      Rational v = c;
      for (int i : mono) v = v * e[static_cast<std::size_t>(i)];
      via_class[static_cast<std::size_t>(weight(mono))] += v;
    }
    CHECK(direct == via_class);
  }
}

ManifoldData pontryagin_only(const std::string& name, int real_dim, CharNumbers p, bool spin = true) {
  ManifoldData m;
  m.name = name;
  m.real_dim = real_dim;
  m.pontryagin_numbers = std::move(p);
  m.spin = spin;
  return m;
}

Rational gv(const ManifoldData& m, GenusKind k) { return genus_value(m, k).value; }

std::vector<ManifoldData> full_entries() {
  const auto cat = load_catalog(std::filesystem::path(GENUS_FORGE_SOURCE_DIR) / "data/catalog.json");
  std::vector<ManifoldData> out;
  for (const auto& e : cat.entries)
    if (e.has_full_pontryagin() || e.has_full_chern()) out.push_back(e);
  for (int n = 1; n <= 4; ++n) out.push_back(complex_projective(n));
  return out;
}

bool has_data_for(const ManifoldData& m, GenusKind k) {
  if (k == GenusKind::Todd) return m.has_full_chern();
  return m.has_full_pontryagin() || m.has_full_chern();
}

}  // namespace

TEST_CASE("low-weight terms") {
  const auto ahat = multiplicative_class(ahat_factor(8), ClassKind::pontryagin, 2);
  CHECK(ahat.coeff({1}) == Rational(-1, 24));
  CHECK(ahat.coeff({1, 1}) == Rational(7, 5760));
  CHECK(ahat.coeff({2}) == Rational(-4, 5760));

  const auto todd = multiplicative_class(todd_factor(4), ClassKind::chern, 2);
  CHECK(todd.coeff({1}) == Rational(1, 2));
  CHECK(todd.coeff({1, 1}) == Rational(1, 12));
  CHECK(todd.coeff({2}) == Rational(1, 12));

  const auto sig = multiplicative_class(signature_factor(4), ClassKind::pontryagin, 2);
  CHECK(sig.coeff({1}) == Rational(1, 3));
  CHECK(sig.coeff({2}) == Rational(7, 45));
  CHECK(sig.coeff({1, 1}) == Rational(-1, 45));

  YSeries<Rational> one(6, Rational(0));
  one[0] = 1;
  CHECK(multiplicative_class(one, ClassKind::pontryagin, 3) ==
        CharClassPoly<Rational>::constant(ClassKind::pontryagin, 3, Rational(1)));
}

TEST_CASE("explicit-root oracle") {
  std::mt19937 rng(424242);
  for (int cap = 1; cap <= 5; ++cap) {
    check_against_roots(ahat_factor(2 * cap), ClassKind::pontryagin, cap, rng);
    check_against_roots(lhat_unit_factor(2 * cap), ClassKind::pontryagin, cap, rng);
    check_against_roots(signature_factor(2 * cap), ClassKind::pontryagin, cap, rng);
    check_against_roots(todd_factor(cap), ClassKind::chern, cap, rng);
  }
}

TEST_CASE("root-count stability") {
  for (int cap = 1; cap <= 6; ++cap) {
    CHECK(multiplicative_class(ahat_factor(2 * cap), ClassKind::pontryagin, cap, 2 * cap) ==
          multiplicative_class(ahat_factor(2 * cap), ClassKind::pontryagin, cap, 2 * cap + 2));
    CHECK(multiplicative_class(todd_factor(cap), ClassKind::chern, cap, 2 * cap) ==
          multiplicative_class(todd_factor(cap), ClassKind::chern, cap, 2 * cap + 2));
  }
}

TEST_CASE("odd factor with pontryagin generators") {
  try {
    multiplicative_class(todd_factor(4), ClassKind::pontryagin, 2);
    FAIL("expected ParityError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityError);
  }
}

TEST_CASE("genus examples") {
  CHECK(gv(builtin("CP2"), GenusKind::Todd) == Rational(1));
  CHECK(gv(builtin("T4"), GenusKind::Ahat) == Rational(0));
  CHECK(gv(builtin("K3"), GenusKind::Ahat) == Rational(2));
  for (auto k : {GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature}) CHECK(gv(sphere(6), k) == Rational(0));
  CHECK_THROWS_AS(genus_value(sphere(6), GenusKind::Todd), Error);
  CHECK(gv(quaternionic_projective_plane(), GenusKind::Signature) == Rational(7 * 7 - 4, 45));
  try {
    genus_value(pontryagin_only("B", 8, {}), GenusKind::Ahat);
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
}

TEST_CASE("chern to pontryagin") {
  CHECK(chern_to_pontryagin(complex_projective(2)).pontryagin_numbers.at({1}) == 3);
  auto k3 = k3_surface();
  k3.pontryagin_numbers.clear();
  const auto conv = chern_to_pontryagin(k3);
  CHECK(conv.pontryagin_numbers.at({1}) == -48);
  CHECK(gv(conv, GenusKind::Ahat) == Rational(2));
  for (const auto& [p, v] : chern_to_pontryagin(torus(8)).pontryagin_numbers) CHECK(v == 0);

  auto bad = k3_surface();
  bad.pontryagin_numbers[{1}] = -40;
  try {
    chern_to_pontryagin(bad);
    FAIL("expected InconsistentData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentData);
  }
}

TEST_CASE("builtins") {
  const auto cp3 = complex_projective(3);
  CHECK(cp3.chern_numbers.at({1, 1, 1}) == 64);
  CHECK(cp3.chern_numbers.at({2, 1}) == 24);
  CHECK(cp3.chern_numbers.at({3}) == 4);
  const auto hp2 = quaternionic_projective_plane();
  CHECK(Rational(7 * hp2.pontryagin_numbers.at({2}) - hp2.pontryagin_numbers.at({1, 1}), 45) == Rational(1));
  CHECK(gv(hp2, GenusKind::Signature) == Rational(1));
  try {
    builtin("RP2");
    FAIL("expected UnknownManifold");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownManifold);
  }
  for (int n = 1; n <= 6; ++n) CHECK(gv(complex_projective(n), GenusKind::Todd) == Rational(1));
}

TEST_CASE("products and connected sums from the examples") {
  CHECK(gv(product(complex_projective(1), complex_projective(1)), GenusKind::Todd) == Rational(1));
  CHECK(gv(product(torus(2), sphere(6)), GenusKind::Signature) == Rational(0));
  CHECK(gv(product(k3_surface(), k3_surface()), GenusKind::Ahat) == Rational(4));

  auto b8 = pontryagin_only("B8", 8, {});
  b8.asserted_genera[GenusKind::Ahat] = Rational(1);
  const auto t2s6 = product(torus(2), sphere(6));
  const auto m8 = connected_sum(t2s6, b8);
  CHECK(gv(m8, GenusKind::Ahat) == Rational(1));
  CHECK(genus_value(m8, GenusKind::Ahat).asserted);
  const auto n8 = connected_sum(t2s6, quaternionic_projective_plane());
  CHECK(gv(n8, GenusKind::Signature) == Rational(1));
  CHECK(gv(n8, GenusKind::Ahat) == Rational(0));

  try {
    product(b8, k3_surface());
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
  try {
    connected_sum(k3_surface(), quaternionic_projective_plane());
    FAIL("expected DimensionError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionError);
  }
}

TEST_CASE("hypersurface todd matches the closed form") {
  CHECK(hypersurface_todd(2, 6) == Rational(1));
  CHECK(hypersurface_todd(1, 2) == Rational(-1));
  CHECK(hypersurface_todd(3, 0) == Rational(0));
  CHECK_THROWS_AS(hypersurface_todd(0, 1), Error);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-100, 100);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const Rational D(d(rng));
      const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
      CHECK(hypersurface_todd(n, D) == sign * D / factorial(static_cast<unsigned>(n + 1)));
    }
}

TEST_CASE("multiplicativity, additivity and L-hat = signature over the catalog") {
  const auto entries = full_entries();
  const GenusKind kinds[] = {GenusKind::Todd, GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature};
  for (const auto& m : entries)
    if (m.real_dim % 4 == 0) CHECK(gv(m, GenusKind::Lhat) == gv(m, GenusKind::Signature));

  for (const auto& a : entries)
    for (const auto& b : entries) {
      if (a.real_dim + b.real_dim > 16) continue;
      const auto ab = product(a, b);
      for (auto k : kinds) {
        if (!has_data_for(a, k) || !has_data_for(b, k)) continue;
        if (k != GenusKind::Todd && (a.real_dim % 4 != 0 || b.real_dim % 4 != 0)) {
          if (ab.real_dim % 4 == 0) CHECK(gv(ab, k) == Rational(0));
          continue;
        }
        INFO(a.name << " x " << b.name << " " << to_string(k));
        CHECK(gv(ab, k) == gv(a, k) * gv(b, k));
      }
      if (a.real_dim == b.real_dim && a.real_dim % 4 == 0) {
        const auto sum = connected_sum(a, b);
        for (auto k : {GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature})
          CHECK(gv(sum, k) == gv(a, k) + gv(b, k));
      }
    }
}
