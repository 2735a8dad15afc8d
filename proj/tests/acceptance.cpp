// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "genus_forge/bounds.hpp"
#include "genus_forge/catalog.hpp"
#include "genus_forge/char_calculus.hpp"
#include "genus_forge/covering.hpp"
#include "genus_forge/elliptic.hpp"
#include "genus_forge/modular.hpp"

using namespace genus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Checker {
  Outcome out;
  int failures = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
    out.pass = false;
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary;
    else if (failures > 3) out.detail += fmt::format("; {} failures in all", failures);
    return out;
  }
};

CatalogFile shipped() { return load_catalog(std::filesystem::path(GENUS_FORGE_SOURCE_DIR) / "data/catalog.json"); }

std::vector<ManifoldData> full_data_entries() {
  std::vector<ManifoldData> out;
  for (const auto& e : shipped().entries)
    if (e.real_dim % 4 == 0 && e.asserted_genera.empty() && (e.has_full_pontryagin() || e.has_full_chern()))
      out.push_back(e);
  return out;
}

Rational gv(const ManifoldData& m, GenusKind k) { return genus_value(m, k).value; }

ManifoldData random_dim8(std::mt19937& rng, int id) {
  std::uniform_int_distribution<int> v(-500, 500);
  ManifoldData m;
  m.name = fmt::format("random8_{}", id);
  m.real_dim = 8;
  m.pontryagin_numbers[{1, 1}] = v(rng);
  m.pontryagin_numbers[{2}] = v(rng);
  return m;
}

Outcome todd_projective() {
  Checker c;
  for (int n = 1; n <= 6; ++n) c.expect(gv(complex_projective(n), GenusKind::Todd) == Rational(1), fmt::format("CP{}", n));
  return c.done("Todd(CP^n) = 1 for n = 1..6");
}

Outcome connected_sum_examples() {
  Checker c;
  const auto cat = shipped();
  const auto t2s6 = product(torus(2), sphere(6));
  const auto m8 = cat.lookup("T2xS6_sharp_B8");
  const auto n8 = cat.lookup("T2xS6_sharp_HP2");
  const auto n8_built = connected_sum(t2s6, quaternionic_projective_plane());
  c.expect(gv(m8, GenusKind::Ahat) == Rational(1), "Ahat(T2xS6 # B8)");
  c.expect(gv(connected_sum(t2s6, cat.lookup("B8")), GenusKind::Ahat) == Rational(1), "Ahat(T2xS6 # B8) rebuilt");
  for (const auto& n : {n8, n8_built}) {
    c.expect(gv(n, GenusKind::Signature) == Rational(1), "sigma(T2xS6 # HP2)");
    c.expect(gv(n, GenusKind::Ahat) == Rational(0), "Ahat(T2xS6 # HP2)");
  }
  return c.done("Ahat(M8) = 1, sigma(N8) = 1, Ahat(N8) = 0");
}

Outcome hypersurface() {
  Checker c;
  for (int n = 1; n <= 8; ++n)
    for (int d = -100; d <= 100; ++d) {
      const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
      c.expect(hypersurface_todd(n, d) == sign * Rational(d) / factorial(static_cast<unsigned>(n + 1)),
               fmt::format("n={} D={}", n, d));
    }
  return c.done("n = 1..8, D = -100..100, exact");
}

constexpr int kTwelve = 25;  // half-exponents 0..24, i.e. through q^12

Outcome formulation_equivalence() {
  Checker c;
  int entries = 0;
  for (const auto& m : full_data_entries()) {
    ++entries;
    const auto ell2 = elliptic_genus(m, EllipticKind::Ell2, kTwelve).series;
    const auto wit = elliptic_genus(m, EllipticKind::Witten, kTwelve).series;
    c.expect(ell2 == bundle_genus(m, EllipticKind::Ell2, kTwelve), m.name + " Ell2 vs <Ahat ch(Theta x Theta2)>");
    c.expect(wit == bundle_genus(m, EllipticKind::Witten, kTwelve), m.name + " W vs <Ahat ch(Theta)>");
    for (const auto& i : twisted_indices(m, IndexFamily::B, kTwelve - 1))
      c.expect(i.value == ell2.coeff(i.k), fmt::format("{} B_{}", m.name, i.k));
    for (const auto& i : twisted_indices(m, IndexFamily::W, 12))
      c.expect(i.value == wit.coeff(2 * i.k), fmt::format("{} W_{}", m.name, i.k));
  }
  return c.done(fmt::format("{} full-data entries, dims 4-16, through q^12", entries));
}

Outcome leading_terms() {
  Checker c;
  int entries = 0;
  for (const auto& m : full_data_entries()) {
    ++entries;
    const Rational ahat = gv(m, GenusKind::Ahat), sig = gv(m, GenusKind::Signature);
    c.expect(elliptic_genus(m, EllipticKind::Ell2, 4).series.coeff(0) == ahat, m.name + " Ell2");
    c.expect(elliptic_genus(m, EllipticKind::Witten, 4).series.coeff(0) == ahat, m.name + " W");
    c.expect(elliptic_genus(m, EllipticKind::Ell1, 4).series.coeff(0) == sig, m.name + " Ell1");
    c.expect(gv(m, GenusKind::Lhat) == sig, m.name + " Lhat");
  }
  return c.done(fmt::format("{} full-data entries", entries));
}

Outcome modular_relation() {
  Checker c;
  const auto cat = shipped();
  std::mt19937 rng(20250101);
  std::vector<ManifoldData> cases = {cat.lookup("HP2"), cat.lookup("K3xK3"), random_dim8(rng, 1), random_dim8(rng, 2)};
  double worst = 0.0;
  for (const auto& m : cases)
    for (double t : {1.5, 2.0}) {
      const auto r = modular_relation_check(m, t, 48, 1e-8);
      worst = std::max(worst, r.abs_error);
      c.expect(r.pass, fmt::format("{} at tau = {}i: error {:.3g}", m.name, t, r.abs_error));
    }
  return c.done(fmt::format("HP2, K3xK3, 2 random dim-8 entries; worst error {:.2g}", worst));
}

Outcome eisenstein_golden() {
  Checker c;
  const auto e4 = eisenstein(EisensteinKind::E4, 8), e6 = eisenstein(EisensteinKind::E6, 8);
  const long long g4[] = {1, 240, 2160, 6720}, g6[] = {1, -504, -16632, -122976};
  for (int n = 0; n <= 3; ++n) {
    c.expect(e4.coeff(2 * n) == Rational(g4[n]), fmt::format("E4 q^{}", n));
    c.expect(e6.coeff(2 * n) == Rational(g6[n]), fmt::format("E6 q^{}", n));
  }
  return c.done("E4: 240, 2160, 6720; E6: -504, -16632, -122976");
}

Outcome witten_fit_both_ways() {
  Checker c;
  const auto cat = shipped();
  std::mt19937 rng(77);
  std::vector<ManifoldData> strings = {cat.lookup("string_dim8_Ahat1"), cat.lookup("T2xS6")};
  for (int i = 0; i < 3; ++i) {
    auto m = random_dim8(rng, i);
    m.pontryagin_numbers[{1, 1}] = 0;
    strings.push_back(m);
  }
  for (const auto& m : strings) c.expect(witten_fit(m, 48).residual_ok, m.name + " residual");
  const auto k3k3 = witten_fit(cat.lookup("K3xK3"), 48);
  c.expect(!k3k3.residual_ok && k3k3.first_residual_order && !k3k3.first_residual.is_zero(), "K3xK3 should fail");
  std::string where = "-";
  if (const auto n = k3k3.first_residual_order)
    where = *n % 2 == 0 ? fmt::format("q^{}", *n / 2) : fmt::format("q^{}/2", *n);
  return c.done(fmt::format("{} string-type entries vanish to q^24; K3xK3 residual {} at {}", strings.size(),
                            k3k3.first_residual.to_string(), where));
}

Outcome spin_integrality() {
  Checker c;
  int count = 0;
  for (const auto& m : full_data_entries()) {
    if (!m.spin) continue;
    for (const auto& i : twisted_indices(m, IndexFamily::B, kTwelve - 1)) {
      ++count;
      c.expect(i.value.is_integer(), fmt::format("{} B_{} = {}", m.name, i.k, i.value.to_string()));
    }
    for (const auto& i : twisted_indices(m, IndexFamily::W, 12)) {
      ++count;
      c.expect(i.value.is_integer(), fmt::format("{} W_{} = {}", m.name, i.k, i.value.to_string()));
    }
  }
  return c.done(fmt::format("{} indices, all integers", count));
}

Outcome analytic_constants() {
  Checker c;
  for (double b : {0.5, 1.0, 2.0, 5.0}) {
    const double s = std::sinh(b), h = std::cosh(b) - 1.0;
    const double exact = (-s + std::sqrt(s * s + 8.0 * h)) / (2.0 * h);
    c.expect(std::abs(c_of_b(2, b) - exact) < 1e-10, fmt::format("C({}) for m = 2", b));
  }
  for (auto [m, p] : {std::pair{4, 5.0}, std::pair{6, 4.0}, std::pair{3, 2.5}}) {
    BoundParams params;
    params.m = m;
    params.p = p;
    const auto r = moser_constant(params);
    const double mu = m / (m - 2.0);
    const double e = p * (mu - 1) / (mu * (p - 1) - p);
    const double expected = std::pow(mu, 2 * mu / ((mu - 1) * (mu - 1)) * e) * std::pow(2.0, 2 / (mu - 1));
    c.expect(std::abs(r.constant - expected) < 1e-12 * expected, fmt::format("Lambda = 0 constant, m = {}", m));
    if (mu < 2.0) continue;  // 50 terms of a ratio-1/mu series reach 1e-12 only for mu >= 2
    double k1 = 0, k2 = 0;
    for (int i = 1; i <= 50; ++i) {
      k1 += i * std::pow(mu, -i);
      k2 += std::pow(mu, -i);
    }
    c.expect(std::abs(r.K1 - k1) < 1e-12 && std::abs(r.K2 - k2) < 1e-12, fmt::format("K sums, m = {}", m));
  }
  return c.done("C(b) to 1e-10; Lambda = 0 constant to 1e-12; K1, K2 to 1e-12");
}

void each_sorted(int k, int lo, const std::function<bool(const std::vector<int>&)>& fits,
                 const std::function<void(const std::vector<int>&)>& f, std::vector<int>& cur) {
  if (static_cast<int>(cur.size()) == k) {
    f(cur);
    return;
  }
  for (int n = cur.empty() ? lo : cur.back();; ++n) {
    cur.push_back(n);
    const bool ok = fits(cur);
    if (ok) each_sorted(k, lo, fits, f, cur);
    cur.pop_back();
    if (!ok) return;
  }
}

Outcome covering() {
  Checker c;
  int ivanov = 0, bfs = 0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> cur;
    each_sorted(
        k, 1, [](const std::vector<int>& v) { return v.back() <= 6; },
        [&](const std::vector<int>& mod) {
          for (int f = 1; f <= 4; ++f) {
            ++ivanov;
            const auto r = cover_diameter(k, mod, f);
            c.expect(r.inequality_holds, fmt::format("Ivanov k={} f={}", k, f));
          }
        },
        cur);
    // every moduli vector up to ordering (diameter is symmetric) with at most 10^4 vertices
    cur.clear();
    each_sorted(
        k, k == 1 ? 1 : 2,
        [](const std::vector<int>& v) {
          long long p = 1;
          for (int n : v) p *= n;
          return p <= 10000;
        },
        [&](const std::vector<int>& mod) {
          ++bfs;
          TorusQuotientGraph g(mod);
          c.expect(g.bfs_diameter() == g.closed_form_diameter(), "BFS vs closed form");
        },
        cur);
  }
  for (int k = 1; k <= 4; ++k)
    for (int p = 0; p <= k; ++p) {
      const auto r = l2_betti_ratio(k, p, 8);
      for (std::size_t j = 1; j < r.size(); ++j) c.expect(r[j] < r[j - 1], "L2 ratio not decreasing");
      c.expect(r.back() < r.front() / pow(Rational(2), static_cast<unsigned>(7 * k - 1)), "L2 ratio decay");
    }
  return c.done(fmt::format("{} Ivanov cases (length diameters), {} BFS graphs, L2 ratios to 0", ivanov, bfs));
}

Outcome torus_vanishing() {
  Checker c;
  const std::regex torus_factor(R"(T\d+(x.*)?)");
  std::vector<ManifoldData> cases;
  for (const auto& e : shipped().entries)
    if (std::regex_match(e.name, torus_factor) && e.name.find("_sharp_") == std::string::npos) cases.push_back(e);
  const std::size_t shipped_count = cases.size();
  for (const auto& x : full_data_entries())
    for (int k : {2, 4})
      if (x.real_dim + k <= 16) cases.push_back(product(torus(k), x));
  for (const auto& m : cases) {
    if (m.has_full_chern()) c.expect(gv(m, GenusKind::Todd).is_zero(), m.name + " Todd");
    for (auto g : {GenusKind::Ahat, GenusKind::Lhat, GenusKind::Signature})
      c.expect(gv(m, g).is_zero(), m.name + " " + std::string(to_string(g)));
    if (m.real_dim % 4 != 0) continue;
    for (auto kind : {EllipticKind::Ell1, EllipticKind::Ell2, EllipticKind::Witten})
      c.expect(elliptic_genus(m, kind, 24).series.is_zero(), m.name + " " + std::string(to_string(kind)));
  }
  return c.done(fmt::format("{} shipped + {} constructed torus products: Todd, Ahat, signature, Ell1, Ell2, W vanish",
                            shipped_count, cases.size() - shipped_count));
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Todd genus of complex projective spaces", 1, todd_projective},
      {2, "connected-sum examples", 1, connected_sum_examples},
      {3, "hypersurface Todd formula", 0, hypersurface},
      {4, "theta products vs twisted-index series", 60, formulation_equivalence},
      {5, "leading q^0 terms", 0, leading_terms},
      {6, "Ell1(-1/tau) = (2tau)^2m Ell2(tau)", 30, modular_relation},
      {7, "Eisenstein coefficients", 0, eisenstein_golden},
      {8, "Witten genus E4/E6 fit", 0, witten_fit_both_ways},
      {9, "spin integrality of twisted indices", 0, spin_integrality},
      {10, "analytic constants", 0, analytic_constants},
      {11, "covering towers", 0, covering},
      {12, "torus factors kill the genera", 0, torus_vanishing},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) {
      o.pass = false;
      o.detail += fmt::format(" (over the {} s budget)", cr.limit_s);
    }
    failed += o.pass ? 0 : 1;
    std::cout << fmt::format("[{}] {:>2}. {}: {} ({:.3f} s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, o.detail, secs);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
