#include "genus_forge/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "genus_forge/bounds.hpp"
#include "genus_forge/catalog.hpp"
#include "genus_forge/covering.hpp"
#include "genus_forge/elliptic.hpp"
#include "genus_forge/modular.hpp"

namespace genus {
namespace {

using ojson = nlohmann::ordered_json;

std::string q_power_label(int half_exp) {
  return half_exp % 2 == 0 ? std::to_string(half_exp / 2) : std::to_string(half_exp) + "/2";
}

std::string real(double x) { return fmt::format("{:.17g}", x); }

ojson series_json(const QSeries& s) {
  ojson coeffs = ojson::object();
  for (const auto& [n, c] : s.terms()) coeffs[q_power_label(n)] = c.to_string();
  return coeffs;
}

struct Options {
  bool json = false;
  std::string catalog_path;
  std::string manifold;
  std::string genus;
  std::string kind = "witten";
  std::string family = "W";
  int order = 24;
  int max_k = 4;
  double tau_im = 1.5;
  double tol = 1e-8;
  BoundParams bound;
  std::optional<double> v;
  int k = 1;
  int p_degree = 0;
  int depth = 1;
  int factor = 1;
  std::vector<int> base;
  std::string export_path;
};

class Runner {
 public:
  Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

  CatalogFile catalog() const {
    return load_catalog(o_.catalog_path.empty() ? default_catalog_path() : std::filesystem::path(o_.catalog_path));
  }
  ManifoldData manifold() const { return catalog().lookup(o_.manifold); }
  int q_trunc() const {
    if (o_.order < 1) throw Error(ErrorKind::DomainError, "--order must be at least 1");
    return 2 * o_.order;
  }

  void catalog_list() {
    const auto cat = catalog();
    if (o_.json) {
      ojson names = ojson::array();
      for (const auto& e : cat.entries) names.push_back(e.name);
      out_ << ojson{{"entries", names}, {"builtin", {"CP<n>", "S<n>", "T<k>", "K3", "HP2"}}}.dump(2) << "\n";
      return;
    }
    for (const auto& e : cat.entries)
      out_ << fmt::format("{:<24} dim {:>2}{}{}\n", e.name, e.real_dim, e.spin ? " spin" : "",
                          e.asserted_genera.empty() ? "" : " (asserted)");
    out_ << "builtin: CP<n> S<n> T<k> K3 HP2\n";
  }

  void catalog_show() {
    const auto m = manifold();
    if (o_.json) {
      out_ << to_json(m).dump(2) << "\n";
      return;
    }
    out_ << m.name << ": real_dim " << m.real_dim;
    if (m.complex_dim) out_ << ", complex_dim " << *m.complex_dim;
    out_ << (m.spin ? ", spin" : "") << (m.string ? ", string" : "") << "\n";
    for (const auto& [p, v] : m.pontryagin_numbers) out_ << "  p[" << partition_key(p) << "] = " << v << "\n";
    for (const auto& [p, v] : m.chern_numbers) out_ << "  c[" << partition_key(p) << "] = " << v << "\n";
    for (const auto& [k, v] : m.asserted_genera) out_ << "  asserted " << to_string(k) << " = " << v << "\n";
  }

  void catalog_export() {
    const std::string text = save_catalog(catalog());
    if (o_.export_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.export_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::CatalogError, "cannot write " + o_.export_path);
    f << text;
  }

  void compute() {
    const auto kind = parse_genus_kind(o_.genus);
    const auto m = manifold();
    const auto g = genus_value(m, kind);
    if (o_.json) {
      out_ << ojson{{"manifold", m.name}, {"genus", to_string(kind)}, {"value", g.value.to_string()},
                    {"asserted", g.asserted}}
                  .dump(2)
           << "\n";
      return;
    }
    out_ << g.value << (g.asserted ? " (asserted)" : "") << "\n";
  }

  void elliptic() {
    const auto kind = parse_elliptic_kind(o_.kind);
    const auto m = manifold();
    const auto g = elliptic_genus(m, kind, q_trunc());
    if (o_.json) {
      out_ << ojson{{"manifold", m.name}, {"kind", to_string(kind)}, {"order", o_.order},
                    {"coefficients", series_json(g.series)}}
                  .dump(2)
           << "\n";
      return;
    }
    out_ << g.series.to_string() << "\n";
  }

  void indices() {
    if (o_.family != "B" && o_.family != "W") throw Error(ErrorKind::DomainError, "--family must be B or W");
    const auto family = o_.family == "B" ? IndexFamily::B : IndexFamily::W;
    const auto m = manifold();
    const auto idx = twisted_indices(m, family, o_.max_k);
    bool warning = false;
    for (const auto& i : idx) warning = warning || i.non_integral;
    if (o_.json) {
      ojson list = ojson::array();
      for (const auto& i : idx)
        list.push_back({{"k", i.k},
                        {"q_power", q_power_label(family == IndexFamily::B ? i.k : 2 * i.k)},
                        {"value", i.value.to_string()}});
      out_ << ojson{{"manifold", m.name}, {"family", o_.family}, {"indices", list}, {"non_integral_warning", warning}}
                  .dump(2)
           << "\n";
      return;
    }
    for (const auto& i : idx) out_ << o_.family << "_" << i.k << ": " << i.value << "\n";
    if (warning) out_ << "warning: non-integral index on a spin manifold\n";
  }

  void modular_fit() {
    const auto m = manifold();
    const auto fit = witten_fit(m, q_trunc());
    if (o_.json) {
      ojson coeffs = ojson::array();
      for (const auto& [ij, a] : fit.coefficients) coeffs.push_back({{"i", ij.first}, {"j", ij.second}, {"a", a.to_string()}});
      ojson doc = {{"manifold", m.name}, {"weight", fit.weight}, {"coefficients", coeffs},
                   {"residual_ok", fit.residual_ok}, {"checked_order", o_.order}};
      if (fit.first_residual_order)
        doc["first_residual"] = {{"q_power", q_power_label(*fit.first_residual_order)},
                                 {"value", fit.first_residual.to_string()}};
      out_ << doc.dump(2) << "\n";
      return;
    }
    for (const auto& [ij, a] : fit.coefficients)
      out_ << "a[" << ij.first << "," << ij.second << "] = " << a << "\n";
    out_ << "residual " << (fit.residual_ok ? "vanishes" : "nonzero");
    if (fit.first_residual_order)
      out_ << " (q^" << q_power_label(*fit.first_residual_order) << " coefficient " << fit.first_residual << ")";
    out_ << " through q^" << o_.order << "\n";
  }

  void modular_check() {
    const auto m = manifold();
    const auto r = modular_relation_check(m, o_.tau_im, q_trunc(), o_.tol);
    if (o_.json) {
      out_ << ojson{{"manifold", m.name}, {"tau_im", o_.tau_im}, {"order", o_.order}, {"tol", o_.tol},
                    {"lhs", r.lhs.real()}, {"rhs", r.rhs.real()}, {"abs_error", r.abs_error}, {"pass", r.pass}}
                  .dump(2)
           << "\n";
      return;
    }
    out_ << "Ell1(-1/tau)        = " << real(r.lhs.real()) << "\n"
         << "(2tau)^2m Ell2(tau) = " << real(r.rhs.real()) << "\n"
         << "abs error           = " << real(r.abs_error) << (r.pass ? "  PASS" : "  FAIL") << "\n";
  }

  void bound_cb() {
    const double root = c_of_b(o_.bound.m, o_.bound.b);
    if (o_.json) {
      out_ << ojson{{"m", o_.bound.m}, {"b", o_.bound.b}, {"c_of_b", root}}.dump(2) << "\n";
      return;
    }
    out_ << real(root) << "\n";
  }

  void bound_index() {
    BoundParams params = o_.bound;
    params.v = o_.v;
    const auto r = index_bound_report(params);
    const std::vector<std::pair<const char*, double>> rows = {
        {"v", r.v}, {"mu", r.mu}, {"K1", r.K1}, {"K2", r.K2}, {"c_of_b", r.c_of_b}, {"R", r.R},
        {"B", r.B}, {"constant", r.constant}, {"dim_bound", *r.dim_bound}, {"index_bound", *r.index_bound}};
    if (o_.json) {
      ojson doc = {{"inputs",
                    {{"m", params.m}, {"p", params.p}, {"lambda", params.lambda}, {"diam", params.diam},
                     {"b", params.b}, {"cmp", params.cmp}, {"rank", params.rank}}}};
      for (const auto& [k, v] : rows) doc[k] = v;
      out_ << doc.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : rows) out_ << fmt::format("{:<12} {}\n", k, real(v));
  }

  void cover_diam() {
    const auto r = cover_diameter(o_.k, o_.base, o_.factor);
    if (o_.json) {
      out_ << ojson{{"k", o_.k}, {"base", o_.base}, {"factor", o_.factor}, {"base_diam", r.base_diam},
                    {"cover_diam", r.cover_diam}, {"base_length_diam", r.base_length_diam.to_string()},
                    {"cover_length_diam", r.cover_length_diam.to_string()}, {"index", r.index.to_string()},
                    {"inequality_holds", r.inequality_holds}, {"vertex_inequality_holds", r.vertex_inequality_holds}}
                  .dump(2)
           << "\n";
      return;
    }
    out_ << "vertex diameters: base " << r.base_diam << ", cover " << r.cover_diam << "\n"
         << "length diameters: base " << r.base_length_diam << ", cover " << r.cover_length_diam << "\n"
         << "index " << r.index << ": " << r.cover_length_diam << (r.inequality_holds ? " <= " : " > ")
         << r.index * r.base_length_diam << "\n";
  }

  void cover_tower() {
    const auto t = tower(o_.k, o_.depth);
    if (o_.json) {
      ojson idx = ojson::array();
      for (const auto& i : t.indices) idx.push_back(i.to_string());
      out_ << ojson{{"k", t.k}, {"depth", o_.depth}, {"indices", idx}}.dump(2) << "\n";
      return;
    }
    for (std::size_t j = 0; j < t.indices.size(); ++j)
      out_ << "G_" << j + 1 << " = (" << t.scales[j] << "Z)^" << t.k << "  index " << t.indices[j] << "\n";
  }

  void cover_l2() {
    const auto ratios = l2_betti_ratio(o_.k, o_.p_degree, o_.depth);
    if (o_.json) {
      ojson r = ojson::array();
      for (const auto& x : ratios) r.push_back(x.to_string());
      out_ << ojson{{"k", o_.k}, {"p", o_.p_degree}, {"depth", o_.depth}, {"ratios", r}}.dump(2) << "\n";
      return;
    }
    for (std::size_t j = 0; j < ratios.size(); ++j) out_ << "j=" << j + 1 << "  " << ratios[j] << "\n";
  }

 private:
  Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Runner run(o, out);
  std::function<void()> action;

  CLI::App app{"Exact genera, elliptic genera and covering-tower checks from characteristic numbers", "genus_forge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--catalog", o.catalog_path, "Catalog file (default: $GENUS_FORGE_CATALOG or the shipped one)");
  auto on = [&](CLI::App* sub, void (Runner::*fn)()) { sub->callback([&, fn] { action = [&, fn] { (run.*fn)(); }; }); };
  auto manifold_opt = [&](CLI::App* sub) { sub->add_option("--manifold", o.manifold, "Catalog or builtin name")->required(); };

  auto* cat = app.add_subcommand("catalog", "Inspect the manifold catalog");
  cat->require_subcommand(1);
  on(cat->add_subcommand("list", "List catalog entries"), &Runner::catalog_list);
  auto* show = cat->add_subcommand("show", "Show one entry");
  show->add_option("name", o.manifold)->required();
  on(show, &Runner::catalog_show);
  auto* exp = cat->add_subcommand("export", "Write the catalog in canonical form");
  exp->add_option("--out", o.export_path);
  on(exp, &Runner::catalog_export);

  auto* compute = app.add_subcommand("compute", "Todd, A-hat, L-hat or signature genus");
  manifold_opt(compute);
  compute->add_option("--genus", o.genus)->required()->check(CLI::IsMember({"todd", "ahat", "lhat", "signature"}));
  on(compute, &Runner::compute);

  auto* ell = app.add_subcommand("elliptic", "q-expansion of Ell1, Ell2 or the Witten genus");
  manifold_opt(ell);
  ell->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"ell1", "ell2", "witten"}));
  ell->add_option("--order", o.order, "Keep q-powers below this order")->capture_default_str();
  on(ell, &Runner::elliptic);

  auto* ind = app.add_subcommand("indices", "Twisted Dirac indices ind(D x B_k) or ind(D x W_k)");
  manifold_opt(ind);
  ind->add_option("--family", o.family)->required()->check(CLI::IsMember({"B", "W"}));
  ind->add_option("--max", o.max_k)->capture_default_str();
  on(ind, &Runner::indices);

  auto* mod = app.add_subcommand("modular", "Modularity checks");
  mod->require_subcommand(1);
  auto* fit = mod->add_subcommand("fit", "Fit the Witten genus by E4/E6 monomials");
  manifold_opt(fit);
  fit->add_option("--order", o.order)->capture_default_str();
  on(fit, &Runner::modular_fit);
  auto* check = mod->add_subcommand("check", "Check Ell1(-1/tau) = (2tau)^2m Ell2(tau) numerically");
  manifold_opt(check);
  check->add_option("--tau-im", o.tau_im)->capture_default_str();
  check->add_option("--order", o.order)->capture_default_str();
  check->add_option("--tol", o.tol)->capture_default_str();
  on(check, &Runner::modular_check);

  auto* bound = app.add_subcommand("bound", "Analytic index-bound constants");
  bound->require_subcommand(1);
  auto* cb = bound->add_subcommand("cb", "Positive root C(b)");
  cb->add_option("--m", o.bound.m)->required();
  cb->add_option("--b", o.bound.b)->required();
  on(cb, &Runner::bound_cb);
  auto* bidx = bound->add_subcommand("index", "Moser constant and index bound");
  bidx->add_option("--m", o.bound.m)->required();
  bidx->add_option("--p", o.bound.p)->required();
  bidx->add_option("--lambda", o.bound.lambda)->required();
  bidx->add_option("--diam", o.bound.diam)->required();
  bidx->add_option("--b", o.bound.b)->required();
  bidx->add_option("--cmp", o.bound.cmp)->capture_default_str();
  bidx->add_option("--v", o.v);
  bidx->add_option("--rank", o.bound.rank)->capture_default_str();
  on(bidx, &Runner::bound_index);

  auto* cover = app.add_subcommand("cover", "Covering-tower models on flat tori");
  cover->require_subcommand(1);
  auto* diam = cover->add_subcommand("diam", "Diameter of a torus cover vs index times base diameter");
  diam->add_option("--k", o.k)->required();
  diam->add_option("--base", o.base)->required()->delimiter(',');
  diam->add_option("--factor", o.factor)->required();
  on(diam, &Runner::cover_diam);
  auto* tw = cover->add_subcommand("tower", "Indices of the (2^{j-1}Z)^k tower");
  tw->add_option("--k", o.k)->required();
  tw->add_option("--depth", o.depth)->required();
  on(tw, &Runner::cover_tower);
  auto* l2 = cover->add_subcommand("l2", "Normalised Betti numbers along the tower");
  l2->add_option("--k", o.k)->required();
  l2->add_option("--p", o.p_degree)->required();
  l2->add_option("--depth", o.depth)->required();
  on(l2, &Runner::cover_l2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace genus
