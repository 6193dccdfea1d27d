#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "csusy/errors.hpp"
#include "csusy/pipeline.hpp"
#include "csusy/quadrature.hpp"
#include "csusy/spectral.hpp"
#include "csusy/stencil.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace csusy;
using tools::ConfigError;
using tools::RunConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSingular = 2;
constexpr int kExitVerification = 3;

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const fs::path& path, const SampledFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "x,value\n";
  for (int i = 0; i < f.size(); ++i)
    out << format_g(f.grid.x(i)) << ',' << format_g(f.values[i]) << '\n';
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json regularity_json(const RegularityReport& reg) {
  json brackets = json::array();
  for (const auto& [lo, hi] : reg.zero_brackets) brackets.push_back({lo, hi});
  return {{"is_regular", reg.is_regular},
          {"zero_brackets", brackets},
          {"min_abs_w", reg.min_abs_w},
          {"condition_notes", reg.condition_notes}};
}

fs::path resolve_out_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("CONFLUENT_SUSY_OUT"); env && *env) return env;
  return cfg.out_dir;
}

/// Eigenvalues plus a Richardson error estimate from a half-resolution grid.
struct SpectrumTable {
  std::vector<double> energies;
  std::vector<double> error_estimates;
};

SpectrumTable spectrum_with_estimates(const TransformResult& res, int count) {
  SpectrumTable table;
  table.energies = transform_spectrum(res, count);
  const Grid& g = res.v_n.grid;
  if ((g.n_points - 1) % 2 == 0 && (g.n_points + 1) / 2 >= 9) {
    Grid coarse(g.x_min, g.x_max, (g.n_points + 1) / 2);
    std::vector<double> v(coarse.n_points);
    for (int i = 0; i < coarse.n_points; ++i) v[i] = res.v_n.values[2 * i];
    const auto ev =
        lowest_eigenvalues(discretize_hamiltonian(SampledFunction(coarse, std::move(v))), count);
    for (int k = 0; k < count; ++k)
      table.error_estimates.push_back(std::abs(table.energies[k] - ev[k]) / 3.0);
  } else {
    table.error_estimates.assign(count, 0.0);
  }
  return table;
}

json singular_report(const TransformSpec& spec) {
  const auto setup = build_transform_tower(spec);
  const auto reg = regularity_scan(setup.tower.levels[spec.order - 1]);
  return {{"order", spec.order},
          {"lambda", spec.lambda},
          {"regularity", regularity_json(reg)}};
}

int report_singular(const TransformSpec& spec, const SingularityError& e,
                    const fs::path& out_dir, bool force) {
  json report = singular_report(spec);
  report["error"] = e.what();
  write_json(out_dir / "report.json", report);
  std::fprintf(stderr, "singular Wronskian: %s\n", e.what());
  for (const auto& [lo, hi] : e.brackets())
    std::fprintf(stderr, "  zero bracket [%.10f, %.10f]\n", lo, hi);
  if (!force) return kExitSingular;
  const auto setup = build_transform_tower(spec);
  write_csv(out_dir / "wronskian.csv", setup.tower.levels[spec.order - 1]);
  std::fprintf(stderr, "--force: emitted wronskian.csv despite the singularity\n");
  return kExitOk;
}

int cmd_transform(const RunConfig& cfg, bool force) {
  const auto spec = to_transform_spec(cfg);
  const fs::path out_dir = resolve_out_dir(cfg);
  fs::create_directories(out_dir);
  TransformResult res = [&] {
    try {
      return run_transform(spec);
    } catch (const SingularityError& e) {
      std::exit(report_singular(spec, e, out_dir, force));
    }
  }();
  write_csv(out_dir / "potential.csv", res.v_n);
  write_csv(out_dir / "phi.csv", res.phi);
  write_csv(out_dir / "chi_perp.csv", res.chi_perp);
  write_csv(out_dir / "wronskian.csv", res.wronskian);
  const auto table = spectrum_with_estimates(res, cfg.spectrum_count);
  json report{{"order", res.order},
              {"lambda", res.lambda},
              {"energy", res.energy_e},
              {"constants_used", res.constants_used},
              {"chi_scale", res.chi_scale},
              {"residuals",
               {{"phi", res.residual_phi},
                {"chi", res.residual_chi},
                {"chi_perp", res.residual_chi_perp}}},
              {"phi_route_deviation", res.phi_route_deviation},
              {"regularity", regularity_json(res.regularity)},
              {"eigenvalues", table.energies},
              {"eigenvalue_error_estimates", table.error_estimates}};
  write_json(out_dir / "report.json", report);
  std::printf("order %d transform at lambda = %g: regular, residuals phi %.2e chi_perp %.2e\n",
              res.order, res.lambda, res.residual_phi, res.residual_chi_perp);
  std::printf("outputs written to %s\n", out_dir.string().c_str());
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, int count) {
  const auto spec = to_transform_spec(cfg);
  const fs::path out_dir = resolve_out_dir(cfg);
  fs::create_directories(out_dir);
  TransformResult res = [&] {
    try {
      return run_transform(spec);
    } catch (const SingularityError& e) {
      std::exit(report_singular(spec, e, out_dir, false));
    }
  }();
  const auto table = spectrum_with_estimates(res, count);
  std::ofstream out(out_dir / "eigenvalues.csv");
  out << "index,energy,error_estimate\n";
  std::printf("index  energy        error_estimate\n");
  for (int k = 0; k < count; ++k) {
    out << k << ',' << format_g(table.energies[k]) << ','
        << format_g(table.error_estimates[k]) << '\n';
    std::printf("%-6d %-13.8f %.1e\n", k, table.energies[k], table.error_estimates[k]);
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
  const auto spec = to_transform_spec(cfg);
  const fs::path out_dir = resolve_out_dir(cfg);
  fs::create_directories(out_dir);
  const auto setup = build_transform_tower(spec);
  const auto reg = regularity_scan(setup.tower.levels[spec.order - 1]);
  write_json(out_dir / "scan.json",
             json{{"order", spec.order}, {"lambda", spec.lambda},
                  {"regularity", regularity_json(reg)}});
  if (reg.is_regular) {
    std::printf("regular: no zeros on the grid, min |W| = %.3e\n", reg.min_abs_w);
  } else {
    std::printf("singular: %zu zero bracket(s)\n", reg.zero_brackets.size());
    for (const auto& [lo, hi] : reg.zero_brackets)
      std::printf("  [%.10f, %.10f]\n", lo, hi);
  }
  return kExitOk;
}

struct Check {
  std::string name;
  double value;
  double tol;
  double default_tol;
  bool pass;
  bool skipped = false;
  std::string note;
};

int cmd_verify(const RunConfig& cfg, std::optional<double> tol_override) {
  const auto spec = to_transform_spec(cfg);
  const fs::path out_dir = resolve_out_dir(cfg);
  fs::create_directories(out_dir);
  auto pick = [&](double default_tol) { return tol_override.value_or(default_tol); };
  std::vector<Check> checks;
  auto add = [&](std::string name, double value, double default_tol) {
    const double tol = pick(default_tol);
    checks.push_back({std::move(name), value, tol, default_tol, value < tol});
  };
  auto skip = [&](std::string name, std::string note) {
    checks.push_back({std::move(name), 0.0, 0.0, 0.0, true, true, std::move(note)});
  };

  const auto setup = build_transform_tower(spec);
  add("chain_residual", verify_chain(setup.chain).worst(), cfg.residual_tol);

  double tower_dev = 0.0;
  for (int k = 1; k <= std::min(setup.chain.order(), 3); ++k) {
    const auto direct = direct_wronskian(setup.chain, k);
    const auto& level = setup.tower.levels[k];
    const double floor = 1e-8 * direct.max_abs();
    for (int i = 0; i < direct.size(); ++i)
      if (std::abs(direct.values[i]) > floor)
        tower_dev = std::max(tower_dev, std::abs(level.values[i] - direct.values[i]) /
                                            std::abs(direct.values[i]));
  }
  add("tower_vs_determinant", tower_dev, 1e-5);

  const auto reg = regularity_scan(setup.tower.levels[spec.order - 1]);
  checks.push_back({"regularity", reg.is_regular ? 0.0 : 1.0, 0.5, 0.5, reg.is_regular});

  if (reg.is_regular) {
    const auto res = run_transform(spec);
    add("residual_phi", res.residual_phi, 1e-5);
    add("residual_chi_perp", res.residual_chi_perp, 1e-5);
    // near-cancelling products can reach 1e14, so the deviation is measured
    // relative to their magnitude; otherwise plain roundoff dominates
    double unity = 0.0;
    for (int i = 0; i < res.chi.size(); ++i) {
      const double t1 = res.chi_perp.values[i] * res.chi.derivatives[i];
      const double t2 = res.chi_perp.derivatives[i] * res.chi.values[i];
      unity = std::max(unity, std::abs(t1 - t2 - 1.0) /
                                  (1.0 + std::abs(t1) + std::abs(t2)));
    }
    add("pair_wronskian_unity", unity, 1e-4);
    try {
      const auto phi_n = normalize(res.phi);
      const auto perp_n = normalize(res.chi_perp);
      std::vector<double> prod(phi_n.size());
      for (int i = 0; i < phi_n.size(); ++i) prod[i] = phi_n.values[i] * perp_n.values[i];
      add("orthogonality", std::abs(integrate(SampledFunction(spec.grid, std::move(prod)))),
          1e-4);
    } catch (const NotSquareIntegrableError& e) {
      skip("orthogonality", e.what());
    }
    try {
      const auto ladder = build_chi_ladder(setup.tower);
      const auto prod = factorized_wronskian(ladder, setup.tower.top());
      const auto& topw = setup.tower.levels[setup.tower.top()];
      double dev = 0.0;
      for (int i = 0; i < prod.size(); ++i)
        dev = std::max(dev, std::abs(prod.values[i] - topw.values[i]) /
                                (1e-300 + std::abs(topw.values[i])));
      add("factorization", dev, 1e-10);
    } catch (const SingularityError&) {
      skip("factorization", "a divisor Wronskian has zeros; chi ladder undefined");
    }
  } else {
    skip("residual_phi", "Wronskian singular");
    skip("residual_chi_perp", "Wronskian singular");
    skip("pair_wronskian_unity", "Wronskian singular");
    skip("orthogonality", "Wronskian singular");
    skip("factorization", "Wronskian singular");
  }

  if (spec.pt_closed_forms) {
    ChainSpec cs{spec.lambda, 1, ChainSpec::Seed::PoschlTeller};
    const auto rep =
        parametric_chain_check(cs, setup.chain.potential, spec.grid, 1e-4);
    add("parametric_chain", rep.worst(), 1e-4);
    if (std::sqrt(-spec.lambda) >= 1.0) {
      const auto integral_chain = build_chain(cs, setup.chain.potential, spec.grid);
      const auto u1p = parametric_u1(cs, spec.grid, 1e-4);
      std::vector<double> diff(u1p.size()), ddiff(u1p.size());
      for (int i = 0; i < u1p.size(); ++i) {
        diff[i] = u1p.values[i] - integral_chain.functions[1].values[i];
        ddiff[i] = u1p.derivatives[i] - integral_chain.functions[1].derivatives[i];
      }
      const auto v = sample_potential(*setup.chain.potential, spec.grid);
      add("parametric_vs_integral_homogeneous",
          schrodinger_residual_rel(SampledFunction(spec.grid, std::move(diff), std::move(ddiff)),
                                   v, spec.lambda),
          1e-4);
    } else {
      skip("parametric_vs_integral_homogeneous",
           "seed has a node (kappa < 1); integral-representation chain undefined");
    }
  }

  bool all_pass = true;
  json jchecks = json::array();
  for (const auto& c : checks) {
    if (!c.skipped && !c.pass) all_pass = false;
    const bool meets_default = c.skipped || c.value < c.default_tol;
    json jc{{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}};
    if (!c.skipped) {
      jc["value"] = c.value;
      jc["tolerance"] = c.tol;
      jc["default_tolerance"] = c.default_tol;
      if (!c.pass)
        jc["classification"] = meets_default ? "tolerance" : "correctness";
    }
    if (!c.note.empty()) jc["note"] = c.note;
    jchecks.push_back(jc);
    std::printf("%-36s %s%s\n", c.name.c_str(),
                c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"),
                (!c.skipped && !c.pass) ? (meets_default ? " (tolerance)" : " (correctness)")
                                        : "");
  }
  write_json(out_dir / "verify.json",
             json{{"all_pass", all_pass}, {"checks", jchecks}});
  return all_pass ? kExitOk : kExitVerification;
}

struct Common {
  std::string config;
  double lambda = 0;
  int order = 0;
  std::string constants, grid, out;
  CLI::Option *o_lambda = nullptr, *o_order = nullptr, *o_constants = nullptr,
              *o_grid = nullptr, *o_out = nullptr;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "run configuration (TOML subset)")->required();
  c.o_lambda = sub->add_option("--lambda", c.lambda, "override factorization energy");
  c.o_order = sub->add_option("--order", c.order, "override transformation order");
  c.o_constants =
      sub->add_option("--constants", c.constants, "override constants (comma separated)");
  c.o_grid = sub->add_option("--grid", c.grid, "override grid as x_min,x_max,n_points");
  c.o_out = sub->add_option("--out", c.out, "output directory");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream body(s);
  std::string item;
  while (std::getline(body, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw ConfigError("malformed number list '" + s + "'");
  }
  return out;
}

RunConfig make_config(const Common& c) {
  RunConfig cfg = tools::load_config(c.config);
  if (c.o_lambda->count()) cfg.lambda = c.lambda;
  if (c.o_order->count()) cfg.order = c.order;
  if (c.o_constants->count()) cfg.constants = parse_list(c.constants);
  if (c.o_grid->count()) {
    const auto g = parse_list(c.grid);
    if (g.size() != 3) throw ConfigError("--grid expects x_min,x_max,n_points");
    cfg.grid = Grid(g[0], g[1], static_cast<int>(g[2]));
  }
  if (c.o_out->count()) cfg.out_dir = c.out;
  if (cfg.order < 1) throw ConfigError("order must be >= 1");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"confluent higher-order Darboux transformations of 1-D Schrodinger problems"};
  app.require_subcommand(1);
  Common c_transform, c_verify, c_spectrum, c_scan;
  bool force = false;
  int count = 0;
  double tol = 0;

  auto* transform = app.add_subcommand("transform", "run a transformation and export data");
  add_common(transform, c_transform);
  transform->add_flag("--force", force, "emit outputs even when the Wronskian is singular");

  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  add_common(verify, c_verify);
  auto* o_tol = verify->add_option("--tol", tol, "override every check tolerance");

  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of the transform");
  add_common(spectrum, c_spectrum);
  auto* o_count = spectrum->add_option("--count", count, "number of eigenvalues");

  auto* scan = app.add_subcommand("scan", "regularity scan of the transformation Wronskian");
  add_common(scan, c_scan);

  CLI11_PARSE(app, argc, argv);

  try {
    if (transform->parsed()) return cmd_transform(make_config(c_transform), force);
    if (verify->parsed())
      return cmd_verify(make_config(c_verify),
                        o_tol->count() ? std::optional<double>(tol) : std::nullopt);
    if (spectrum->parsed()) {
      const RunConfig cfg = make_config(c_spectrum);
      return cmd_spectrum(cfg, o_count->count() ? count : cfg.spectrum_count);
    }
    if (scan->parsed()) return cmd_scan(make_config(c_scan));
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const SingularityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSingular;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
