// Command line front end; links only the C interface in mapasym.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapasym.h"

namespace {

using nlohmann::json;

int fail(int code) {
  std::cerr << "error: " << ma_last_error_message() << "\n";
  (void)code;
  return 1;
}

int emit(const std::string& data, const std::string& path) {
  if (path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 1;
  }
  out << data;
  return 0;
}

int emit_owned(char* data, const std::string& path) {
  const std::string s(data ? data : "");
  ma_string_free(data);
  return emit(s, path);
}

std::string round_trip(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int map_kind_id(const std::string& name) {
  if (name == "static") return MA_MAP_STATIC_LOGISTIC;
  if (name == "dynamic") return MA_MAP_DYNAMIC_LOGISTIC;
  if (name == "regular") return MA_MAP_GALLERY_REGULAR;
  if (name == "bl") return MA_MAP_GALLERY_BOUNDARY_LAYER;
  if (name == "decay") return MA_MAP_GALLERY_DECAY;
  if (name == "blowup") return MA_MAP_GALLERY_BLOWUP;
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Asymptotic solutions of the discrete logistic map near its first "
      "period-doubling bifurcation: simulation, series construction, "
      "matching, and error measurement."};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "write data to this file instead of stdout")
      ->capture_default_str();

  // simulate
  auto* sim = app.add_subcommand(
      "simulate", "iterate a map and emit the trajectory as CSV (figure 2 raw data)");
  std::string sim_map = "static";
  double sim_eps = 0.02, sim_x0 = 2.0 / 3.0, sim_theta = 1.0;
  std::int64_t sim_n = 300;
  sim->add_option("--map", sim_map, "static|dynamic|regular|bl|decay|blowup")
      ->capture_default_str();
  sim->add_option("--epsilon", sim_eps)->capture_default_str();
  sim->add_option("--x0", sim_x0)->capture_default_str();
  sim->add_option("--theta", sim_theta, "blow-up map initial value")->capture_default_str();
  sim->add_option("--n-max", sim_n)->capture_default_str();

  // bifurcation
  auto* bif = app.add_subcommand("bifurcation",
                                 "long-run value scan across lambda (figure 1 data)");
  double bif_lo = 2.45, bif_hi = 3.8;
  int bif_cols = 272;
  std::int64_t bif_transient = 2000, bif_record = 64;
  bif->add_option("--lambda-min", bif_lo)->capture_default_str();
  bif->add_option("--lambda-max", bif_hi)->capture_default_str();
  bif->add_option("--columns", bif_cols)->capture_default_str();
  bif->add_option("--transient", bif_transient)->capture_default_str();
  bif->add_option("--record", bif_record)->capture_default_str();

  // static-early
  auto* se = app.add_subcommand(
      "static-early",
      "early-time multiple-scales series for lambda = 3+eps (figure 3 curves)");
  double se_eps = 0.02;
  int se_order = 1;
  std::int64_t se_n = 160;
  bool se_render = false;
  se->add_option("--epsilon", se_eps)->capture_default_str();
  se->add_option("--order", se_order, "truncation order, up to 12")->capture_default_str();
  se->add_option("--n-max", se_n)->capture_default_str();
  se->add_flag("--render", se_render, "emit the exact envelope fractions as JSON instead");

  // static-composite
  auto* sc = app.add_subcommand(
      "static-composite",
      "uniform composite approximation for lambda = 3+eps (figure 4 curve)");
  double sc_eps = 0.02;
  std::int64_t sc_n = 300;
  sc->add_option("--epsilon", sc_eps)->capture_default_str();
  sc->add_option("--n-max", sc_n)->capture_default_str();

  // dynamic-early
  auto* de = app.add_subcommand(
      "dynamic-early",
      "early-time approximation for the swept parameter lambda = 3+eps^2 n (figure 7 curve)");
  double de_eps = 0.02;
  int de_order = 1;
  std::int64_t de_n = 300;
  de->add_option("--epsilon", de_eps)->capture_default_str();
  de->add_option("--order", de_order, "0 or 1")->capture_default_str();
  de->add_option("--n-max", de_n)->capture_default_str();

  // dynamic-composite
  auto* dc = app.add_subcommand(
      "dynamic-composite",
      "leading-order composite for the swept parameter (figure 8 curve)");
  double dc_eps = 0.01;
  std::int64_t dc_n = 3500;
  std::string dc_variant = "eps3";
  dc->add_option("--epsilon", dc_eps)->capture_default_str();
  dc->add_option("--n-max", dc_n)->capture_default_str();
  dc->add_option("--variant", dc_variant, "eps3 (self-consistent) or eps32 (as printed)")
      ->capture_default_str();

  // k-solve
  auto* ks = app.add_subcommand(
      "k-solve", "transcendental transition-scale constant: eps^3 e^{K^2} = K");
  double ks_eps = 0.01, ks_tol = 1e-14;
  ks->add_option("--epsilon", ks_eps)->capture_default_str();
  ks->add_option("--tol", ks_tol)->capture_default_str();

  // error-scan
  auto* es = app.add_subcommand(
      "error-scan",
      "approximation-error ladders across epsilon (figures 5 and 9 data)");
  std::string es_which = "static";
  std::string es_variant = "eps3";
  es->add_option("which", es_which, "static|dynamic-a|dynamic-b|dynamic-c")->required();
  es->add_option("--variant", es_variant, "eps3 or eps32")->capture_default_str();

  // figure
  auto* fig = app.add_subcommand("figure", "CSV data behind a numbered figure (1-9)");
  int fig_n = 1;
  double fig_eps = 0.0;
  fig->add_option("which", fig_n, "figure number 1-9")->required();
  fig->add_option("--epsilon", fig_eps, "override the default epsilon (0 = default)")
      ->capture_default_str();

  // gallery
  auto* gal = app.add_subcommand(
      "gallery", "strategy-example diagnostics: regular|bl|decay|blowup");
  std::string gal_which = "regular";
  double gal_eps = 1e-3, gal_theta = 1.0;
  gal->add_option("which", gal_which, "regular|bl|decay|blowup")->required();
  gal->add_option("--epsilon", gal_eps)->capture_default_str();
  gal->add_option("--theta", gal_theta, "blow-up map initial value")->capture_default_str();

  // resolve-exponent
  auto* rx = app.add_subcommand(
      "resolve-exponent",
      "compare the eps^3 and eps^(3/2) composite denominators by their "
      "fixed-s error scaling");

  // let -o/--output appear after the subcommand
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*sim) {
    const int kind = map_kind_id(sim_map);
    if (kind < 0) {
      std::cerr << "error: unknown map '" << sim_map << "'\n";
      return 2;
    }
    char* csv = nullptr;
    if (int rc = ma_iterate_csv(kind, sim_eps, kind == MA_MAP_GALLERY_BLOWUP ? sim_theta : sim_x0,
                                sim_theta, sim_n, &csv))
      return fail(rc);
    return emit_owned(csv, output);
  }

  if (*bif) {
    char* csv = nullptr;
    if (int rc = ma_bifurcation_csv(bif_lo, bif_hi, bif_cols, bif_transient, bif_record, &csv))
      return fail(rc);
    return emit_owned(csv, output);
  }

  if (*se) {
    ma_early_series* series = nullptr;
    if (int rc = ma_early_static_build(se_order, &series)) return fail(rc);
    if (se_render) {
      json doc;
      for (int r = 0; r <= se_order; ++r) {
        char* f = nullptr;
        char* g = nullptr;
        if (int rc = ma_early_static_render(series, r, &f, &g)) {
          ma_early_static_free(series);
          return fail(rc);
        }
        doc["f" + std::to_string(r)] = f;
        doc["g" + std::to_string(r)] = g;
        ma_string_free(f);
        ma_string_free(g);
      }
      ma_early_static_free(series);
      return emit(doc.dump(2) + "\n", output);
    }
    std::string csv = "n,x\n";
    for (std::int64_t n = 0; n <= se_n; ++n) {
      double x = 0.0;
      if (int rc = ma_early_static_eval(series, n, se_eps, se_order, &x)) {
        ma_early_static_free(series);
        return fail(rc);
      }
      csv += std::to_string(n) + "," + round_trip(x) + "\n";
    }
    ma_early_static_free(series);
    return emit(csv, output);
  }

  if (*sc) {
    std::string csv = "n,x\n";
    for (std::int64_t n = 0; n <= sc_n; ++n) {
      double x = 0.0;
      if (int rc = ma_composite_static(n, sc_eps, &x)) return fail(rc);
      csv += std::to_string(n) + "," + round_trip(x) + "\n";
    }
    return emit(csv, output);
  }

  if (*de) {
    std::string csv = "n,x\n";
    for (std::int64_t n = 0; n <= de_n; ++n) {
      double x = 0.0;
      if (int rc = ma_early_dynamic(n, de_eps, de_order, &x)) return fail(rc);
      csv += std::to_string(n) + "," + round_trip(x) + "\n";
    }
    return emit(csv, output);
  }

  if (*dc) {
    if (dc_variant != "eps3" && dc_variant != "eps32") {
      std::cerr << "error: variant must be eps3 or eps32\n";
      return 2;
    }
    std::string csv = "n,x\n";
    for (std::int64_t n = 0; n <= dc_n; ++n) {
      double x = 0.0;
      if (int rc = ma_composite_dynamic(n, dc_eps, dc_variant == "eps3" ? 1 : 0, &x))
        return fail(rc);
      csv += std::to_string(n) + "," + round_trip(x) + "\n";
    }
    return emit(csv, output);
  }

  if (*ks) {
    double K = 0.0, residual = 0.0;
    int iterations = 0;
    if (int rc = ma_solve_k(ks_eps, ks_tol, &K, &residual, &iterations)) return fail(rc);
    json doc;
    doc["K"] = K;
    doc["epsilon"] = ks_eps;
    doc["iterations"] = iterations;
    doc["residual"] = residual;
    return emit(doc.dump(2) + "\n", output);
  }

  if (*es) {
    int scan = -1;
    if (es_which == "static")
      scan = 0;
    else if (es_which == "dynamic-a")
      scan = 1;
    else if (es_which == "dynamic-b")
      scan = 2;
    else if (es_which == "dynamic-c")
      scan = 3;
    else {
      std::cerr << "error: unknown scan '" << es_which << "'\n";
      return 2;
    }
    if (es_variant != "eps3" && es_variant != "eps32") {
      std::cerr << "error: variant must be eps3 or eps32\n";
      return 2;
    }
    char* csv = nullptr;
    if (int rc = ma_error_scan_csv(scan, es_variant == "eps3" ? 1 : 0, &csv)) return fail(rc);
    return emit_owned(csv, output);
  }

  if (*fig) {
    char* csv = nullptr;
    if (int rc = ma_figure_csv(fig_n, fig_eps, &csv)) return fail(rc);
    return emit_owned(csv, output);
  }

  if (*gal) {
    int which = -1;
    if (gal_which == "regular")
      which = 0;
    else if (gal_which == "bl")
      which = 1;
    else if (gal_which == "decay")
      which = 2;
    else if (gal_which == "blowup")
      which = 3;
    else {
      std::cerr << "error: unknown gallery example '" << gal_which << "'\n";
      return 2;
    }
    double out[5] = {0, 0, 0, 0, 0};
    if (int rc = ma_gallery_check(which, gal_eps, gal_theta, out)) return fail(rc);
    json doc;
    doc["crossing_n"] = out[1];
    doc["epsilon"] = gal_eps;
    doc["example"] = gal_which;
    doc["finite_past_blowup"] = out[4] != 0.0;
    doc["long_run_level"] = out[3];
    doc["predicted_n"] = out[2];
    doc["worst_error"] = out[0];
    if (which == 3) doc["theta"] = gal_theta;
    return emit(doc.dump(2) + "\n", output);
  }

  if (*rx) {
    double s3 = 0.0, s32 = 0.0;
    int ok3 = 0, ok32 = 0;
    if (int rc = ma_exponent_resolution(&s3, &s32, &ok3, &ok32)) return fail(rc);
    json doc;
    doc["decision"] = (ok3 == ok32) ? "inconclusive" : (ok3 ? "eps3" : "eps32");
    doc["eps32_ok"] = ok32 != 0;
    doc["eps32_slope"] = s32;
    doc["eps3_ok"] = ok3 != 0;
    doc["eps3_slope"] = s3;
    return emit(doc.dump(2) + "\n", output);
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
