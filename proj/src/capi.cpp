#include "mapasym.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "mapasym/analysis.hpp"
#include "mapasym/dynamic.hpp"
#include "mapasym/errors.hpp"
#include "mapasym/gallery.hpp"
#include "mapasym/manifolds.hpp"
#include "mapasym/maps.hpp"
#include "mapasym/specfun.hpp"
#include "mapasym/static_series.hpp"

using namespace mapasym;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MA_OK;
  } catch (const RangeError& e) {
    g_last_error = e.what();
    return MA_ERR_RANGE;
  } catch (const OverflowError& e) {
    g_last_error = e.what();
    return MA_ERR_OVERFLOW;
  } catch (const NoConvergenceError& e) {
    g_last_error = e.what();
    return MA_ERR_NO_CONVERGENCE;
  } catch (const MatchFailureError& e) {
    g_last_error = e.what();
    return MA_ERR_MATCH_FAILURE;
  } catch (const OrderError& e) {
    g_last_error = e.what();
    return MA_ERR_ORDER;
  } catch (const FitError& e) {
    g_last_error = e.what();
    return MA_ERR_FIT;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return MA_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MA_ERR_UNKNOWN;
  }
}

MapSpec make_spec(int map_kind, double epsilon, double x0, double theta) {
  if (map_kind < 0 || map_kind > 5) throw DomainError("unknown map kind");
  MapSpec spec;
  spec.kind = static_cast<MapKind>(map_kind);
  spec.epsilon = epsilon;
  spec.x0 = x0;
  spec.theta = theta;
  return spec;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

extern "C" {

const char* ma_last_error_message(void) { return g_last_error.c_str(); }

void ma_string_free(char* s) { std::free(s); }

int ma_step(int map_kind, double epsilon, double theta, int64_t n, double x, double* out) {
  return guarded([&] {
    const MapSpec spec = make_spec(map_kind, epsilon, 0.5, theta);
    *out = step(spec, n, x);
  });
}

int ma_iterate_csv(int map_kind, double epsilon, double x0, double theta, int64_t n_max,
                   char** out_csv) {
  return guarded([&] {
    const MapSpec spec = make_spec(map_kind, epsilon, x0, theta);
    const Trajectory traj = iterate(spec, n_max);
    std::ostringstream out;
    if (spec.is_logistic()) {
      out << "n,lambda,x\n";
      for (int64_t n = 0; n <= n_max; ++n)
        out << n << ',' << fmt(spec.lambda_at(n)) << ',' << fmt(traj.x[size_t(n)]) << '\n';
    } else {
      out << "n,x\n";
      for (int64_t n = 0; n <= n_max; ++n) out << n << ',' << fmt(traj.x[size_t(n)]) << '\n';
    }
    *out_csv = dup_string(out.str());
  });
}

int ma_bifurcation_csv(double lambda_min, double lambda_max, int n_lambda, int64_t transient,
                       int64_t record, char** out_csv) {
  return guarded([&] {
    const auto cols = bifurcation_scan(lambda_min, lambda_max, n_lambda, transient, record);
    std::ostringstream out;
    out << "lambda,x\n";
    for (const auto& c : cols)
      for (const double v : c.values) out << fmt(c.lambda) << ',' << fmt(v) << '\n';
    *out_csv = dup_string(out.str());
  });
}

int ma_equilibrium_p1(double lambda, double* out) {
  return guarded([&] { *out = equilibrium_period1(lambda); });
}

int ma_equilibrium_p2(double lambda, double* out_plus, double* out_minus) {
  return guarded([&] {
    const auto [p, m] = equilibrium_period2(lambda);
    *out_plus = p;
    *out_minus = m;
  });
}

int ma_adiabatic_p1(double lambda, double epsilon, int order, double* out) {
  return guarded([&] { *out = adiabatic_period1(lambda, epsilon, order); });
}

int ma_adiabatic_p2(double lambda, double epsilon, int order, double* out_plus,
                    double* out_minus) {
  return guarded([&] {
    const auto [p, m] = adiabatic_period2(lambda, epsilon, order);
    *out_plus = p;
    *out_minus = m;
  });
}

int ma_manifold_residual(double epsilon, double lambda, int order, int which, double* out) {
  return guarded([&] {
    if (which != 0 && which != 1) throw DomainError("manifold kind must be 0 or 1");
    *out = manifold_residual(epsilon, lambda, order,
                             which == 0 ? ManifoldKind::P1 : ManifoldKind::P2);
  });
}

struct ma_early_series {
  EarlySeriesStatic series;
};

int ma_early_static_build(int order, ma_early_series** out) {
  return guarded([&] { *out = new ma_early_series{build_early_static(order)}; });
}

int ma_early_static_eval(const ma_early_series* series, int64_t n, double epsilon, int order,
                         double* out) {
  return guarded([&] {
    if (!series) throw DomainError("null series handle");
    *out = eval_early_static(series->series, n, epsilon, order);
  });
}

int ma_early_static_render(const ma_early_series* series, int r, char** out_f, char** out_g) {
  return guarded([&] {
    if (!series) throw DomainError("null series handle");
    if (r < 0 || r > series->series.order) throw OrderError("render index out of range");
    *out_f = dup_string(series->series.f[size_t(r)].to_string());
    *out_g = dup_string(series->series.g[size_t(r)].to_string());
  });
}

void ma_early_static_free(ma_early_series* series) { delete series; }

int ma_static_breakdown(double epsilon, double* out_n_star) {
  return guarded([&] { *out_n_star = static_breakdown(epsilon).n_star; });
}

int ma_composite_static(int64_t n, double epsilon, double* out) {
  return guarded([&] { *out = composite_static(n, epsilon); });
}

int ma_matching_constant_static(double* out) {
  return guarded([&] { *out = matching_constant_static().get_d(); });
}

int ma_solve_k(double epsilon, double tol, double* out_k, double* out_residual,
               int* out_iterations) {
  return guarded([&] {
    const KSolution sol = solve_K(epsilon, tol);
    *out_k = sol.K;
    *out_residual = sol.residual;
    *out_iterations = sol.iterations;
  });
}

int ma_dynamic_breakdown(double epsilon, double* out_n_star, double* out_k) {
  return guarded([&] {
    const DynamicBreakdown b = dynamic_breakdown(epsilon);
    *out_n_star = b.n_star;
    *out_k = b.k.K;
  });
}

int ma_early_dynamic(int64_t n, double epsilon, int order, double* out) {
  return guarded([&] { *out = early_dynamic(n, epsilon, order); });
}

int ma_composite_dynamic(int64_t n, double epsilon, int eps_cubed, double* out) {
  return guarded([&] {
    *out = composite_dynamic(
        n, epsilon, eps_cubed ? ExponentVariant::EpsCubed : ExponentVariant::EpsThreeHalves);
  });
}

int ma_matching_constant_dynamic(double epsilon, double* out) {
  return guarded([&] { *out = matching_constant_dynamic(epsilon).get_d(); });
}

int ma_dawson(double x, double* out_value, double* out_abserr) {
  return guarded([&] {
    const SpecFunResult r = dawson(x);
    *out_value = r.value;
    *out_abserr = r.est_abs_error;
  });
}

int ma_erfi(double x, double* out_value, double* out_abserr) {
  return guarded([&] {
    const SpecFunResult r = erfi(x);
    *out_value = r.value;
    *out_abserr = r.est_abs_error;
  });
}

int ma_figure_csv(int which, double epsilon, char** out_csv) {
  return guarded([&] { *out_csv = dup_string(figure_data(which, epsilon)); });
}

int ma_error_scan_csv(int scan, int eps_cubed, char** out_csv) {
  return guarded([&] {
    ErrorReport rep;
    if (scan == 0) {
      std::vector<std::pair<double, double>> pts;
      for (const double eps : {0.04, 0.02, 0.01, 0.005, 0.0025}) {
        const int64_t N = int64_t(3.0 * static_breakdown(eps).n_star);
        pts.emplace_back(eps, sup_norm_error(eps, Approximant::StaticComposite, 0, N));
      }
      rep = slope_fit(pts);
    } else if (scan >= 1 && scan <= 3) {
      const ErrorScanRule rule = scan == 1   ? ErrorScanRule::FixedSlowTime
                                 : scan == 2 ? ErrorScanRule::Transition
                                             : ErrorScanRule::LateTime;
      rep = dynamic_error_scan(rule, eps_cubed != 0);
    } else {
      throw DomainError("scan id must be 0..3");
    }
    std::ostringstream out;
    out << "epsilon,error,fitted_slope,fit_r2\n";
    for (size_t i = 0; i < rep.epsilons.size(); ++i)
      out << fmt(rep.epsilons[i]) << ',' << fmt(rep.errors[i]) << ','
          << fmt(rep.fitted_slope) << ',' << fmt(rep.fit_r2) << '\n';
    *out_csv = dup_string(out.str());
  });
}

int ma_exponent_resolution(double* out_slope_cubed, double* out_slope_three_halves,
                           int* out_cubed_ok, int* out_three_halves_ok) {
  return guarded([&] {
    const ExponentDecision d = exponent_resolution({0.014, 0.01, 0.007, 0.005});
    *out_slope_cubed = d.cubed.fitted_slope;
    *out_slope_three_halves = d.three_halves.fitted_slope;
    *out_cubed_ok = d.cubed_ok ? 1 : 0;
    *out_three_halves_ok = d.three_halves_ok ? 1 : 0;
  });
}

int ma_gallery_check(int which, double epsilon, double theta, double out[5]) {
  return guarded([&] {
    GalleryDiagnostic d;
    switch (which) {
      case 0:
        d = gallery_regular_check(epsilon, 60);
        break;
      case 1:
        d = gallery_boundary_layer_check(epsilon);
        break;
      case 2:
        d = gallery_decay_check(epsilon);
        break;
      case 3:
        d = gallery_blowup_check(epsilon, theta);
        break;
      default:
        throw DomainError("gallery id must be 0..3");
    }
    out[0] = d.worst_error;
    out[1] = d.crossing_n;
    out[2] = d.predicted_n;
    out[3] = d.long_run_level;
    out[4] = d.finite_past_blowup ? 1.0 : 0.0;
  });
}

}  // extern "C"
