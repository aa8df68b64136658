#include "mapasym/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mapasym/dynamic.hpp"
#include "mapasym/errors.hpp"
#include "mapasym/manifolds.hpp"
#include "mapasym/maps.hpp"
#include "mapasym/static_series.hpp"

namespace mapasym {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_static(Approximant a) {
  return a == Approximant::StaticEarlyOrder0 || a == Approximant::StaticEarlyOrder1 ||
         a == Approximant::StaticComposite;
}

double eval_approximant(Approximant which, const EarlySeriesStatic* series, std::int64_t n,
                        double epsilon, const Trajectory& exact) {
  switch (which) {
    case Approximant::ExactTrajectory:
      return exact.x[size_t(n)];
    case Approximant::StaticEarlyOrder0:
      return eval_early_static(*series, n, epsilon, 0);
    case Approximant::StaticEarlyOrder1:
      return eval_early_static(*series, n, epsilon, 1);
    case Approximant::StaticComposite:
      return composite_static(n, epsilon);
    case Approximant::DynamicEarlyOrder1:
      return early_dynamic(n, epsilon, 1);
    case Approximant::DynamicCompositeCubed:
      return composite_dynamic(n, epsilon, ExponentVariant::EpsCubed);
    case Approximant::DynamicCompositeThreeHalves:
      return composite_dynamic(n, epsilon, ExponentVariant::EpsThreeHalves);
  }
  throw DomainError("eval_approximant: unknown approximant");
}

// nearest integer to target with the given parity (0 even, 1 odd)
std::int64_t nearest_with_parity(double target, int parity) {
  std::int64_t n = std::int64_t(std::llround(target));
  if (((n % 2 + 2) % 2) != parity) {
    const std::int64_t lo = n - 1, hi = n + 1;
    n = (std::abs(double(lo) - target) <= std::abs(double(hi) - target)) ? lo : hi;
  }
  return n;
}

double rule_target(double epsilon, double K, ErrorScanRule rule) {
  switch (rule) {
    case ErrorScanRule::FixedSlowTime:
      return std::floor(1.0 / epsilon);
    case ErrorScanRule::Transition:
      return (K + 1.0 / K) / epsilon;
    case ErrorScanRule::LateTime:
      return (K + 15.0 / K) / epsilon;
  }
  throw DomainError("rule_target: unknown rule");
}

}  // namespace

double sup_norm_error(double epsilon, Approximant which, std::int64_t n_lo, std::int64_t n_hi) {
  if (n_hi < n_lo) throw DomainError("sup_norm_error: empty range");
  MapSpec map;
  map.kind = is_static(which) || which == Approximant::ExactTrajectory
                 ? MapKind::StaticLogistic
                 : MapKind::DynamicLogistic;
  map.epsilon = epsilon;
  const Trajectory traj = iterate(map, n_hi);
  EarlySeriesStatic series;
  if (which == Approximant::StaticEarlyOrder0 || which == Approximant::StaticEarlyOrder1)
    series = build_early_static(1);
  double worst = 0.0;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const double a = eval_approximant(which, &series, n, epsilon, traj);
    worst = std::max(worst, std::abs(traj.x[size_t(n)] - a));
  }
  return worst;
}

ErrorReport slope_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw FitError("slope_fit: need at least 3 points");
  ErrorReport rep;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double N = double(points.size());
  for (const auto& [eps, err] : points) {
    if (!(eps > 0.0)) throw FitError("slope_fit: epsilon must be positive");
    if (!(err > 0.0)) throw FitError("slope_fit: errors must be positive");
    rep.epsilons.push_back(eps);
    rep.errors.push_back(err);
    const double x = std::log(eps), y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double vxx = sxx - sx * sx / N;
  if (vxx <= 0.0) throw FitError("slope_fit: degenerate fit, all epsilons equal");
  const double vxy = sxy - sx * sy / N;
  const double vyy = syy - sy * sy / N;
  rep.fitted_slope = vxy / vxx;
  rep.fit_r2 = (vyy > 0.0) ? (vxy * vxy) / (vxx * vyy) : 1.0;
  return rep;
}

ErrorReport residual_order_check(int order, double t_eval) {
  if (order < 0 || order > 6) throw OrderError("residual_order_check: order must be <= 6");
  const EarlySeriesStatic s = build_early_static(order);

  // cache t-derivatives of f_r, g_r through order+1 at t_eval
  std::vector<std::vector<double>> fd(size_t(order) + 1), gd(size_t(order) + 1);
  for (int r = 0; r <= order; ++r)
    for (int j = 0; j <= order + 1; ++j) {
      fd[size_t(r)].push_back(s.f[size_t(r)].derivative(j).evaluate(t_eval));
      gd[size_t(r)].push_back(s.g[size_t(r)].derivative(j).evaluate(t_eval));
    }

  std::vector<std::pair<double, double>> pts;
  for (const double eps : {0.04, 0.02, 0.01, 0.005}) {
    double worst = 0.0;
    for (const double sigma : {1.0, -1.0}) {
      double X = 0.0, ep = 1.0;
      for (int r = 0; r <= order; ++r) {
        X += ep * (fd[size_t(r)][0] + sigma * gd[size_t(r)][0]);
        ep *= eps;
      }
      // X(n+1, t+eps) via the Taylor shift through order+1
      double lhs = 0.0;
      double fac = 1.0, epj = 1.0;
      for (int j = 0; j <= order + 1; ++j) {
        if (j > 0) {
          fac *= j;
          epj *= eps;
        }
        double inner = 0.0;
        double epr = 1.0;
        for (int r = 0; r <= order; ++r) {
          inner += epr * (fd[size_t(r)][size_t(j)] - sigma * gd[size_t(r)][size_t(j)]);
          epr *= eps;
        }
        lhs += epj / fac * inner;
      }
      const double rhs =
          2.0 / 9.0 - X - eps / 3.0 * X - 3.0 * eps * X * X - eps * eps * X * X;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    pts.emplace_back(eps, worst);
  }
  return slope_fit(pts);
}

double dynamic_point_error(double epsilon, ErrorScanRule rule, bool eps_cubed) {
  const double K = solve_K(epsilon).K;
  const double target = rule_target(epsilon, K, rule);
  MapSpec map;
  map.kind = MapKind::DynamicLogistic;
  map.epsilon = epsilon;
  const std::int64_t n_max = std::int64_t(target) + 2;
  const Trajectory traj = iterate(map, n_max);
  const ExponentVariant variant =
      eps_cubed ? ExponentVariant::EpsCubed : ExponentVariant::EpsThreeHalves;
  double worst = 0.0;
  for (int parity : {0, 1}) {
    const std::int64_t n = nearest_with_parity(target, parity);
    if (n < 0 || n > n_max) continue;
    const double err = std::abs(traj.x[size_t(n)] - composite_dynamic(n, epsilon, variant));
    worst = std::max(worst, err);
  }
  return worst;
}

ErrorReport dynamic_error_scan(ErrorScanRule rule, bool eps_cubed,
                               const std::vector<double>& epsilons) {
  std::vector<double> eps = epsilons;
  if (eps.empty()) eps = {0.02, 0.014, 0.01, 0.007, 0.005};
  std::vector<std::pair<double, double>> pts;
  for (const double e : eps) pts.emplace_back(e, dynamic_point_error(e, rule, eps_cubed));
  return slope_fit(pts);
}

ExponentDecision exponent_resolution(const std::vector<double>& epsilons) {
  if (epsilons.size() < 4) throw DomainError("exponent_resolution: need >= 4 epsilons");
  for (const double e : epsilons)
    if (e > 0.02) throw DomainError("exponent_resolution: epsilons must be <= 0.02");
  ExponentDecision d;
  d.epsilons = epsilons;
  d.cubed = dynamic_error_scan(ErrorScanRule::LateTime, true, epsilons);
  d.three_halves = dynamic_error_scan(ErrorScanRule::LateTime, false, epsilons);
  d.cubed_ok = std::abs(d.cubed.fitted_slope - 1.0) <= 0.3;
  d.three_halves_ok = std::abs(d.three_halves.fitted_slope - 1.0) <= 0.3;
  if (d.cubed_ok == d.three_halves_ok)
    d.decision = "inconclusive";
  else
    d.decision = d.cubed_ok ? "EpsCubed" : "EpsThreeHalves";
  return d;
}

std::string figure_data(int which, double epsilon) {
  std::ostringstream out;
  switch (which) {
    case 1: {
      const auto cols = bifurcation_scan(2.45, 3.8, 272, 2000, 64);
      out << "lambda,x\n";
      for (const auto& c : cols)
        for (const double v : c.values) out << num(c.lambda) << ',' << num(v) << '\n';
      break;
    }
    case 2: {
      const double eps = epsilon > 0.0 ? epsilon : 0.02;
      MapSpec map;
      map.epsilon = eps;
      const Trajectory traj = iterate(map, 300);
      const auto [p2p, p2m] = equilibrium_period2(3.0 + eps);
      out << "n,x,period2_plus,period2_minus\n";
      for (std::int64_t n = 0; n <= 300; ++n)
        out << n << ',' << num(traj.x[size_t(n)]) << ',' << num(p2p) << ',' << num(p2m)
            << '\n';
      break;
    }
    case 3: {
      const double eps = epsilon > 0.0 ? epsilon : 0.02;
      MapSpec map;
      map.epsilon = eps;
      const std::int64_t N = std::int64_t(1.6 * static_breakdown(eps).n_star);
      const Trajectory traj = iterate(map, N);
      const EarlySeriesStatic s = build_early_static(1);
      const double n_star = static_breakdown(eps).n_star;
      out << "n,x,early_order0,early_order1,n_star\n";
      for (std::int64_t n = 0; n <= N; ++n)
        out << n << ',' << num(traj.x[size_t(n)]) << ','
            << num(eval_early_static(s, n, eps, 0)) << ','
            << num(eval_early_static(s, n, eps, 1)) << ',' << num(n_star) << '\n';
      break;
    }
    case 4: {
      const double eps = epsilon > 0.0 ? epsilon : 0.02;
      MapSpec map;
      map.epsilon = eps;
      const double n_star = static_breakdown(eps).n_star;
      const std::int64_t N = std::int64_t(3.0 * n_star);
      const Trajectory traj = iterate(map, N);
      out << "n,x,composite,n_star\n";
      for (std::int64_t n = 0; n <= N; ++n)
        out << n << ',' << num(traj.x[size_t(n)]) << ',' << num(composite_static(n, eps))
            << ',' << num(n_star) << '\n';
      break;
    }
    case 5: {
      out << "epsilon,sup_error\n";
      for (const double eps : {0.04, 0.02, 0.01, 0.005, 0.0025}) {
        const std::int64_t N = std::int64_t(3.0 * static_breakdown(eps).n_star);
        out << num(eps) << ','
            << num(sup_norm_error(eps, Approximant::StaticComposite, 0, N)) << '\n';
      }
      break;
    }
    case 6: {
      const double eps = epsilon > 0.0 ? epsilon : 0.012;
      MapSpec map;
      map.kind = MapKind::DynamicLogistic;
      map.epsilon = eps;
      const std::int64_t N = std::int64_t(0.45 / (eps * eps));
      const Trajectory traj = iterate(map, N);
      out << "n,lambda,x\n";
      for (std::int64_t n = 0; n <= N; ++n)
        out << n << ',' << num(map.lambda_at(n)) << ',' << num(traj.x[size_t(n)]) << '\n';
      break;
    }
    case 7: {
      const double eps = epsilon > 0.0 ? epsilon : 0.02;
      MapSpec map;
      map.kind = MapKind::DynamicLogistic;
      map.epsilon = eps;
      const std::int64_t N = std::int64_t(1.5 * dynamic_breakdown(eps).n_star);
      const Trajectory traj = iterate(map, N);
      out << "n,lambda,x,early_order1\n";
      for (std::int64_t n = 0; n <= N; ++n)
        out << n << ',' << num(map.lambda_at(n)) << ',' << num(traj.x[size_t(n)]) << ','
            << num(early_dynamic(n, eps, 1)) << '\n';
      break;
    }
    case 8: {
      const double eps = epsilon > 0.0 ? epsilon : 0.01;
      MapSpec map;
      map.kind = MapKind::DynamicLogistic;
      map.epsilon = eps;
      const std::int64_t N = std::int64_t(0.35 / (eps * eps));
      const Trajectory traj = iterate(map, N);
      out << "n,lambda,x,composite\n";
      for (std::int64_t n = 0; n <= N; ++n)
        out << n << ',' << num(map.lambda_at(n)) << ',' << num(traj.x[size_t(n)]) << ','
            << num(composite_dynamic(n, eps, ExponentVariant::EpsCubed)) << '\n';
      break;
    }
    case 9: {
      out << "epsilon,rule,n,error\n";
      for (const auto& [rule, name] :
           std::vector<std::pair<ErrorScanRule, const char*>>{
               {ErrorScanRule::FixedSlowTime, "a"},
               {ErrorScanRule::Transition, "b"},
               {ErrorScanRule::LateTime, "c"}}) {
        for (const double eps : {0.02, 0.014, 0.01, 0.007, 0.005}) {
          const double K = solve_K(eps).K;
          const double target = rule_target(eps, K, rule);
          out << num(eps) << ',' << name << ',' << std::int64_t(std::llround(target)) << ','
              << num(dynamic_point_error(eps, rule, true)) << '\n';
        }
      }
      break;
    }
    default:
      throw DomainError("figure_data: unknown figure " + std::to_string(which));
  }
  return out.str();
}

}  // namespace mapasym
