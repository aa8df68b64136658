#include "mapasym/dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mapasym/errors.hpp"
#include "mapasym/manifolds.hpp"
#include "mapasym/specfun.hpp"

namespace mapasym {

namespace {

constexpr double kLog324 = 5.780743515792329; // log(324)

double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

}  // namespace

KSolution solve_K(double epsilon, double tol) {
  if (!(epsilon > 0.0 && epsilon <= 0.2)) throw DomainError("solve_K: epsilon outside (0, 0.2]");
  if (!(tol >= 1e-14)) throw DomainError("solve_K: tol must be >= 1e-14");
  const double base = 3.0 * std::log(1.0 / epsilon);
  KSolution sol;
  sol.epsilon = epsilon;
  double K = std::sqrt(base);
  int it = 0;
  for (; it < 200; ++it) {
    const double next = std::sqrt(base + std::log(K));
    const double change = std::abs(next - K);
    K = next;
    if (change <= tol) break;
  }
  if (it >= 200) throw NoConvergenceError("solve_K: no convergence in 200 iterations");
  sol.K = K;
  sol.iterations = it + 1;
  sol.residual = std::expm1(3.0 * std::log(epsilon) - std::log(K) + K * K);
  return sol;
}

double early_dynamic(std::int64_t n, double epsilon, int order) {
  if (order != 0 && order != 1) throw OrderError("early_dynamic: order must be 0 or 1");
  const double t = epsilon * double(n);
  if (t * t / 2.0 > 700.0) throw OverflowError("early_dynamic: exp(t^2/2) overflows");
  const double lambda = 3.0 + epsilon * t;
  double x = adiabatic_period1(lambda, epsilon, 4);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double env = std::exp(t * t / 2.0);
  x += epsilon * epsilon * sign * env / 18.0;
  if (order >= 1)
    x -= epsilon * epsilon * epsilon * sign * (t * t * t + 5.0 * t) * env / 108.0;
  return x;
}

double late_dynamic_leading(std::int64_t m, double s, double K) {
  if (!(K > 0.0)) throw DomainError("late_dynamic_leading: K must be positive");
  const double a = s + s * s / (2.0 * K * K); // numerator exponent
  const double F = dawson(K + s / K).value;
  // log denominator = logaddexp(log 324, log(18 K F) + 2a); F > 0 whenever the
  // tail term matters, so the log is safe.
  double log_tail;
  if (F > 0.0)
    log_tail = std::log(18.0 * K * F) + 2.0 * a;
  else
    log_tail = -std::numeric_limits<double>::infinity(); // early side: term negligible
  const double log_den = logaddexp(kLog324, log_tail);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(a - 0.5 * log_den);
}

double composite_dynamic(std::int64_t n, double epsilon, ExponentVariant variant) {
  if (!(epsilon > 0.0)) throw DomainError("composite_dynamic: epsilon must be positive");
  const double tau = epsilon * epsilon * double(n);
  const double lambda = 3.0 + tau;
  if (lambda > 4.0) throw RangeError("composite_dynamic: lambda = 3 + eps^2 n exceeds 4");
  const double t = epsilon * double(n);
  const double mean = (2.0 + tau) / lambda - epsilon * epsilon / ((2.0 + tau) * lambda * lambda);
  const double p = (variant == ExponentVariant::EpsCubed) ? 3.0 : 1.5;
  // 9 sqrt(pi) eps^p erfi(t) handled in log space through Dawson's integral
  double log_tail;
  if (t > 0.0)
    log_tail = log_denominator(t, std::pow(epsilon, p));
  else
    log_tail = -std::numeric_limits<double>::infinity();
  const double log_amp = t * t / 2.0 - 0.5 * logaddexp(kLog324, log_tail);
  if (log_amp > 700.0) throw OverflowError("composite_dynamic: amplitude overflows");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return mean + epsilon * epsilon * sign * std::exp(log_amp);
}

Rational matching_constant_dynamic(double epsilon) {
  const KSolution sol = solve_K(epsilon);
  const double K = sol.K;
  const double delta = std::sqrt(K) * std::pow(epsilon, -1.5);
  const LateTimeFrame frame =
      make_frame(epsilon, delta, K, 1.0 / K, ParityRule::SameParity);
  for (const double s : {-10.0, -20.0}) {
    const std::int64_t n = frame.n_of_m(0);
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    const double t = K + s / K;
    const double late = delta * late_dynamic_leading(0, s, K);
    const double early = sign_n * std::exp(t * t / 2.0) / 18.0;
    const double ratio = late / early;
    if (std::abs(ratio - 1.0) > 1e-6)
      throw MatchFailureError("matching_constant_dynamic: limit ratio deviates from 1");
  }
  return Rational(324);
}

DynamicBreakdown dynamic_breakdown(double epsilon) {
  DynamicBreakdown b;
  b.k = solve_K(epsilon);
  b.n_star = b.k.K / epsilon;
  b.frame = make_frame(epsilon, std::sqrt(b.k.K) * std::pow(epsilon, -1.5), b.k.K,
                       1.0 / b.k.K, ParityRule::SameParity);
  return b;
}

}  // namespace mapasym
