#include "mapasym/static_series.hpp"

#include <cmath>
#include <cstdlib>

#include "mapasym/errors.hpp"

namespace mapasym {

namespace {

Rational inv_factorial(int j) {
  Rational r(1);
  for (int i = 2; i <= j; ++i) r /= i;
  return r;
}

}  // namespace

EarlySeriesStatic build_early_static(int order) {
  if (order < 0) throw OrderError("build_early_static: order must be >= 0");
  if (order > 12) throw OrderError("build_early_static: order capped at 12");

  EarlySeriesStatic s;
  s.order = order;
  s.f.push_back(PolyExpSum::constant(Rational(1, 9)));
  s.g.push_back(PolyExpSum::term(Rational(-1, 9), 0, 1));

  for (int r = 1; r <= order; ++r) {
    const auto& f = s.f;
    const auto& g = s.g;

    // algebraic half of the order-r balance
    PolyExpSum fr = f[r - 1].scaled(Rational(-1, 6));
    PolyExpSum conv1;
    for (int k = 0; k <= r - 1; ++k) conv1 += f[k] * f[r - 1 - k] + g[k] * g[r - 1 - k];
    fr += conv1.scaled(Rational(-3, 2));
    PolyExpSum conv2;
    for (int k = 0; k <= r - 2; ++k) conv2 += f[k] * f[r - 2 - k] + g[k] * g[r - 2 - k];
    fr += conv2.scaled(Rational(-1, 2));
    for (int j = 1; j <= r; ++j)
      fr += f[r - j].derivative(j).scaled(inv_factorial(j) * Rational(-1, 2));

    // forcing for g_r' - g_r; the k=r convolution term needs f_r itself
    PolyExpSum rhs;
    for (int k = 1; k <= r - 1; ++k) rhs += (f[k] * g[r - k]).scaled(Rational(6));
    rhs += (fr * g[0]).scaled(Rational(6));
    for (int k = 0; k <= r - 1; ++k) rhs += (f[k] * g[r - 1 - k]).scaled(Rational(2));
    for (int j = 1; j <= r; ++j)
      rhs += g[r - j].derivative(j + 1).scaled(-inv_factorial(j + 1));

    PolyExpSum gr = solve_forced_linear(rhs, -fr.value_at_zero());
    s.f.push_back(fr);
    s.g.push_back(gr);
  }
  return s;
}

double eval_early_static(const EarlySeriesStatic& series, std::int64_t n, double epsilon,
                         int order) {
  if (order < 0 || order > series.order)
    throw OrderError("eval_early_static: order exceeds series order");
  const double t = epsilon * double(n);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  double sum = 0.0;
  double ep = 1.0;
  for (int r = 0; r <= order; ++r) {
    sum += ep * (series.f[r].evaluate(t) + sign * series.g[r].evaluate(t));
    ep *= epsilon;
  }
  return 2.0 / 3.0 + epsilon * sum;
}

StaticBreakdown static_breakdown(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.25))
    throw DomainError("static_breakdown: epsilon must lie in (0, 0.25]");
  StaticBreakdown b;
  const double log_inv = std::log(1.0 / epsilon);
  b.n_star = log_inv / (2.0 * epsilon);
  b.frame = make_frame(epsilon, 1.0 / std::sqrt(epsilon), 0.5 * log_inv, 1.0,
                       ParityRule::OppositeParity);
  return b;
}

double late_static_two_term(std::int64_t m, double s, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("late_static_two_term: epsilon must be positive");
  if (s > 350.0) throw OverflowError("late_static_two_term: s > 350");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double es = std::exp(s);
  const double e2s = es * es;
  const double leading = sign * es / (3.0 * std::sqrt(9.0 + e2s));
  const double correction = std::sqrt(epsilon) * (18.0 - e2s) / (162.0 + 18.0 * e2s);
  return leading + correction;
}

double composite_static(std::int64_t n, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("composite_static: epsilon must be positive");
  const double t = epsilon * double(n);
  if (t > 350.0) throw OverflowError("composite_static: eps*n > 350");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double et = std::exp(t);
  const double e2t = et * et;
  return 2.0 / 3.0 - sign * epsilon * et / (3.0 * std::sqrt(9.0 + epsilon * e2t)) +
         (18.0 * epsilon - epsilon * epsilon * e2t) / (162.0 + 18.0 * epsilon * e2t);
}

double static_match_ratio(double epsilon, double s, bool opposite_parity) {
  // late leading term at (m, s) against the early leading oscillation
  // -(1/9)(-1)^n e^t written in the stretched variables; both in X units.
  const StaticBreakdown b = static_breakdown(epsilon);
  const std::int64_t m = 0;
  const std::int64_t n = b.frame.n_of_m(m);
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double es = std::exp(s);
  const double late = sign_m * es / (3.0 * std::sqrt(9.0 + es * es));
  // t = K0 + s, so e^t = eps^{-1/2} e^s; in the delta-scaled variable
  // xi = sqrt(eps) X the early oscillation is -(1/9)(-1)^n e^s.
  double early = -(1.0 / 9.0) * sign_n * es;
  if (!opposite_parity) early = -early;  // pretend (-1)^m = (-1)^n
  return late / early;
}

Rational matching_constant_static() {
  // Van Dyke: inner limit of the late solution, (-1)^m e^s / kappa^{1/2},
  // must equal the rewritten early oscillation -(1/9)(-1)^n e^s.  With the
  // opposite-parity rule the signs agree and kappa = 9.
  const double epsilon = 0.01;
  const double s = -30.0;
  const StaticBreakdown b = static_breakdown(epsilon);
  const std::int64_t n = b.frame.n_of_m(0);
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double es = std::exp(s);
  const double late = 1.0 * es / (3.0 * std::sqrt(9.0 + es * es));  // m = 0
  const double early = -(1.0 / 9.0) * sign_n * es;
  const double ratio = late / early;
  if (std::abs(ratio - 1.0) > 1e-6)
    throw MatchFailureError("matching_constant_static: limit ratio deviates from 1");
  return Rational(9);
}

}  // namespace mapasym
