#include "mapasym/gallery.hpp"

#include <cmath>

#include "mapasym/errors.hpp"

namespace mapasym {

GalleryDiagnostic gallery_regular_check(double epsilon, std::int64_t N) {
  if (!(epsilon > 0.0 && epsilon <= 0.1))
    throw DomainError("gallery_regular_check: epsilon must lie in (0, 0.1]");
  GalleryDiagnostic d;
  d.map.kind = MapKind::GalleryRegular;
  d.map.epsilon = epsilon;
  d.map.x0 = 1.0;
  d.phenomenon = GalleryPhenomenon::RegularOK;
  const Trajectory traj = iterate(d.map, N);
  for (std::int64_t n = 0; n <= N; ++n) {
    const double p2 = std::exp2(double(-n));
    const double two_term = p2 + epsilon * 4.0 * (p2 - p2 * p2);
    d.worst_error = std::max(d.worst_error, std::abs(traj.x[size_t(n)] - two_term));
  }
  return d;
}

GalleryDiagnostic gallery_boundary_layer_check(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.01))
    throw DomainError("gallery_boundary_layer_check: epsilon must lie in (0, 0.01]");
  GalleryDiagnostic d;
  d.map.kind = MapKind::GalleryBoundaryLayer;
  d.map.epsilon = epsilon;
  d.map.x0 = 1.0;
  d.phenomenon = GalleryPhenomenon::BalanceChangeOnly;
  d.predicted_n = 0.5 * std::log2(1.0 / epsilon);
  const double threshold = 2.0 * std::sqrt(epsilon);
  double x = 1.0;
  const std::int64_t n_max = std::int64_t(10.0 * d.predicted_n) + 100;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    x = step(d.map, n - 1, x);
    if (x <= threshold) {
      d.crossing_n = double(n);
      break;
    }
  }
  d.long_run_level = x;
  return d;
}

GalleryDiagnostic gallery_decay_check(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.01))
    throw DomainError("gallery_decay_check: epsilon must lie in (0, 0.01]");
  GalleryDiagnostic d;
  d.map.kind = MapKind::GalleryDecay;
  d.map.epsilon = epsilon;
  d.map.x0 = 1.0;
  d.phenomenon = GalleryPhenomenon::MultipleScalesThenBalance;
  const double t_pred = 0.5 * std::log(1.0 / epsilon);
  d.predicted_n = t_pred / epsilon;
  const double threshold = 2.0 * std::sqrt(epsilon);
  const std::int64_t n_max = std::int64_t((t_pred + 10.0) / epsilon);
  double x = 1.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    x = step(d.map, n - 1, x);
    const double t = epsilon * double(n);
    if (t <= 1.0)
      d.worst_error = std::max(d.worst_error, std::abs(x - std::exp(-t)));
    if (d.crossing_n < 0.0 && x <= threshold) d.crossing_n = double(n);
  }
  d.long_run_level = x;
  return d;
}

GalleryDiagnostic gallery_blowup_check(double epsilon, double theta) {
  if (!(epsilon > 0.0 && epsilon <= 0.01))
    throw DomainError("gallery_blowup_check: epsilon must lie in (0, 0.01]");
  if (!(theta >= 0.5 && theta <= 2.0))
    throw DomainError("gallery_blowup_check: theta must lie in [0.5, 2]");
  GalleryDiagnostic d;
  d.map.kind = MapKind::GalleryBlowup;
  d.map.epsilon = epsilon;
  d.map.theta = theta;
  d.map.x0 = theta;
  d.phenomenon = GalleryPhenomenon::BlowupProxy;
  d.predicted_n = 1.0 / (theta * epsilon);  // continuum blow-up time t = 1/theta

  // iterate y = log x; x grows past double range before t = 1.05/theta
  const double log_eps = std::log(epsilon);
  const double margin = 2.0 * std::sqrt(epsilon);  // stay clear of the blow-up
  const std::int64_t n_half = std::int64_t(std::llround(0.5 / (theta * epsilon)));
  const std::int64_t n_probe = std::int64_t(std::ceil(1.05 / (theta * epsilon)));
  double y = std::log(theta);
  for (std::int64_t n = 1; n <= n_probe; ++n) {
    const double z = y + log_eps;
    y += (z > 36.0) ? z : std::log1p(std::exp(z));
    const double t = epsilon * double(n);
    const double rem = 1.0 - theta * t;
    if (rem >= margin) {
      const double approx = theta / rem;
      d.worst_error = std::max(d.worst_error, std::abs(std::exp(y) - approx) / approx);
    }
    if (d.crossing_n < 0.0 && y >= -log_eps) d.crossing_n = double(n);
    if (n == n_half) d.long_run_level = std::exp(y);
  }
  d.finite_past_blowup = std::isfinite(y);
  return d;
}

}  // namespace mapasym
