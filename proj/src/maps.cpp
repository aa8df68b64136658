#include "mapasym/maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapasym/errors.hpp"

namespace mapasym {

void MapSpec::validate() const {
  if (!(epsilon > 0.0) || epsilon > 0.25)
    throw DomainError("MapSpec: epsilon must lie in (0, 0.25], got " + std::to_string(epsilon));
  if (is_logistic() && !(x0 > 0.0 && x0 < 1.0))
    throw DomainError("MapSpec: logistic x0 must lie in (0,1), got " + std::to_string(x0));
  if (kind == MapKind::GalleryBlowup && !(theta > 0.0))
    throw DomainError("MapSpec: blow-up map needs theta > 0");
}

double MapSpec::lambda_at(std::int64_t n) const {
  switch (kind) {
    case MapKind::StaticLogistic:
      return 3.0 + epsilon;
    case MapKind::DynamicLogistic:
      return 3.0 + epsilon * epsilon * double(n);
    default:
      throw DomainError("lambda_at: not a logistic map");
  }
}

double step(const MapSpec& map, std::int64_t n, double x) {
  map.validate();
  switch (map.kind) {
    case MapKind::StaticLogistic:
    case MapKind::DynamicLogistic: {
      if (!(x > 0.0 && x < 1.0))
        throw DomainError("step: logistic state outside (0,1) at n=" + std::to_string(n));
      const double lam = map.lambda_at(n);
      if (lam > 4.0)
        throw RangeError("step: lambda cap exceeded, 3+eps^2*n = " + std::to_string(lam) +
                         " at n=" + std::to_string(n));
      return lam * x * (1.0 - x);
    }
    case MapKind::GalleryRegular:
      return x / 2.0 + map.epsilon * x * x;
    case MapKind::GalleryBoundaryLayer:
      return x / 2.0 + map.epsilon / x;
    case MapKind::GalleryDecay:
      return x - map.epsilon * x + map.epsilon * map.epsilon / x;
    case MapKind::GalleryBlowup:
      return x + map.epsilon * x * x;
  }
  throw DomainError("step: unknown map kind");
}

Trajectory iterate(const MapSpec& map, std::int64_t N) {
  map.validate();
  if (N < 1) throw DomainError("iterate: N must be >= 1");
  Trajectory out;
  out.map = map;
  out.x.reserve(size_t(N) + 1);
  out.x.push_back(map.x0);
  for (std::int64_t n = 0; n < N; ++n) {
    double next;
    try {
      next = step(map, n, out.x.back());
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (during iterate at n=" + std::to_string(n) + ")");
    }
    out.x.push_back(next);
  }
  return out;
}

double doubled_step_static(double epsilon, double X) {
  const double e = epsilon;
  const double X2 = X * X, X3 = X2 * X, X4 = X2 * X2;
  double out = X;
  out += e * (2.0 * X - 2.0 / 9.0);
  out += e * e * (-18.0 * X3 + 3.0 * X2 + X - 4.0 / 81.0);
  out += e * e * e * (-27.0 * X4 - 18.0 * X3 + 2.0 * X2 + 4.0 / 27.0 * X);
  out += e * e * e * e * (-27.0 * X4 - 6.0 * X3 + X2 / 3.0);
  out -= e * e * e * e * e * (9.0 * X4 + 2.0 / 3.0 * X3);
  out -= e * e * e * e * e * e * X4;
  return out;
}

std::vector<BifurcationColumn> bifurcation_scan(double lambda_min, double lambda_max,
                                                int n_lambda, std::int64_t transient,
                                                std::int64_t record) {
  if (!(lambda_min > 0.0) || lambda_max > 4.0)
    throw RangeError("bifurcation_scan: lambda must lie in (0,4]");
  if (!(2.0 < lambda_min && lambda_min < lambda_max))
    throw DomainError("bifurcation_scan: need 2 < lambda_min < lambda_max");
  if (n_lambda < 1) throw DomainError("bifurcation_scan: n_lambda must be >= 1");
  std::vector<BifurcationColumn> out;
  out.reserve(n_lambda);
  for (int i = 0; i < n_lambda; ++i) {
    const double lam =
        n_lambda == 1 ? lambda_min
                      : lambda_min + (lambda_max - lambda_min) * double(i) / double(n_lambda - 1);
    double x = 0.5;
    for (std::int64_t k = 0; k < transient; ++k) x = lam * x * (1.0 - x);
    BifurcationColumn col;
    col.lambda = lam;
    col.values.reserve(size_t(record));
    for (std::int64_t k = 0; k < record; ++k) {
      x = lam * x * (1.0 - x);
      col.values.push_back(x);
    }
    out.push_back(std::move(col));
  }
  return out;
}

int distinct_count(const std::vector<double>& values, double tol) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  int count = 0;
  double last = 0.0;
  for (double v : sorted) {
    if (count == 0 || v - last > tol) {
      ++count;
      last = v;
    }
  }
  return count;
}

LateTimeFrame make_frame(double epsilon, double delta, double K0, double K1, ParityRule parity) {
  LateTimeFrame frame;
  frame.delta = delta;
  frame.K0 = K0;
  frame.K1 = K1;
  frame.parity = parity;
  const double n0 = K0 / epsilon;
  // largest integer <= n0 whose parity makes n - m odd (Opposite) or even (Same)
  std::int64_t anchor = std::int64_t(std::floor(n0));
  const int want = parity == ParityRule::OppositeParity ? 1 : 0;
  if (((anchor % 2) + 2) % 2 != want) --anchor;
  frame.n_anchor = anchor;
  frame.gamma = n0 - double(anchor);
  return frame;
}

}  // namespace mapasym
