#ifndef MAPASYM_MAPS_HPP
#define MAPASYM_MAPS_HPP

#include <cstdint>
#include <vector>

namespace mapasym {

enum class MapKind {
  StaticLogistic,       // x(n+1) = (3+eps) x (1-x)
  DynamicLogistic,      // x(n+1) = (3+eps^2 n) x (1-x)
  GalleryRegular,       // x(n+1) = x/2 + eps x^2
  GalleryBoundaryLayer, // x(n+1) = x/2 + eps/x
  GalleryDecay,         // x(n+1) = x - eps x + eps^2/x
  GalleryBlowup,        // x(n+1) = x + eps x^2, x(0) = theta
};

struct MapSpec {
  MapKind kind = MapKind::StaticLogistic;
  double epsilon = 0.02;
  double x0 = 2.0 / 3.0;
  double theta = 1.0;  // GalleryBlowup only

  void validate() const;  // throws DomainError / RangeError
  bool is_logistic() const {
    return kind == MapKind::StaticLogistic || kind == MapKind::DynamicLogistic;
  }
  double lambda_at(std::int64_t n) const;  // logistic kinds only
};

struct Trajectory {
  MapSpec map;
  std::vector<double> x;  // x[n], n = 0..N

  double slow_t(std::int64_t n) const { return map.epsilon * double(n); }
  double slow_tau(std::int64_t n) const { return map.epsilon * map.epsilon * double(n); }
};

// Single-step image; pure and deterministic.
double step(const MapSpec& map, std::int64_t n, double x);

// N steps from map.x0; each entry equals step() of its predecessor.
Trajectory iterate(const MapSpec& map, std::int64_t N);

// X(n+2) from the explicit degree-4 polynomial of the doubled rescaled map.
double doubled_step_static(double epsilon, double X);

struct BifurcationColumn {
  double lambda;
  std::vector<double> values;
};

// For each lambda: `transient` iterations from x0 = 0.5, then `record` values.
std::vector<BifurcationColumn> bifurcation_scan(double lambda_min, double lambda_max,
                                                int n_lambda, std::int64_t transient,
                                                std::int64_t record);

// Number of distinct values in a column under an absolute clustering tolerance.
int distinct_count(const std::vector<double>& values, double tol = 1e-6);

enum class ParityRule { OppositeParity, SameParity };

// Shift-and-stretch change of variables between (n, t) and (m, s):
//   t = K0 + K1 s,   n = K0/epsilon - gamma + m,
// with gamma in [0,2) chosen so n is an integer obeying the parity rule.
struct LateTimeFrame {
  double delta = 1.0;
  double K0 = 0.0;
  double K1 = 1.0;
  double gamma = 0.0;
  ParityRule parity = ParityRule::OppositeParity;
  std::int64_t n_anchor = 0;  // n at m = 0; n = n_anchor + m exactly

  std::int64_t n_of_m(std::int64_t m) const { return n_anchor + m; }
  double s_of_n(std::int64_t n, double epsilon) const {
    return (epsilon * double(n) - K0) / K1;
  }
};

// Frame anchored at n0 = K0/epsilon with the requested parity of n_anchor - m.
LateTimeFrame make_frame(double epsilon, double delta, double K0, double K1, ParityRule parity);

}  // namespace mapasym

#endif
