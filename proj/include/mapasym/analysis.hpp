#ifndef MAPASYM_ANALYSIS_HPP
#define MAPASYM_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mapasym {

struct ErrorReport {
  std::vector<double> epsilons;
  std::vector<double> errors;
  double fitted_slope = 0.0;
  double fit_r2 = 0.0;
};

enum class Approximant {
  ExactTrajectory,  // degenerate reference, error identically zero
  StaticEarlyOrder0,
  StaticEarlyOrder1,
  StaticComposite,
  DynamicEarlyOrder1,
  DynamicCompositeCubed,
  DynamicCompositeThreeHalves,
};

// max over n in [n_lo, n_hi] of |iterate - approximant|
double sup_norm_error(double epsilon, Approximant which, std::int64_t n_lo, std::int64_t n_hi);

// least-squares slope and R^2 on (log eps, log error); needs >= 3 points
ErrorReport slope_fit(const std::vector<std::pair<double, double>>& points);

// Residual of the order-`order` truncated early static series in the rescaled
// map, with the slow time shifted by an exact Taylor expansion through order
// order+1, at fixed t across the ladder eps in {0.04, 0.02, 0.01, 0.005}.
// Expected fitted slope: order + 1.
ErrorReport residual_order_check(int order, double t_eval);

// CSV data behind each published figure; epsilon = 0 selects the figure's
// default.  Deterministic: same arguments give byte-identical output.
std::string figure_data(int which, double epsilon = 0.0);

// Sampling rules for the swept-parameter error scans.
enum class ErrorScanRule {
  FixedSlowTime,  // n = floor(1/eps), t = O(1)
  Transition,     // n near (K + 1/K)/eps, s = O(1)
  LateTime,       // n near (K + 15/K)/eps
};

// Pointwise |iterate - composite| at the rule's n, taking whichever parity
// neighbour carries the larger error (the branch-selection convention).
double dynamic_point_error(double epsilon, ErrorScanRule rule, bool eps_cubed = true);

ErrorReport dynamic_error_scan(ErrorScanRule rule, bool eps_cubed = true,
                               const std::vector<double>& epsilons = {});

struct ExponentDecision {
  std::vector<double> epsilons;
  ErrorReport cubed;
  ErrorReport three_halves;
  bool cubed_ok = false;
  bool three_halves_ok = false;
  std::string decision;  // "EpsCubed", "EpsThreeHalves", or "inconclusive"
};

// Runs the late-time fixed-s scan for both composite denominators and flags
// which exponent achieves slope 1 +- 0.3 with the smaller error.
ExponentDecision exponent_resolution(const std::vector<double>& epsilons);

}  // namespace mapasym

#endif
