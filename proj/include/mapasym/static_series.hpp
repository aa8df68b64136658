#ifndef MAPASYM_STATIC_SERIES_HPP
#define MAPASYM_STATIC_SERIES_HPP

#include <cstdint>
#include <vector>

#include "mapasym/maps.hpp"
#include "mapasym/polyexp.hpp"

namespace mapasym {

/// Early-time multiple-scales series for lambda = 3 + eps:
///   X_r(n,t) = f_r(t) + (-1)^n g_r(t),  t = eps n,
/// with f_0 = 1/9, g_0 = -(1/9) e^t, higher orders from the closed
/// recurrence (algebraic f_r, forced-linear g_r with g_r(0) = -f_r(0)).
struct EarlySeriesStatic {
  int order = 0;
  std::vector<PolyExpSum> f;  // f[0..order]
  std::vector<PolyExpSum> g;  // g[0..order]
};

// order <= 12 (coefficient sizes grow combinatorially beyond that).
EarlySeriesStatic build_early_static(int order);

// x = 2/3 + eps * sum_{r<=order} eps^r (f_r(t) + (-1)^n g_r(t)), t = eps n.
double eval_early_static(const EarlySeriesStatic& series, std::int64_t n, double epsilon,
                         int order);

struct StaticBreakdown {
  double n_star;        // (1/(2 eps)) log(1/eps)
  LateTimeFrame frame;  // delta = eps^{-1/2}, K0 = (1/2) log(1/eps), K1 = 1
};

StaticBreakdown static_breakdown(double epsilon);

// Two-term late-time expansion in the stretched frame:
//   xi = (-1)^m e^s / (3 sqrt(9 + e^{2s})) + sqrt(eps) (18 - e^{2s}) / (162 + 18 e^{2s}).
double late_static_two_term(std::int64_t m, double s, double epsilon);

// Uniformly valid composite in the original variables (accuracy O(eps^{3/2})).
double composite_static(std::int64_t n, double epsilon);

// The matched constant kappa_p = 9, verified by a numeric Van Dyke limit
// ratio at s = -30; throws MatchFailureError if the ratio strays from 1.
Rational matching_constant_static();

// Numeric Van Dyke ratio (late leading term over early leading term, both in
// x units) at given s; parity_flip selects (-1)^m = -(-1)^n (the correct
// opposite-parity rule) or (-1)^m = (-1)^n.
double static_match_ratio(double epsilon, double s, bool opposite_parity = true);

}  // namespace mapasym

#endif
