#ifndef MAPASYM_DYNAMIC_HPP
#define MAPASYM_DYNAMIC_HPP

#include <cstdint>

#include "mapasym/maps.hpp"
#include "mapasym/polyexp.hpp"

namespace mapasym {

struct KSolution {
  double epsilon = 0.0;
  double K = 0.0;        // eps^3 K^{-1} e^{K^2} = 1
  double residual = 0.0; // eps^3 K^{-1} e^{K^2} - 1 at the returned K
  int iterations = 0;
};

// Fixed-point iteration K <- sqrt(3 log(1/eps) + log K) seeded at
// sqrt(3 log(1/eps)).  eps in (0, 0.2], tol >= 1e-14.
KSolution solve_K(double epsilon, double tol = 1e-14);

// Two-term early-time approximation for lambda = 3 + eps^2 n:
//   x = xbar(3 + eps t) + eps^2 (1/18)(-1)^n e^{t^2/2}
//       - eps^3 (1/108)(-1)^n (t^3 + 5t) e^{t^2/2}   (order = 1),
// t = eps n, with xbar the slowly varying 1-periodic manifold through eps^4.
double early_dynamic(std::int64_t n, double epsilon, int order);

// Leading late-time solution in the stretched frame:
//   xi0 = (-1)^m e^{s + s^2/(2K^2)} / sqrt(324 + 18 K e^{2s + s^2/K^2} F(K + s/K)),
// F = Dawson's integral; evaluated in log space.
double late_dynamic_leading(std::int64_t m, double s, double K);

// Exponent of eps multiplying the erfi term of the composite denominator.
// The printed form uses 3/2; the self-consistent substitution of the K
// relation gives 3.  Both are available; see resolve-exponent.
enum class ExponentVariant { EpsCubed, EpsThreeHalves };

// x = (2+eps^2 n)/(3+eps^2 n) - eps^2/((2+eps^2 n)(3+eps^2 n)^2)
//     + eps^2 (-1)^n e^{(eps n)^2/2} / sqrt(324 + 9 sqrt(pi) eps^p erfi(eps n)),
// p = 3 (EpsCubed) or 3/2 (EpsThreeHalves).  Requires 3 + eps^2 n <= 4.
double composite_dynamic(std::int64_t n, double epsilon, ExponentVariant variant);

// Returns 324 after checking the Van Dyke limit ratio at s = -10, -20.
Rational matching_constant_dynamic(double epsilon);

struct DynamicBreakdown {
  KSolution k;
  double n_star;        // K/eps
  LateTimeFrame frame;  // delta = K^{1/2} eps^{-3/2}, K0 = K, K1 = 1/K
};

DynamicBreakdown dynamic_breakdown(double epsilon);

}  // namespace mapasym

#endif
