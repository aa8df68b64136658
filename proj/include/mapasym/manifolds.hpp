#ifndef MAPASYM_MANIFOLDS_HPP
#define MAPASYM_MANIFOLDS_HPP

#include <utility>

namespace mapasym {

enum class ManifoldBranch { Single, Plus, Minus };

// Fixed point (lambda-1)/lambda of the logistic map; lambda > 1.
double equilibrium_period1(double lambda);

// The 2-cycle pair (plus, minus); lambda >= 3.
std::pair<double, double> equilibrium_period2(double lambda);

// 1-periodic adiabatic manifold, partial sum through eps^order; order in {0,2,4,6}.
double adiabatic_period1(double lambda, double epsilon, int order);

// 2-periodic adiabatic manifold branches (plus, minus); order in {0,2}.
std::pair<double, double> adiabatic_period2(double lambda, double epsilon, int order);

enum class ManifoldKind { P1, P2 };

// Invariance defect of the truncated manifold under the swept map:
//   P1: |xbar(lambda+eps^2) - lambda xbar(lambda)(1 - xbar(lambda))|
//   P2: max over branches of |xbar^(-/+)(lambda+eps^2) - map(xbar^(+/-)(lambda))|.
// P1 is evaluated in exact rational arithmetic (the order-6 defect is far
// below double rounding).
double manifold_residual(double epsilon, double lambda, int order, ManifoldKind which);

}  // namespace mapasym

#endif
