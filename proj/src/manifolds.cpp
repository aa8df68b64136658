#include "mapasym/manifolds.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "mapasym/errors.hpp"

namespace mapasym {

double equilibrium_period1(double lambda) {
  if (!(lambda > 1.0)) throw DomainError("equilibrium_period1: need lambda > 1");
  return (lambda - 1.0) / lambda;
}

std::pair<double, double> equilibrium_period2(double lambda) {
  const double disc = lambda * lambda - 2.0 * lambda - 3.0;
  if (disc < 0.0)
    throw DomainError("equilibrium_period2: discriminant negative for lambda = " +
                      std::to_string(lambda));
  const double root = std::sqrt(disc);
  return {(lambda + 1.0 + root) / (2.0 * lambda), (lambda + 1.0 - root) / (2.0 * lambda)};
}

namespace {

template <typename T>
T adiabatic_p1_sum(const T& lam, const T& eps2, int order) {
  T s = (lam - 1) / lam;
  if (order >= 2) s -= eps2 / ((lam - 1) * lam * lam);
  if (order >= 4)
    s += eps2 * eps2 * (lam * lam - 5 * lam + 2) /
         ((lam - 1) * (lam - 1) * (lam - 1) * lam * lam * lam);
  if (order >= 6) {
    const T lam2 = lam * lam;
    const T num = -lam2 * lam2 + 14 * lam2 * lam - 44 * lam2 + 27 * lam - 6;
    T den = (lam - 1);
    den = den * den * den * den * den * lam2 * lam2;
    s += eps2 * eps2 * eps2 * num / den;
  }
  return s;
}

void check_p1_order(int order) {
  if (order != 0 && order != 2 && order != 4 && order != 6)
    throw OrderError("adiabatic_period1: order must be one of {0,2,4,6}");
}

}  // namespace

double adiabatic_period1(double lambda, double epsilon, int order) {
  check_p1_order(order);
  if (lambda - 1.0 < 0.1)
    throw DomainError("adiabatic_period1: series unusable for lambda - 1 < 0.1");
  return adiabatic_p1_sum<double>(lambda, epsilon * epsilon, order);
}

std::pair<double, double> adiabatic_period2(double lambda, double epsilon, int order) {
  if (order != 0 && order != 2)
    throw OrderError("adiabatic_period2: order must be 0 or 2");
  if (lambda - 3.0 < 5.0 * epsilon)
    throw DomainError("adiabatic_period2: expansion disordered for lambda - 3 < 5 eps");
  auto [xp, xm] = equilibrium_period2(lambda);
  if (order >= 2) {
    const double e2 = epsilon * epsilon;
    const double lam = lambda;
    const double sym = (lam + 3.0) / (2.0 * (lam - 3.0) * lam * lam * (lam + 1.0));
    const double anti = (lam * lam - 4.0 * lam - 9.0) /
                        (2.0 * std::pow(lam - 3.0, 1.5) * lam * lam * std::pow(lam + 1.0, 1.5));
    xp += e2 * (sym + anti);
    xm += e2 * (sym - anti);
  }
  return {xp, xm};
}

double manifold_residual(double epsilon, double lambda, int order, ManifoldKind which) {
  if (which == ManifoldKind::P1) {
    check_p1_order(order);
    if (lambda - 1.0 < 0.1)
      throw DomainError("manifold_residual: series unusable for lambda - 1 < 0.1");
    // exact: doubles are rationals, so the defect is computed without rounding
    const mpq_class lam(lambda), eps2 = mpq_class(epsilon) * mpq_class(epsilon);
    const mpq_class x0 = adiabatic_p1_sum<mpq_class>(lam, eps2, order);
    const mpq_class x1 = adiabatic_p1_sum<mpq_class>(lam + eps2, eps2, order);
    return std::abs(mpq_class(x1 - lam * x0 * (1 - x0)).get_d());
  }
  auto [xp0, xm0] = adiabatic_period2(lambda, epsilon, order);
  const double eps2 = epsilon * epsilon;
  auto [xp1, xm1] = adiabatic_period2(lambda + eps2, epsilon, order);
  // one application of the swept map carries each branch onto the other
  const double dp = std::abs(xm1 - lambda * xp0 * (1.0 - xp0));
  const double dm = std::abs(xp1 - lambda * xm0 * (1.0 - xm0));
  return std::max(dp, dm);
}

}  // namespace mapasym
