#include "mapasym/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dawson.h>

#include <cmath>
#include <limits>
#include <string>

#include "mapasym/errors.hpp"

namespace mapasym {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

struct GslHandlerGuard {
  gsl_error_handler_t* prev;
  GslHandlerGuard() : prev(gsl_set_error_handler_off()) {}
  ~GslHandlerGuard() { gsl_set_error_handler(prev); }
};
}  // namespace

SpecFunResult dawson(double x) {
  if (std::abs(x) > 1e8) throw DomainError("dawson: |x| > 1e8");
  GslHandlerGuard guard;
  gsl_sf_result r;
  const int status = gsl_sf_dawson_e(x, &r);
  if (status != GSL_SUCCESS)
    throw DomainError("dawson: gsl error " + std::string(gsl_strerror(status)));
  return {r.val, r.err};
}

SpecFunResult erfi(double x) {
  if (std::abs(x) > 26.0) throw OverflowError("erfi: exp(x^2) overflows for |x| > 26");
  const SpecFunResult f = dawson(x);
  const double scale = 2.0 * std::exp(x * x) / kSqrtPi;
  return {scale * f.value, scale * f.est_abs_error + 1e-15 * std::abs(scale * f.value)};
}

double log_denominator(double t, double scale) {
  if (t < 0.0) throw DomainError("log_denominator: t must be >= 0");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  // 9 sqrt(pi) c erfi(t) = 18 c F(t) e^{t^2}
  return std::log(18.0 * scale * dawson(t).value) + t * t;
}

}  // namespace mapasym
