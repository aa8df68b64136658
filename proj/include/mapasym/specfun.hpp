#ifndef MAPASYM_SPECFUN_HPP
#define MAPASYM_SPECFUN_HPP

namespace mapasym {

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

// Dawson's integral F(x) = e^{-x^2} int_0^x e^{y^2} dy; odd, F(x) ~ 1/(2x).
SpecFunResult dawson(double x);

// Imaginary error function erfi(x) = (2/sqrt(pi)) int_0^x e^{y^2} dy,
// computed as 2 e^{x^2} F(x) / sqrt(pi).  Throws OverflowError for |x| > 26.
SpecFunResult erfi(double x);

// log(9 sqrt(pi) * scale * erfi(t)) evaluated through Dawson's integral in
// log space, finite for t up to 40; t > 0 required (returns -inf at t = 0).
double log_denominator(double t, double scale);

}  // namespace mapasym

#endif
