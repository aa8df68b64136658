#ifndef MAPASYM_GALLERY_HPP
#define MAPASYM_GALLERY_HPP

#include <cstdint>

#include "mapasym/maps.hpp"

namespace mapasym {

enum class GalleryPhenomenon {
  RegularOK,                // naive expansion stays uniformly valid
  BalanceChangeOnly,        // boundary-layer style loss of a dominant balance
  MultipleScalesThenBalance,// slow decay followed by a new balance
  BlowupProxy,              // finite-time blow-up of the continuum limit
};

struct GalleryDiagnostic {
  MapSpec map;
  GalleryPhenomenon phenomenon;
  double worst_error = 0.0;     // regular: max |exact - two-term|
  double crossing_n = -1.0;     // boundary layer / decay / blowup threshold hit
  double predicted_n = -1.0;    // asymptotic prediction for the same event
  double long_run_level = 0.0;  // decay: settled value; blowup: x at probe time
  bool finite_past_blowup = false;
};

// x(n+1) = x/2 + eps x^2: two-term expansion 2^{-n} + eps 4(2^{-n} - 4^{-n})
// stays within O(eps^2) of the iterates for all n.
GalleryDiagnostic gallery_regular_check(double epsilon, std::int64_t N);

// x(n+1) = x/2 + eps/x from x(0)=1: decay breaks when x = ord(sqrt(eps));
// reports the first n with x <= 2 sqrt(eps) against (1/2) log2(1/eps).
GalleryDiagnostic gallery_boundary_layer_check(double epsilon);

// x(n+1) = x - eps x + eps^2/x from x(0)=1: early decay e^{-eps n}, then a
// new balance at the level sqrt(eps) near t = (1/2) log(1/eps).
GalleryDiagnostic gallery_decay_check(double epsilon);

// x(n+1) = x + eps x^2 from x(0)=theta: leading approximant theta/(1-theta t)
// blows up at t = 1/theta but the iterates stay finite; x reaches ord(1/eps)
// within O(eps) of the blow-up time.
GalleryDiagnostic gallery_blowup_check(double epsilon, double theta);

}  // namespace mapasym

#endif
