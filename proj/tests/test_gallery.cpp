#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mapasym/errors.hpp"
#include "mapasym/gallery.hpp"

using namespace mapasym;

TEST_CASE("regular perturbation stays uniformly accurate") {
  std::vector<double> slopes_x, slopes_y;
  for (const double eps : {0.05, 0.025, 0.0125}) {
    const auto d = gallery_regular_check(eps, 60);
    CHECK(d.phenomenon == GalleryPhenomenon::RegularOK);
    CHECK(d.worst_error <= 2.0 * eps * eps);
    slopes_x.push_back(std::log(eps));
    slopes_y.push_back(std::log(d.worst_error));
  }
  // two-point slope across the extremes: quadratic in eps
  const double slope = (slopes_y.front() - slopes_y.back()) / (slopes_x.front() - slopes_x.back());
  CHECK(std::abs(slope - 2.0) <= 0.3);
  // no secular growth: doubling the horizon leaves the worst error unchanged
  const auto short_run = gallery_regular_check(0.05, 30);
  const auto long_run = gallery_regular_check(0.05, 60);
  CHECK(long_run.worst_error == doctest::Approx(short_run.worst_error).epsilon(1e-12));
}

TEST_CASE("boundary-layer crossing sits an O(1) distance from its prediction") {
  std::vector<double> offsets;
  for (const double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const auto d = gallery_boundary_layer_check(eps);
    CHECK(d.phenomenon == GalleryPhenomenon::BalanceChangeOnly);
    REQUIRE(d.crossing_n > 0.0);
    offsets.push_back(d.crossing_n - d.predicted_n);
    CHECK(std::abs(d.crossing_n - d.predicted_n) <= 3.0);
  }
  const auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
  CHECK(*hi - *lo <= 3.0);
  CHECK_THROWS_AS(gallery_boundary_layer_check(0.05), DomainError);
}

TEST_CASE("decay map settles on the sqrt(eps) balance") {
  std::vector<double> t_offsets;
  for (const double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const auto d = gallery_decay_check(eps);
    CHECK(d.phenomenon == GalleryPhenomenon::MultipleScalesThenBalance);
    // early phase follows e^{-t}
    CHECK(d.worst_error <= 5.0 * eps);
    // settled level is sqrt(eps) to 10%
    CHECK(d.long_run_level == doctest::Approx(std::sqrt(eps)).epsilon(0.1));
    REQUIRE(d.crossing_n > 0.0);
    const double t_cross = eps * d.crossing_n;
    const double t_pred = eps * d.predicted_n;
    CHECK(std::abs(t_cross - t_pred) <= 1.0);
    t_offsets.push_back(t_cross - t_pred);
  }
  const auto [lo, hi] = std::minmax_element(t_offsets.begin(), t_offsets.end());
  CHECK(*hi - *lo <= 3.0);
}

TEST_CASE("blow-up proxy") {
  const auto d = gallery_blowup_check(1e-3, 1.0);
  CHECK(d.phenomenon == GalleryPhenomenon::BlowupProxy);
  // leading approximant tracks the iterates away from the blow-up time
  CHECK(d.worst_error <= 0.10);
  // x(t = 1/2) is near theta/(1 - theta t) = 2
  CHECK(d.long_run_level == doctest::Approx(2.0).epsilon(0.02));
  // the discrete solution survives past the continuum blow-up
  CHECK(d.finite_past_blowup);
  // x reaches 1/eps within O(eps) of t = 1/theta
  CHECK(d.crossing_n > d.predicted_n - 20.0);
  CHECK(d.crossing_n < d.predicted_n + 20.0);
  CHECK_THROWS_AS(gallery_blowup_check(1e-3, 3.0), DomainError);
  CHECK_THROWS_AS(gallery_blowup_check(0.05, 1.0), DomainError);
}

TEST_CASE("blow-up scaling holds at other starting heights") {
  for (const double theta : {0.5, 2.0}) {
    const auto d = gallery_blowup_check(1e-3, theta);
    CHECK(d.finite_past_blowup);
    CHECK(std::abs(d.crossing_n - d.predicted_n) <= 40.0);
    CHECK(d.worst_error <= 0.10);
  }
}
