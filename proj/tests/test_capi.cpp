#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "mapasym.h"

TEST_CASE("step and iterate through the C interface") {
  double out = 0.0;
  REQUIRE(ma_step(MA_MAP_STATIC_LOGISTIC, 0.02, 1.0, 0, 2.0 / 3.0, &out) == MA_OK);
  CHECK(out == doctest::Approx(3.02 * (2.0 / 3.0) * (1.0 / 3.0)));

  char* csv = nullptr;
  REQUIRE(ma_iterate_csv(MA_MAP_STATIC_LOGISTIC, 0.02, 2.0 / 3.0, 1.0, 5, &csv) == MA_OK);
  const std::string s(csv);
  ma_string_free(csv);
  CHECK(s.rfind("n,lambda,x\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 7);  // header + 6 rows
}

TEST_CASE("error codes carry messages") {
  double out = 0.0;
  CHECK(ma_adiabatic_p1(3.2, 0.01, 5, &out) == MA_ERR_ORDER);
  CHECK(std::strlen(ma_last_error_message()) > 0);
  CHECK(ma_step(99, 0.02, 1.0, 0, 0.5, &out) == MA_ERR_DOMAIN);
  // dynamic sweep past the lambda cap
  CHECK(ma_composite_dynamic(20000, 0.01, 1, &out) == MA_ERR_RANGE);
  // success clears the message
  CHECK(ma_equilibrium_p1(3.0, &out) == MA_OK);
  CHECK(std::strlen(ma_last_error_message()) == 0);
  CHECK(out == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("early static series lifecycle") {
  ma_early_series* series = nullptr;
  REQUIRE(ma_early_static_build(1, &series) == MA_OK);
  double x = 0.0;
  REQUIRE(ma_early_static_eval(series, 0, 0.02, 1, &x) == MA_OK);
  CHECK(x == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  char* f = nullptr;
  char* g = nullptr;
  REQUIRE(ma_early_static_render(series, 1, &f, &g) == MA_OK);
  CHECK(std::string(f) == "(-1/27) + (-1/54)*exp(2t)");
  CHECK(std::string(g) == "(4/81 + 1/18 t)*exp(t) + (1/162)*exp(3t)");
  ma_string_free(f);
  ma_string_free(g);
  CHECK(ma_early_static_render(series, 2, &f, &g) == MA_ERR_ORDER);
  ma_early_static_free(series);
  CHECK(ma_early_static_eval(nullptr, 0, 0.02, 0, &x) == MA_ERR_DOMAIN);
  CHECK(ma_early_static_build(20, &series) == MA_ERR_ORDER);
}

TEST_CASE("scalar solvers") {
  double K = 0.0, residual = 0.0;
  int iterations = 0;
  REQUIRE(ma_solve_k(0.01, 1e-14, &K, &residual, &iterations) == MA_OK);
  CHECK(K == doctest::Approx(3.8955547).epsilon(1e-7));
  CHECK(std::abs(residual) <= 1e-12);
  CHECK(iterations <= 50);

  double value = 0.0, err = 0.0;
  REQUIRE(ma_dawson(1.0, &value, &err) == MA_OK);
  CHECK(value == doctest::Approx(0.5380795069).epsilon(1e-9));
  CHECK(ma_erfi(30.0, &value, &err) == MA_ERR_OVERFLOW);

  double kappa = 0.0;
  REQUIRE(ma_matching_constant_static(&kappa) == MA_OK);
  CHECK(kappa == 9.0);
  REQUIRE(ma_matching_constant_dynamic(0.01, &kappa) == MA_OK);
  CHECK(kappa == 324.0);
}

TEST_CASE("composites and breakdown markers") {
  double x = 0.0;
  REQUIRE(ma_composite_static(0, 0.02, &x) == MA_OK);
  CHECK(std::abs(x - 2.0 / 3.0) <= 2.0 * std::pow(0.02, 1.5));
  double n_star = 0.0;
  REQUIRE(ma_static_breakdown(0.02, &n_star) == MA_OK);
  CHECK(n_star == doctest::Approx(25.0 * std::log(50.0)));
  double K = 0.0;
  REQUIRE(ma_dynamic_breakdown(0.01, &n_star, &K) == MA_OK);
  CHECK(n_star == doctest::Approx(K / 0.01));
}

TEST_CASE("bulk CSV and gallery endpoints") {
  char* csv = nullptr;
  REQUIRE(ma_bifurcation_csv(2.8, 3.5, 8, 500, 8, &csv) == MA_OK);
  CHECK(std::string(csv).rfind("lambda,x\n", 0) == 0);
  ma_string_free(csv);

  REQUIRE(ma_figure_csv(5, 0.0, &csv) == MA_OK);
  CHECK(std::string(csv).rfind("epsilon,sup_error\n", 0) == 0);
  ma_string_free(csv);
  CHECK(ma_figure_csv(12, 0.0, &csv) == MA_ERR_DOMAIN);

  double diag[5] = {0, 0, 0, 0, 0};
  REQUIRE(ma_gallery_check(3, 1e-3, 1.0, diag) == MA_OK);
  CHECK(diag[4] == 1.0);  // finite past the blow-up
  CHECK(ma_gallery_check(7, 1e-3, 1.0, diag) == MA_ERR_DOMAIN);
}
