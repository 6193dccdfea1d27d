#include <cmath>

#include "csusy/errors.hpp"
#include "csusy/pipeline.hpp"
#include "doctest.h"

using namespace csusy;

TEST_CASE("regularity scan brackets sign changes") {
  Grid g(-5.0, 5.0, 2001);
  const auto clean = SampledFunction::sample(g, [](double x) { return 2.0 + std::tanh(x); });
  const auto r1 = regularity_scan(clean);
  CHECK(r1.is_regular);
  CHECK(r1.zero_brackets.empty());

  const auto dirty = SampledFunction::sample(g, [](double x) { return std::tanh(x - 0.5017); });
  const auto r2 = regularity_scan(dirty);
  CHECK_FALSE(r2.is_regular);
  REQUIRE(r2.zero_brackets.size() == 1);
  CHECK(r2.zero_brackets[0].first <= 0.5017);
  CHECK(r2.zero_brackets[0].second >= 0.5017);
  CHECK(r2.zero_brackets[0].second - r2.zero_brackets[0].first < 1e-9);
}

TEST_CASE("normalization") {
  Grid g(-8.0, 8.0, 3201);
  const auto gauss = SampledFunction::sample(g, [](double x) { return 3.0 * std::exp(-x * x); });
  const auto n = normalize(gauss);
  double l2 = 0.0;
  for (int i = 0; i < n.size(); ++i) l2 += n.values[i] * n.values[i] * g.spacing();
  CHECK(l2 == doctest::Approx(1.0).epsilon(1e-4));
  const auto flat = SampledFunction::sample(g, [](double) { return 1.0; });
  CHECK_THROWS_AS(normalize(flat), NotSquareIntegrableError);
}

TEST_CASE("order-4 transform end to end") {
  TransformSpec spec;
  spec.lambda = -0.5;
  spec.order = 4;
  spec.top_constant = 50.0;
  const auto res = run_transform(spec);

  CHECK(res.regularity.is_regular);
  REQUIRE(res.constants_used.size() == 4);
  // the admixture realization must land the requested top-level constant
  CHECK(res.constants_used[2] == doctest::Approx(50.0).epsilon(1e-8));
  CHECK(res.residual_phi < 1e-5);
  CHECK(res.residual_chi_perp < 1e-5);
  CHECK(res.phi_route_deviation >= 0.0);
  CHECK(res.phi_route_deviation < 1e-5);

  // the potential deformation keeps the asymptotics of the base well
  CHECK(std::abs(res.v_n.values.front()) < 1e-4);
  CHECK(std::abs(res.v_n.values.back()) < 1e-4);

  // pair Wronskian equals 1 after reconciliation, relative to its terms
  double worst = 0.0;
  for (int i = 0; i < res.chi.size(); ++i) {
    const double t1 = res.chi_perp.values[i] * res.chi.derivatives[i];
    const double t2 = res.chi_perp.derivatives[i] * res.chi.values[i];
    worst = std::max(worst, std::abs(t1 - t2 - 1.0) / (1.0 + std::abs(t1) + std::abs(t2)));
  }
  CHECK(worst < 1e-12);

  const auto eigs = transform_spectrum(res, 2);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(eigs[1] == doctest::Approx(-0.5).epsilon(1e-3));
}

TEST_CASE("negative top constant makes the wronskian singular") {
  TransformSpec spec;
  spec.lambda = -0.5;
  spec.order = 4;
  spec.top_constant = -1.0;
  CHECK_THROWS_AS(run_transform(spec), SingularityError);
  try {
    run_transform(spec);
  } catch (const SingularityError& e) {
    CHECK(e.brackets().size() >= 1);
  }
}

TEST_CASE("order-5 transform uses the integral route for phi") {
  TransformSpec spec;
  spec.lambda = -1.5;
  spec.order = 5;
  spec.top_constant = 0.01;
  const auto res = run_transform(spec);
  CHECK(res.regularity.is_regular);
  CHECK(res.residual_phi < 1e-5);
  CHECK(res.residual_chi_perp < 1e-5);
  // the chain stops at order 3, so no determinant cross-check is available
  CHECK(res.phi_route_deviation == -1.0);
  const auto eigs = transform_spectrum(res, 2);
  CHECK(eigs[0] == doctest::Approx(-1.5).epsilon(1e-3));
  CHECK(eigs[1] == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("first-order transform keeps the base bound state") {
  TransformSpec spec;
  spec.lambda = -4.0;
  spec.order = 1;
  const auto res = run_transform(spec);
  CHECK(res.regularity.is_regular);
  CHECK(res.residual_phi < 1e-5);
  const auto eigs = transform_spectrum(res, 1);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-3));
}
