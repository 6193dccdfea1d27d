#include <cmath>
#include <memory>

#include "csusy/errors.hpp"
#include "csusy/jordan_chain.hpp"
#include "csusy/wronskian.hpp"
#include "doctest.h"

using namespace csusy;

namespace {

const Grid kGrid(-12.0, 12.0, 4801);

std::shared_ptr<const Potential> pt_potential() {
  return std::make_shared<PoschlTellerPotential>();
}

double rel_worst(const SampledFunction& a, const SampledFunction& b) {
  const double floor = 1e-8 * b.max_abs();
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i)
    if (std::abs(b.values[i]) > floor)
      worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / std::abs(b.values[i]));
  return worst;
}

}  // namespace

TEST_CASE("integral-representation chain satisfies the chain equations") {
  ChainSpec spec{-2.25, 3, ChainSpec::Seed::PoschlTeller};
  const auto chain = build_chain(spec, pt_potential(), kGrid);
  REQUIRE(chain.order() == 3);
  const auto report = verify_chain(chain);
  CHECK(report.pass());
  CHECK(report.worst() < 1e-6);
}

TEST_CASE("chain refuses a seed with a node") {
  // kappa < 1 seeds cross zero at artanh(kappa)
  ChainSpec spec{-0.5, 2, ChainSpec::Seed::PoschlTeller};
  CHECK_THROWS_AS(build_chain(spec, pt_potential(), kGrid), SingularityError);
}

TEST_CASE("closed-form chain matches the analytic functions") {
  const PTParams p(1.0);
  const auto chain = pt_closed_form_chain(p, 3, kGrid);
  const int i = kGrid.index_near(0.7);
  CHECK(chain.functions[2].values[i] == doctest::Approx(pt_u(2, p, 0.7)).epsilon(1e-12));
  CHECK(chain.functions[3].values[i] == doctest::Approx(pt_u(3, p, 0.7)).epsilon(1e-12));
  CHECK(verify_chain(chain).pass());
}

TEST_CASE("determinant wronskians reproduce the closed forms") {
  const PTParams p(std::sqrt(1.5));
  const auto chain = pt_closed_form_chain(p, 2, kGrid);
  const auto w01 = direct_wronskian(chain, 1);
  const auto w012 = direct_wronskian(chain, 2);
  double worst1 = 0.0, worst2 = 0.0;
  for (int i = 0; i < w01.size(); ++i) {
    const double x = kGrid.x(i);
    worst1 = std::max(worst1, std::abs(w01.values[i] - pt_w01(p, x)) /
                                  (1e-300 + std::abs(pt_w01(p, x))));
    worst2 = std::max(worst2, std::abs(w012.values[i] - pt_w012(p, x)) /
                                  (1e-300 + std::abs(pt_w012(p, x))));
  }
  CHECK(worst1 < 1e-10);
  CHECK(worst2 < 1e-10);
}

TEST_CASE("recursion tower matches determinant evaluations") {
  for (double kappa : {1.0, std::sqrt(1.5)}) {
    const auto chain = pt_closed_form_chain(PTParams(kappa), 3, kGrid);
    const auto tower = build_tower_matched(chain, 3);
    for (int k = 1; k <= 3; ++k)
      CHECK(rel_worst(tower.levels[k], direct_wronskian(chain, k)) < 1e-5);
  }
}

TEST_CASE("recursion continues smoothly through a zero of W_{n-2}") {
  // kappa = 1/sqrt 2: u0 has a node, so levels lean on the pole handling
  const auto chain = pt_closed_form_chain(PTParams(1.0 / std::sqrt(2.0)), 3, kGrid);
  const auto tower = build_tower_matched(chain, 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(rel_worst(tower.levels[k], direct_wronskian(chain, k)) < 1e-5);
    for (double v : tower.levels[k].values) CHECK(std::isfinite(v));
  }
}

TEST_CASE("explicit recursion constants are honored") {
  const auto chain = pt_closed_form_chain(PTParams(1.0), 1, kGrid);
  const auto t0 = build_tower(chain, {0.0});
  const auto t1 = build_tower(chain, {2.5});
  // level 1 is -(c + integral of u0^2), so the constant shifts it by -c
  const int i = kGrid.index_near(0.3);
  const double shift = t1.levels[1].values[i] - t0.levels[1].values[i];
  CHECK(shift == doctest::Approx(-2.5).epsilon(1e-10));
}

TEST_CASE("chi ladder factorizes the top wronskian") {
  const auto chain = pt_closed_form_chain(PTParams(std::sqrt(1.5)), 3, kGrid);
  const auto tower = build_tower_matched(chain, 3);
  const auto ladder = build_chi_ladder(tower);
  const auto prod = factorized_wronskian(ladder, 3);
  double worst = 0.0;
  for (int i = 0; i < prod.size(); ++i)
    worst = std::max(worst, std::abs(prod.values[i] - tower.levels[3].values[i]) /
                                (1e-300 + std::abs(tower.levels[3].values[i])));
  CHECK(worst < 1e-10);
  // u1 is sourced by u0, so d/dx W(u0, u1) = -u0^2
  CHECK(wronskian_derivative_check(chain.functions[0], chain.functions[1]) < 1e-6);
}

TEST_CASE("parametric route reproduces u1") {
  ChainSpec spec{-1.0, 1, ChainSpec::Seed::PoschlTeller};
  const auto report = parametric_chain_check(spec, pt_potential(), kGrid, 1e-4);
  CHECK(report.worst() < 1e-4);
}
