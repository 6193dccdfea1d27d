#include <cmath>

#include "csusy/poschl_teller.hpp"
#include "csusy/potential.hpp"
#include "doctest.h"

using namespace csusy;

namespace {

// 5-point central difference of a closed form
template <typename F>
double fd(const F& f, double x, double h = 1e-3) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// residual of u'' + (lambda - V0) u = -source at one point, u'' by differencing u'
template <typename U, typename DU, typename S>
double chain_residual(const U& u, const DU& du, const S& source, double lambda, double x) {
  const double upp = fd(du, x);
  return upp + (lambda - pt_v0(x)) * u(x) + source(x);
}

}  // namespace

TEST_CASE("base potential and bound state") {
  CHECK(pt_v0(0.0) == -2.0);
  CHECK(pt_v0(15.0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(pt_psi(0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  // psi solves the base problem at E = -1
  const double r = fd(pt_psi_derivative, 0.37) + (-1.0 - pt_v0(0.37)) * pt_psi(0.37);
  CHECK(std::abs(r) < 1e-9);
  PoschlTellerPotential pot;
  CHECK(pot.value(0.3) == pt_v0(0.3));
  for (int k = 1; k <= 4; ++k)
    CHECK(pot.derivative(k, 0.3) ==
          doctest::Approx(fd([&](double x) { return pot.derivative(k - 1, x); }, 0.3))
              .epsilon(1e-7));
}

TEST_CASE("chain functions match frozen reference values") {
  const PTParams p(1.0);
  CHECK(pt_u(2, p, 0.7) == doctest::Approx(0.37380912593822247853).epsilon(1e-14));
  CHECK(pt_u(3, p, 0.7) == doctest::Approx(0.31221020353813004731).epsilon(1e-14));
}

TEST_CASE("chain functions satisfy the chain equations") {
  for (double kappa : {1.0, 1.0 / std::sqrt(2.0), std::sqrt(1.5)}) {
    const PTParams p(kappa);
    const double lambda = p.lambda();
    for (double x : {-1.3, 0.0, 0.45, 2.2}) {
      CHECK(std::abs(chain_residual([&](double t) { return pt_u(0, p, t); },
                                    [&](double t) { return pt_u_derivative(0, p, t); },
                                    [](double) { return 0.0; }, lambda, x)) < 1e-7);
      for (int j = 1; j <= 3; ++j)
        CHECK(std::abs(chain_residual([&](double t) { return pt_u(j, p, t); },
                                      [&](double t) { return pt_u_derivative(j, p, t); },
                                      [&](double t) { return pt_u(j - 1, p, t); }, lambda,
                                      x)) < 1e-7);
      CHECK(std::abs(chain_residual([&](double t) { return pt_u0_partner(p, t); },
                                    [&](double t) { return pt_u0_partner_derivative(p, t); },
                                    [](double) { return 0.0; }, lambda, x)) < 1e-7);
    }
  }
}

TEST_CASE("derivative closed forms agree with differencing") {
  const PTParams p(std::sqrt(1.5));
  for (int j = 0; j <= 3; ++j)
    CHECK(pt_u_derivative(j, p, 0.9) ==
          doctest::Approx(fd([&](double x) { return pt_u(j, p, x); }, 0.9)).epsilon(1e-9));
}

TEST_CASE("wronskian closed forms are mutually consistent") {
  const PTParams p(1.0 / std::sqrt(2.0), 50.0, 0.0);
  for (double x : {-2.0, 0.0, 1.1}) {
    // W_{u0,u1} from the 2x2 determinant of the chain forms
    const double det = pt_u(0, p, x) * pt_u_derivative(1, p, x) -
                       pt_u_derivative(0, p, x) * pt_u(1, p, x);
    CHECK(pt_w01(p, x) == doctest::Approx(det).epsilon(1e-12));
    CHECK(pt_w4(p, x) ==
          doctest::Approx(-pt_w01(p, x) * (p.c_a + pt_w4_bracket(p, x))).epsilon(1e-12));
    CHECK(pt_w5(p, x) ==
          doctest::Approx(-pt_w012(p, x) * (p.c_b + pt_w5_bracket(p, x))).epsilon(1e-12));
  }
  const PTParams ca0(1.0);
  CHECK(pt_w4_ca0(ca0, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pt_w4(ca0, 0.0) == doctest::Approx(pt_w4_ca0(ca0, 0.0)).epsilon(1e-12));
}

TEST_CASE("signed-log evaluation survives overflowing exponentials") {
  const PTParams p(12.0);
  const auto far = pt_w4_signed_log(p, 30.0);
  CHECK(far.sign == 1.0);
  CHECK(far.log_abs == doctest::Approx(1436.8793657698016997).epsilon(1e-13));
  const auto left = pt_w4_signed_log(p, -30.0);
  CHECK(left.sign == 1.0);
  // both tails grow like exp(4 kappa |x|), far below the double range here
  const auto right_slope = pt_w4_signed_log(p, 31.0).log_abs - far.log_abs;
  const auto left_slope = pt_w4_signed_log(p, -29.0).log_abs - left.log_abs;
  CHECK(right_slope == doctest::Approx(48.0).epsilon(1e-9));
  CHECK(left_slope == doctest::Approx(48.0).epsilon(1e-9));
  // moderate arguments reconcile with the plain evaluation
  const PTParams q(1.0, 3.0, 0.0);
  const auto s = pt_w4_signed_log(q, 1.2);
  CHECK(s.to_double() == doctest::Approx(pt_w4(q, 1.2)).epsilon(1e-11));
  const auto s5 = pt_w5_signed_log(PTParams(1.0, 0.0, 0.2), 1.2);
  CHECK(s5.to_double() == doctest::Approx(pt_w5(PTParams(1.0, 0.0, 0.2), 1.2)).epsilon(1e-11));
}

TEST_CASE("transformed eigenfunction closed forms stay finite and decay") {
  const PTParams p4(1.0 / std::sqrt(2.0), 50.0, 0.0);
  CHECK(std::abs(pt_phi4(p4, 12.0)) < std::abs(pt_phi4(p4, 0.0)));
  CHECK(std::abs(pt_chi4perp(p4, 12.0)) < std::abs(pt_chi4perp(p4, 1.0)));
  const PTParams p5(std::sqrt(1.5), 0.0, 0.01);
  CHECK(std::abs(pt_phi5(p5, 12.0)) < std::abs(pt_phi5(p5, 0.0)));
  CHECK(std::abs(pt_chi5perp(p5, 12.0)) < std::abs(pt_chi5perp(p5, 1.0)));
}
