#ifndef CSUSY_POSCHL_TELLER_HPP
#define CSUSY_POSCHL_TELLER_HPP

#include <cmath>
#include <stdexcept>

namespace csusy {

/// Parameters of the Poschl-Teller closed forms: kappa = sqrt(-lambda) > 0,
/// c_a the 4th-order integration constant, c_b the 5th-order one.
struct PTParams {
  double kappa;
  double c_a = 0.0;
  double c_b = 0.0;

  explicit PTParams(double k, double ca = 0.0, double cb = 0.0)
      : kappa(k), c_a(ca), c_b(cb) {
    if (!(k > 0)) throw std::invalid_argument("PTParams: kappa must be positive");
  }
  double lambda() const { return -kappa * kappa; }
};

/// sign * exp(log_abs), for quantities whose exponential factors overflow.
struct SignedLog {
  double log_abs;
  double sign;  // -1, 0, or +1
  double to_double() const { return sign * std::exp(log_abs); }
};

double pt_v0(double x);                    // -2 / cosh^2 x
double pt_v0_derivative(int order, double x);
double pt_psi(double x);                   // 1 / (sqrt(2) cosh x), bound state at E = -1
double pt_psi_derivative(double x);

/// Transformation functions u_0..u_3 of the chain at lambda = -kappa^2 and
/// their first derivatives. The chain convention is
///   u_j'' + (lambda - V0) u_j = -u_{j-1}.
double pt_u(int j, const PTParams& p, double x);
double pt_u_derivative(int j, const PTParams& p, double x);

/// Second, linearly independent solution of the homogeneous equation:
/// exp(-kappa x) (tanh x + kappa).
double pt_u0_partner(const PTParams& p, double x);
double pt_u0_partner_derivative(const PTParams& p, double x);

/// Wronskians of the chain: W_{u0,u1}, W_{u0,u1,u2} (canonical chain, i.e. the
/// integration-constant choices realized by the closed forms above).
double pt_w01(const PTParams& p, double x);
double pt_w012(const PTParams& p, double x);

/// 4th-order Wronskian W_{u0,u1,u2,u3} with the free constant c_a, its c_a = 0
/// specialization, and the x-dependent bracket term (so that
/// pt_w4 = -pt_w01 * (c_a + pt_w4_bracket)).
double pt_w4(const PTParams& p, double x);
double pt_w4_ca0(const PTParams& p, double x);
double pt_w4_bracket(const PTParams& p, double x);
SignedLog pt_w4_signed_log(const PTParams& p, double x);

/// 5th-order Wronskian W_{u0..u4} with the free constant c_b
/// (pt_w5 = -pt_w012 * (c_b + pt_w5_bracket)).
double pt_w5(const PTParams& p, double x);
double pt_w5_bracket(const PTParams& p, double x);
SignedLog pt_w5_signed_log(const PTParams& p, double x);

/// Eigenfunctions of the transformed problems (unnormalized closed forms):
/// order 4 -> {Phi_4 at E = -1, chi_4_perp at lambda}, order 5 likewise.
double pt_phi4(const PTParams& p, double x);
double pt_chi4perp(const PTParams& p, double x);
double pt_phi5(const PTParams& p, double x);
double pt_chi5perp(const PTParams& p, double x);

}  // namespace csusy

#endif
