#include "csusy/poschl_teller.hpp"

#include <cmath>
#include <limits>

namespace csusy {
namespace {

// Ratio (a cosh x + b sinh x) / (c cosh x + d sinh x), evaluated with the
// dominant exponential divided out so it stays finite for large |x|. The
// coefficient combinations are formed first: sums like a + b can cancel to
// machine zero (e.g. (kappa - 1)^4 at kappa = 1) and must not be reached by
// subtracting two O(1) products.
double hyp_ratio(double a, double b, double c, double d, double x) {
  const double q = std::exp(-2.0 * std::abs(x));
  if (x >= 0) return ((a + b) + (a - b) * q) / ((c + d) + (c - d) * q);
  return ((a - b) + (a + b) * q) / ((c - d) + (c + d) * q);
}

// 1 - |tanh x|, accurate in the tails where tanh rounds to +-1.
double tanh_gap(double x) {
  const double q = std::exp(-2.0 * std::abs(x));
  return 2.0 * q / (1.0 + q);
}

double horner3(double c0, double c1, double c2, double c3, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

double horner3_prime(double c1, double c2, double c3, double x) {
  return (3 * c3 * x + 2 * c2) * x + c1;
}

// Stable tail forms of the first-order Wronskian polynomials:
// 1 + kappa^2 - 2 kappa tanh x and kappa (kappa^2 + 3) - (3 kappa^2 + 1) tanh x.
double w01_poly(double k, double x) {
  const double r = tanh_gap(x);
  if (x >= 0) return (1 - k) * (1 - k) + 2 * k * r;
  return (1 + k) * (1 + k) - 2 * k * r;
}

double w012_poly(double k, double x) {
  const double r = tanh_gap(x);
  const double b = 3 * k * k + 1;
  if (x >= 0) return (k - 1) * (k - 1) * (k - 1) + b * r;
  return (k + 1) * (k + 1) * (k + 1) - b * r;
}

// log(|C + s*exp(L)|) and its sign, without forming exp(L).
SignedLog log_sum(double constant, double term_sign, double log_term) {
  if (constant == 0.0) return {log_term, term_sign};
  const double log_c = std::log(std::abs(constant));
  const double m = std::max(log_c, log_term);
  const double v = constant / std::abs(constant) * std::exp(log_c - m) +
                   term_sign * std::exp(log_term - m);
  if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {m + std::log(std::abs(v)), v > 0 ? 1.0 : -1.0};
}

struct Poly {
  // A(x) + B(x) tanh(x), with A, B given by coefficients in x.
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0;
  double A(double x) const { return ((a3 * x + a2) * x + a1) * x + a0; }
  double dA(double x) const { return (3 * a3 * x + 2 * a2) * x + a1; }
  double B(double x) const { return ((b3 * x + b2) * x + b1) * x + b0; }
  double dB(double x) const { return (3 * b3 * x + 2 * b2) * x + b1; }
};

// u_j = scale * exp(kappa x) * (A + B tanh x); closed forms of the chain for
// the -2 sech^2 well, with signs arranged so that
// u_j'' + (lambda - V0) u_j = -u_{j-1}.
void pt_u_parts(int j, const PTParams& p, double& scale, Poly& poly) {
  const double k = p.kappa;
  switch (j) {
    case 0:
      scale = std::sqrt(2 * k);
      poly = {};
      poly.a0 = -k;
      poly.b0 = 1;
      return;
    case 1:
      scale = 1.0 / std::sqrt(2 * k * k * k);
      poly = {};
      poly.a1 = k * k;
      poly.b0 = 1;
      poly.b1 = -k;
      return;
    case 2:
      scale = 1.0 / (4 * std::sqrt(2 * std::pow(k, 7)));
      poly = {};
      poly.a1 = k * k;
      poly.a2 = -k * k * k;
      poly.b0 = 3;
      poly.b1 = -3 * k;
      poly.b2 = k * k;
      return;
    case 3:
      scale = -1.0 / (24 * std::sqrt(2 * std::pow(k, 11)));
      poly = {};
      poly.a1 = -3 * k * k;
      poly.a2 = 3 * k * k * k;
      poly.a3 = -k * k * k * k;
      poly.b0 = -15;
      poly.b1 = 15 * k;
      poly.b2 = -6 * k * k;
      poly.b3 = k * k * k;
      return;
    default:
      throw std::invalid_argument("pt_u: closed forms available for j = 0..3 only");
  }
}

}  // namespace

double pt_v0(double x) {
  const double s = 1.0 / std::cosh(x);
  return -2.0 * s * s;
}

double pt_v0_derivative(int order, double x) {
  const double t = std::tanh(x);
  const double s = 1.0 - t * t;  // sech^2
  switch (order) {
    case 0:
      return -2.0 * s;
    case 1:
      return 4.0 * s * t;
    case 2:
      return 4.0 * s * (s - 2.0 * t * t);
    case 3:
      return 16.0 * s * t * (t * t - 2.0 * s);
    case 4:
      return -32.0 * s * t * t * t * t + 176.0 * s * s * t * t - 32.0 * s * s * s;
    default:
      throw std::invalid_argument("pt_v0_derivative: order must be 0..4");
  }
}

double pt_psi(double x) { return 1.0 / (std::sqrt(2.0) * std::cosh(x)); }

double pt_psi_derivative(double x) { return -std::tanh(x) * pt_psi(x); }

namespace {

// A + B tanh x with tanh expanded about +-1, so that combinations which
// cancel in the tails (e.g. tanh x - 1 at kappa = 1) keep full relative
// precision. The coefficient sums absorb the cancellation exactly.
double poly_tanh(const Poly& poly, double x) {
  const double r = tanh_gap(x);
  if (x >= 0)
    return horner3(poly.a0 + poly.b0, poly.a1 + poly.b1, poly.a2 + poly.b2,
                   poly.a3 + poly.b3, x) -
           poly.B(x) * r;
  return horner3(poly.a0 - poly.b0, poly.a1 - poly.b1, poly.a2 - poly.b2,
                 poly.a3 - poly.b3, x) +
         poly.B(x) * r;
}

double poly_tanh_derivative(const Poly& poly, double x) {
  const double r = tanh_gap(x);
  const double s = r * (2.0 - r);  // sech^2
  if (x >= 0)
    return horner3_prime(poly.a1 + poly.b1, poly.a2 + poly.b2, poly.a3 + poly.b3, x) -
           poly.dB(x) * r + poly.B(x) * s;
  return horner3_prime(poly.a1 - poly.b1, poly.a2 - poly.b2, poly.a3 - poly.b3, x) +
         poly.dB(x) * r + poly.B(x) * s;
}

}  // namespace

double pt_u(int j, const PTParams& p, double x) {
  double scale;
  Poly poly;
  pt_u_parts(j, p, scale, poly);
  return scale * std::exp(p.kappa * x) * poly_tanh(poly, x);
}

double pt_u_derivative(int j, const PTParams& p, double x) {
  double scale;
  Poly poly;
  pt_u_parts(j, p, scale, poly);
  const double f = poly_tanh(poly, x);
  const double df = poly_tanh_derivative(poly, x);
  return scale * std::exp(p.kappa * x) * (p.kappa * f + df);
}

double pt_u0_partner(const PTParams& p, double x) {
  return std::exp(-p.kappa * x) * (std::tanh(x) + p.kappa);
}

double pt_u0_partner_derivative(const PTParams& p, double x) {
  const double t = std::tanh(x);
  return std::exp(-p.kappa * x) * (-p.kappa * (t + p.kappa) + 1.0 - t * t);
}

double pt_w01(const PTParams& p, double x) {
  return -std::exp(2 * p.kappa * x) * w01_poly(p.kappa, x);
}

double pt_w012(const PTParams& p, double x) {
  const double k = p.kappa;
  return std::exp(3 * k * x) / (2 * std::sqrt(2 * k * k * k)) * w012_poly(k, x);
}

double pt_w4_bracket(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k;
  const double r = hyp_ratio(k2 * k2 + 6 * k2 + 1, -4 * k * (k2 + 1), k2 + 1, -2 * k, x);
  return std::exp(2 * k * x) * r / (16 * k2 * k2);
}

double pt_w4(const PTParams& p, double x) {
  return -pt_w01(p, x) * (p.c_a + pt_w4_bracket(p, x));
}

double pt_w4_ca0(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k;
  const double r = tanh_gap(x);
  const double m = k - 1, pl = k + 1;
  const double poly = x >= 0 ? m * m * m * m + 4 * k * (k2 + 1) * r
                             : pl * pl * pl * pl - 4 * k * (k2 + 1) * r;
  return std::exp(4 * k * x) / (16 * k2 * k2) * poly;
}

SignedLog pt_w4_signed_log(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k;
  // -W01 = exp(2kx) (1 + k^2 - 2k tanh x) is strictly positive.
  const double lead = std::log(w01_poly(k, x)) + 2 * k * x;
  const double r = hyp_ratio(k2 * k2 + 6 * k2 + 1, -4 * k * (k2 + 1), k2 + 1, -2 * k, x);
  // r > 0 for all kappa (coefficient gap (kappa-1)^4 >= 0).
  SignedLog bracket = log_sum(p.c_a, 1.0, 2 * k * x + std::log(r) - std::log(16 * k2 * k2));
  return {lead + bracket.log_abs, bracket.sign};
}

double pt_w5_bracket(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k, k4 = k2 * k2;
  const double r = hyp_ratio(k * (k4 + 10 * k2 + 5), -(5 * k4 + 10 * k2 + 1),
                             k * (k2 + 3), -(3 * k2 + 1), x);
  return std::exp(2 * k * x) * r / (64 * k4 * k2);
}

double pt_w5(const PTParams& p, double x) {
  return -pt_w012(p, x) * (p.c_b + pt_w5_bracket(p, x));
}

SignedLog pt_w5_signed_log(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k, k4 = k2 * k2;
  const double lead_poly = w012_poly(k, x);
  const double lead_sign = lead_poly >= 0 ? -1.0 : 1.0;  // from -pt_w012
  const double lead = 3 * k * x + std::log(std::abs(lead_poly)) -
                      std::log(2 * std::sqrt(2 * k2 * k));
  const double r = hyp_ratio(k * (k4 + 10 * k2 + 5), -(5 * k4 + 10 * k2 + 1),
                             k * (k2 + 3), -(3 * k2 + 1), x);
  SignedLog bracket = log_sum(p.c_b, r >= 0 ? 1.0 : -1.0,
                              2 * k * x + std::log(std::abs(r)) - std::log(64 * k4 * k2));
  return {lead + bracket.log_abs, lead_sign * bracket.sign};
}

double pt_phi4(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k;
  const double t = std::tanh(x);
  const double g = (k2 - 1) * (k2 - 1) / std::cosh(x);
  const double ca16 = 16 * p.c_a * k2 * k2;
  if (x <= 0) {
    const double e = std::exp(2 * k * x);
    return g * (ca16 - (k2 - 1) * e) /
           (std::sqrt(2.0) * (ca16 * (k2 - 2 * k * t + 1) +
                              e * (k2 * k2 + 6 * k2 - 4 * (k2 * k + k) * t + 1)));
  }
  const double e = std::exp(-2 * k * x);
  return g * (ca16 * e - (k2 - 1)) /
         (std::sqrt(2.0) * (ca16 * e * (k2 - 2 * k * t + 1) +
                            (k2 * k2 + 6 * k2 - 4 * (k2 * k + k) * t + 1)));
}

double pt_chi4perp(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k;
  const double br = p.c_a + pt_w4_bracket(p, x);
  return std::exp(k * x) * w012_poly(k, x) /
         (2 * std::sqrt(2 * k2 * k) * w01_poly(k, x) * br);
}

double pt_phi5(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k, k4 = k2 * k2;
  const double t = std::tanh(x);
  const double g = (k2 - 1) * (k2 - 1) * (k2 - 1) / std::cosh(x);
  const double cb64 = 64 * p.c_b * k4 * k2;
  const double pa = k2 * k + 3 * k - (3 * k2 + 1) * t;
  const double pb = k4 * k + 10 * k2 * k + 5 * k - (5 * k4 + 10 * k2 + 1) * t;
  if (x <= 0) {
    const double e = std::exp(2 * k * x);
    return g * ((k2 - 1) * e - cb64) / (std::sqrt(2.0) * (cb64 * pa + e * pb));
  }
  const double e = std::exp(-2 * k * x);
  return g * ((k2 - 1) - cb64 * e) / (std::sqrt(2.0) * (cb64 * e * pa + pb));
}

double pt_chi5perp(const PTParams& p, double x) {
  const double k = p.kappa, k2 = k * k, k4 = k2 * k2;
  const double cb64 = 64 * p.c_b * k4 * k2;
  const double na = k4 + 6 * k2 + 1, nb = -4 * k * (k2 + 1);
  const double da = k * (k2 + 3), db = -(3 * k2 + 1);
  const double ea = k * (k4 + 10 * k2 + 5), eb = -(5 * k4 + 10 * k2 + 1);
  const double scale = -8 * std::sqrt(2 * std::pow(k, 7));
  if (x <= 0) {
    const double c = std::cosh(x), s = std::sinh(x);
    return scale * std::exp(k * x) * (na * c + nb * s) /
           (cb64 * (da * c + db * s) + std::exp(2 * k * x) * (ea * c + eb * s));
  }
  // divide through by exp((2k+1) x) to keep the pieces finite
  const double q = std::exp(-2.0 * x);
  const double ch = 0.5 * (1 + q), sh = 0.5 * (1 - q);
  return scale * std::exp(-k * x) * (na * ch + nb * sh) /
         (cb64 * std::exp(-2 * k * x) * (da * ch + db * sh) + (ea * ch + eb * sh));
}

}  // namespace csusy
