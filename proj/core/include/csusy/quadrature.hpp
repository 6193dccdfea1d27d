#ifndef CSUSY_QUADRATURE_HPP
#define CSUSY_QUADRATURE_HPP

#include <vector>

#include "csusy/sampled_function.hpp"

namespace csusy {

/// Antiderivative F of f with F(x_min) = constant, accumulated from cubic
/// (4-point Newton-Cotes) panel integrals, O(h^4) and free of parity
/// artifacts. The returned function carries f itself as its derivative array.
SampledFunction cumulative_integral(const SampledFunction& f, double constant);

/// Definite integral of f over its full grid (same panel rule).
double integrate(const SampledFunction& f);

/// Location and strength of a second-order pole of an integrand:
/// integrand ~ strength / (x - x0)^2 near x0.
struct DoublePole {
  double x0;
  double strength;
};

/// Antiderivative of the integrand numer / denom^2, which may carry double
/// poles at simple zeros of denom (zero residue there is assumed; this is the
/// structure of consecutive-Wronskian quotients). The singular part
/// sum_p strength_p/(x - x0_p)^2 is removed analytically; `smooth` is the
/// cumulative Simpson integral of the remainder anchored to 0 at x_min, and
/// the full antiderivative is smooth(x) - sum_p strength_p/(x - x0_p).
struct PoleAwareIntegral {
  SampledFunction smooth;
  std::vector<DoublePole> poles;
};

PoleAwareIntegral cumulative_ratio_integral(const SampledFunction& numer,
                                            const SampledFunction& denom);

/// Simple zeros of f located by sign changes plus Newton refinement on the
/// Hermite interpolant (requires derivatives).
std::vector<double> simple_zeros(const SampledFunction& f);

}  // namespace csusy

#endif
