#ifndef CSUSY_IVP_HPP
#define CSUSY_IVP_HPP

#include "csusy/potential.hpp"
#include "csusy/sampled_function.hpp"

namespace csusy {

/// Fixed-step RK4 sweep, left to right, of
///   y'' + (energy - V) y = -source(x),
/// from (y0, dy0) at x_min. The result carries derivatives. Throws BlowUpError
/// when |y| exceeds 1e300. `source` may be null (homogeneous equation); when
/// present it is interpolated at half steps.
SampledFunction integrate_ivp(const Potential& v, double energy, const Grid& grid,
                              double y0, double dy0,
                              const SampledFunction* source = nullptr);

/// Default relative tolerance for interior Schroedinger residuals.
inline constexpr double kResidualTol = 1e-6;

}  // namespace csusy

#endif
