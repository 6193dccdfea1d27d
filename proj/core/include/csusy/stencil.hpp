#ifndef CSUSY_STENCIL_HPP
#define CSUSY_STENCIL_HPP

#include <vector>

#include "csusy/sampled_function.hpp"

namespace csusy {

/// d^2/dx^2 log|W| by the 5-point central stencil; the outermost two points on
/// each side copy the nearest interior value. Throws SingularityError if W has
/// a zero or sign change on the grid.
SampledFunction second_log_derivative(const SampledFunction& w);

/// 5-point second differences on the interior (i = 2..n-3); endpoints are 0.
std::vector<double> second_difference(const SampledFunction& y);

/// max_i |y''_fd + (energy - V) y + source| over the interior, where y''_fd is
/// the 5-point second difference. `source` may be null.
double schrodinger_residual(const SampledFunction& y, const SampledFunction& v_samples,
                            double energy, const SampledFunction* source = nullptr);

/// Relative residual: schrodinger_residual / (1 + max|y|).
double schrodinger_residual_rel(const SampledFunction& y, const SampledFunction& v_samples,
                                double energy, const SampledFunction* source = nullptr);

}  // namespace csusy

#endif
