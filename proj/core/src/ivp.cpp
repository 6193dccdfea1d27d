#include "csusy/ivp.hpp"

#include <cmath>

#include "csusy/errors.hpp"

namespace csusy {

SampledFunction integrate_ivp(const Potential& v, double energy, const Grid& grid,
                              double y0, double dy0, const SampledFunction* source) {
  const int n = grid.n_points;
  const double h = grid.spacing();
  std::vector<double> y(n), dy(n);
  y[0] = y0;
  dy[0] = dy0;

  auto rhs = [&](double x, double yy) {
    double a = (v.value(x) - energy) * yy;
    if (source) a -= source->value_at(x);
    return a;
  };

  for (int i = 0; i + 1 < n; ++i) {
    const double x = grid.x(i);
    const double k1y = dy[i], k1d = rhs(x, y[i]);
    const double k2y = dy[i] + 0.5 * h * k1d, k2d = rhs(x + 0.5 * h, y[i] + 0.5 * h * k1y);
    const double k3y = dy[i] + 0.5 * h * k2d, k3d = rhs(x + 0.5 * h, y[i] + 0.5 * h * k2y);
    const double k4y = dy[i] + h * k3d, k4d = rhs(x + h, y[i] + h * k3y);
    y[i + 1] = y[i] + h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    dy[i + 1] = dy[i] + h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
    if (!(std::abs(y[i + 1]) < 1e300))
      throw BlowUpError("integrate_ivp: solution overflow", grid.x(i + 1));
  }
  return SampledFunction(grid, std::move(y), std::move(dy));
}

}  // namespace csusy
