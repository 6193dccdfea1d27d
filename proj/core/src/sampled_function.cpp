#include "csusy/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csusy {
namespace {

// 4-point Lagrange interpolation at x from samples y[i0..i0+3].
double lagrange4(const Grid& g, const std::vector<double>& y, int i0, double x) {
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    double term = y[i0 + a];
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      term *= (x - g.x(i0 + b)) / (g.x(i0 + a) - g.x(i0 + b));
    }
    acc += term;
  }
  return acc;
}

int stencil_start(const Grid& g, double x) {
  int i = static_cast<int>(std::floor((x - g.x_min) / g.spacing())) - 1;
  return std::clamp(i, 0, g.n_points - 4);
}

}  // namespace

SampledFunction SampledFunction::sample(const Grid& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.n_points);
  for (int i = 0; i < g.n_points; ++i) v[i] = f(g.x(i));
  return SampledFunction(g, std::move(v));
}

SampledFunction SampledFunction::sample(const Grid& g, const std::function<double(double)>& f,
                                        const std::function<double(double)>& df) {
  std::vector<double> v(g.n_points), d(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    v[i] = f(g.x(i));
    d[i] = df(g.x(i));
  }
  return SampledFunction(g, std::move(v), std::move(d));
}

double SampledFunction::value_at(double x) const {
  const double h = grid.spacing();
  if (x < grid.x_min - 1e-9 * h || x > grid.x_max + 1e-9 * h)
    throw std::domain_error("SampledFunction::value_at: abscissa outside grid");
  x = std::clamp(x, grid.x_min, grid.x_max);
  if (!has_derivatives()) return lagrange4(grid, values, stencil_start(grid, x), x);
  // cubic Hermite on the enclosing panel
  int i = std::clamp(static_cast<int>(std::floor((x - grid.x_min) / h)), 0, grid.n_points - 2);
  const double t = (x - grid.x(i)) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * values[i] + (t3 - 2 * t2 + t) * h * derivatives[i] +
         (-2 * t3 + 3 * t2) * values[i + 1] + (t3 - t2) * h * derivatives[i + 1];
}

double SampledFunction::derivative_at(double x) const {
  if (!has_derivatives())
    throw std::logic_error("SampledFunction::derivative_at: no derivative data");
  const double h = grid.spacing();
  if (x < grid.x_min - 1e-9 * h || x > grid.x_max + 1e-9 * h)
    throw std::domain_error("SampledFunction::derivative_at: abscissa outside grid");
  x = std::clamp(x, grid.x_min, grid.x_max);
  return lagrange4(grid, derivatives, stencil_start(grid, x), x);
}

}  // namespace csusy
