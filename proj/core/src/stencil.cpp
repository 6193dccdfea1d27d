#include "csusy/stencil.hpp"

#include <cmath>
#include <stdexcept>

#include "csusy/errors.hpp"

namespace csusy {

SampledFunction second_log_derivative(const SampledFunction& w) {
  const int n = w.size();
  const double h = w.grid.spacing();
  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i + 1 < n; ++i)
    if (w.values[i] == 0.0 || w.values[i] * w.values[i + 1] < 0)
      brackets.emplace_back(w.grid.x(i), w.grid.x(i + 1));
  if (w.values[n - 1] == 0.0) brackets.emplace_back(w.grid.x(n - 1), w.grid.x(n - 1));
  if (!brackets.empty())
    throw SingularityError("second_log_derivative: W vanishes on the grid", brackets);

  std::vector<double> lw(n);
  for (int i = 0; i < n; ++i) lw[i] = std::log(std::abs(w.values[i]));
  std::vector<double> out(n);
  for (int i = 2; i < n - 2; ++i)
    out[i] = (-lw[i - 2] + 16 * lw[i - 1] - 30 * lw[i] + 16 * lw[i + 1] - lw[i + 2]) /
             (12 * h * h);
  out[0] = out[1] = out[2];
  out[n - 1] = out[n - 2] = out[n - 3];
  return SampledFunction(w.grid, std::move(out));
}

std::vector<double> second_difference(const SampledFunction& y) {
  const int n = y.size();
  const double h = y.grid.spacing();
  std::vector<double> out(n, 0.0);
  for (int i = 2; i < n - 2; ++i)
    out[i] = (-y.values[i - 2] + 16 * y.values[i - 1] - 30 * y.values[i] +
              16 * y.values[i + 1] - y.values[i + 2]) /
             (12 * h * h);
  return out;
}

double schrodinger_residual(const SampledFunction& y, const SampledFunction& v_samples,
                            double energy, const SampledFunction* source) {
  if (!(y.grid == v_samples.grid))
    throw std::invalid_argument("schrodinger_residual: grid mismatch");
  const auto ypp = second_difference(y);
  double worst = 0.0;
  for (int i = 2; i < y.size() - 2; ++i) {
    double r = ypp[i] + (energy - v_samples.values[i]) * y.values[i];
    if (source) r += source->values[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double schrodinger_residual_rel(const SampledFunction& y, const SampledFunction& v_samples,
                                double energy, const SampledFunction* source) {
  return schrodinger_residual(y, v_samples, energy, source) / (1.0 + y.max_abs());
}

}  // namespace csusy
