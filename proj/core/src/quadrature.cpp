#include "csusy/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace csusy {

namespace {

// integral of f over the panel [x_i, x_{i+1}] from the cubic through the four
// nearest samples; every node gets the same-order accuracy, so the cumulative
// sum carries no grid-frequency artifact that stencils would amplify
double panel(const std::vector<double>& f, int i, double h) {
  const int n = static_cast<int>(f.size());
  if (i == 0) return h / 24.0 * (9 * f[0] + 19 * f[1] - 5 * f[2] + f[3]);
  if (i == n - 2)
    return h / 24.0 * (9 * f[n - 1] + 19 * f[n - 2] - 5 * f[n - 3] + f[n - 4]);
  return h / 24.0 * (-f[i - 1] + 13 * f[i] + 13 * f[i + 1] - f[i + 2]);
}

}  // namespace

SampledFunction cumulative_integral(const SampledFunction& f, double constant) {
  const int n = f.size();
  const double h = f.grid.spacing();
  std::vector<double> acc(n);
  acc[0] = constant;
  for (int i = 1; i < n; ++i) acc[i] = acc[i - 1] + panel(f.values, i - 1, h);
  return SampledFunction(f.grid, std::move(acc), f.values);
}

double integrate(const SampledFunction& f) {
  const int n = f.size();
  const double h = f.grid.spacing();
  double acc = 0.0;
  for (int i = 0; i + 1 < n; ++i) acc += panel(f.values, i, h);
  return acc;
}

std::vector<double> simple_zeros(const SampledFunction& f) {
  std::vector<double> zeros;
  const int n = f.size();
  for (int i = 0; i + 1 < n; ++i) {
    const double a = f.values[i], b = f.values[i + 1];
    if (a == 0.0) {
      if (i == 0 || f.values[i - 1] * b < 0) zeros.push_back(f.grid.x(i));
      continue;
    }
    if (a * b < 0) {
      double lo = f.grid.x(i), hi = f.grid.x(i + 1);
      double flo = a;
      for (int it = 0; it < 60 && hi - lo > 1e-14 * (1 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f.value_at(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0)
          hi = mid;
        else {
          lo = mid;
          flo = fm;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
  }
  if (!f.values.empty() && f.values.back() == 0.0) zeros.push_back(f.grid.x_max);
  return zeros;
}

PoleAwareIntegral cumulative_ratio_integral(const SampledFunction& numer,
                                            const SampledFunction& denom) {
  if (!(numer.grid == denom.grid))
    throw std::invalid_argument("cumulative_ratio_integral: grid mismatch");
  const Grid& g = numer.grid;
  const double h = g.spacing();

  std::vector<DoublePole> poles;
  for (double x0 : simple_zeros(denom)) {
    const double dp = denom.derivative_at(x0);
    if (dp == 0.0)
      throw std::invalid_argument("cumulative_ratio_integral: zero of denominator is not simple");
    poles.push_back({x0, numer.value_at(x0) / (dp * dp)});
  }

  // integrand with the double-pole parts removed; points too close to a pole
  // are patched by linear interpolation from clean neighbors afterwards
  std::vector<double> rem(g.n_points);
  std::vector<char> dirty(g.n_points, 0);
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.x(i);
    bool near = false;
    for (const auto& p : poles)
      if (std::abs(x - p.x0) < 0.75 * h) near = true;
    if (near || denom.values[i] == 0.0) {
      dirty[i] = 1;
      rem[i] = 0.0;
      continue;
    }
    double v = numer.values[i] / (denom.values[i] * denom.values[i]);
    for (const auto& p : poles) v -= p.strength / ((x - p.x0) * (x - p.x0));
    rem[i] = v;
  }
  for (int i = 0; i < g.n_points; ++i) {
    if (!dirty[i]) continue;
    int l = i, r = i;
    while (l > 0 && dirty[l]) --l;
    while (r < g.n_points - 1 && dirty[r]) ++r;
    if (dirty[l] || dirty[r])
      throw std::invalid_argument("cumulative_ratio_integral: pole touches the grid boundary");
    const double w = double(i - l) / double(r - l);
    rem[i] = (1 - w) * rem[l] + w * rem[r];
  }

  return {cumulative_integral(SampledFunction(g, std::move(rem)), 0.0), std::move(poles)};
}

}  // namespace csusy
