#ifndef CSUSY_SAMPLED_FUNCTION_HPP
#define CSUSY_SAMPLED_FUNCTION_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "csusy/grid.hpp"

namespace csusy {

/// Function values on a Grid, optionally carrying first derivatives.
/// Off-grid evaluation uses cubic Hermite interpolation when derivatives are
/// present and 4-point Lagrange interpolation otherwise.
struct SampledFunction {
  Grid grid;
  std::vector<double> values;
  std::vector<double> derivatives;  // empty or same length as values

  SampledFunction(Grid g, std::vector<double> vals)
      : grid(g), values(std::move(vals)) {
    check();
  }
  SampledFunction(Grid g, std::vector<double> vals, std::vector<double> derivs)
      : grid(g), values(std::move(vals)), derivatives(std::move(derivs)) {
    check();
  }

  static SampledFunction sample(const Grid& g, const std::function<double(double)>& f);
  static SampledFunction sample(const Grid& g, const std::function<double(double)>& f,
                                const std::function<double(double)>& df);

  bool has_derivatives() const { return !derivatives.empty(); }
  int size() const { return grid.n_points; }

  double value_at(double x) const;
  double derivative_at(double x) const;

  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void check() const {
    if (static_cast<int>(values.size()) != grid.n_points)
      throw std::invalid_argument("SampledFunction: values length mismatch");
    if (!derivatives.empty() && derivatives.size() != values.size())
      throw std::invalid_argument("SampledFunction: derivatives length mismatch");
    for (double v : values)
      if (!std::isfinite(v)) throw std::invalid_argument("SampledFunction: non-finite value");
    for (double d : derivatives)
      if (!std::isfinite(d)) throw std::invalid_argument("SampledFunction: non-finite derivative");
  }
};

}  // namespace csusy

#endif
