#ifndef CSUSY_POTENTIAL_HPP
#define CSUSY_POTENTIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "csusy/grid.hpp"
#include "csusy/sampled_function.hpp"

namespace csusy {

/// Interaction term of the stationary problem y'' + (E - V) y = 0.
/// derivative(k, x) is needed by the determinant Wronskian, which reduces
/// higher derivatives of solutions through the equation itself.
class Potential {
 public:
  virtual ~Potential() = default;
  virtual double value(double x) const = 0;
  virtual double derivative(int order, double x) const = 0;
};

/// V(x) = -2 / cosh^2(x): fixed-depth well with the single bound state E = -1.
class PoschlTellerPotential final : public Potential {
 public:
  double value(double x) const override;
  double derivative(int order, double x) const override;  // analytic up to order 4
};

/// Piecewise-linear interpolation of tabulated (x, v) samples. No extrapolation.
class TabulatedPotential final : public Potential {
 public:
  TabulatedPotential(std::vector<double> xs, std::vector<double> vs);

  /// CSV with header "x,v" and strictly increasing x.
  static TabulatedPotential from_csv(const std::string& path);

  double value(double x) const override;
  double derivative(int order, double x) const override;  // 5-point finite differences

  bool covers(const Grid& g) const;

 private:
  std::vector<double> xs_, vs_;
};

/// A potential given on a grid (e.g. the outcome of a transformation).
class GridPotential final : public Potential {
 public:
  explicit GridPotential(SampledFunction samples) : samples_(std::move(samples)) {}
  double value(double x) const override;
  double derivative(int order, double x) const override;
  const SampledFunction& samples() const { return samples_; }

 private:
  SampledFunction samples_;
};

SampledFunction sample_potential(const Potential& v, const Grid& g);

}  // namespace csusy

#endif
