#include "csusy/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csusy/poschl_teller.hpp"

namespace csusy {

double PoschlTellerPotential::value(double x) const { return pt_v0(x); }

double PoschlTellerPotential::derivative(int order, double x) const {
  return pt_v0_derivative(order, x);
}

TabulatedPotential::TabulatedPotential(std::vector<double> xs, std::vector<double> vs)
    : xs_(std::move(xs)), vs_(std::move(vs)) {
  if (xs_.size() != vs_.size() || xs_.size() < 2)
    throw std::invalid_argument("TabulatedPotential: need >= 2 matching samples");
  for (std::size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw std::invalid_argument("TabulatedPotential: abscissae must be strictly increasing");
}

TabulatedPotential TabulatedPotential::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("TabulatedPotential: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,v", 0) != 0)
    throw std::runtime_error("TabulatedPotential: expected header 'x,v' in " + path);
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b))
      throw std::runtime_error("TabulatedPotential: malformed row '" + line + "'");
    xs.push_back(std::stod(a));
    vs.push_back(std::stod(b));
  }
  return TabulatedPotential(std::move(xs), std::move(vs));
}

double TabulatedPotential::value(double x) const {
  if (x < xs_.front() || x > xs_.back())
    throw std::domain_error("TabulatedPotential: abscissa outside tabulated range");
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return vs_.back();
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (i == 0) return vs_.front();
  const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return (1 - w) * vs_[i - 1] + w * vs_[i];
}

double TabulatedPotential::derivative(int order, double x) const {
  if (order == 0) return value(x);
  // 5-point central differences on a local uniform stencil
  double h = (xs_.back() - xs_.front()) / (xs_.size() - 1);
  auto clamp_eval = [&](double t) {
    return value(std::clamp(t, xs_.front(), xs_.back()));
  };
  const double f2 = clamp_eval(x - 2 * h), f1 = clamp_eval(x - h), f0 = clamp_eval(x),
               g1 = clamp_eval(x + h), g2 = clamp_eval(x + 2 * h);
  switch (order) {
    case 1:
      return (f2 - 8 * f1 + 8 * g1 - g2) / (12 * h);
    case 2:
      return (-f2 + 16 * f1 - 30 * f0 + 16 * g1 - g2) / (12 * h * h);
    default:
      throw std::invalid_argument("TabulatedPotential: derivatives beyond order 2 unsupported");
  }
}

double GridPotential::value(double x) const { return samples_.value_at(x); }

double GridPotential::derivative(int order, double x) const {
  if (order == 0) return value(x);
  const double h = samples_.grid.spacing();
  auto clamp_eval = [&](double t) {
    return samples_.value_at(std::clamp(t, samples_.grid.x_min, samples_.grid.x_max));
  };
  const double f2 = clamp_eval(x - 2 * h), f1 = clamp_eval(x - h), f0 = clamp_eval(x),
               g1 = clamp_eval(x + h), g2 = clamp_eval(x + 2 * h);
  switch (order) {
    case 1:
      return (f2 - 8 * f1 + 8 * g1 - g2) / (12 * h);
    case 2:
      return (-f2 + 16 * f1 - 30 * f0 + 16 * g1 - g2) / (12 * h * h);
    default:
      throw std::invalid_argument("GridPotential: derivatives beyond order 2 unsupported");
  }
}

bool TabulatedPotential::covers(const Grid& g) const {
  return xs_.front() <= g.x_min && g.x_max <= xs_.back();
}

SampledFunction sample_potential(const Potential& v, const Grid& g) {
  return SampledFunction::sample(g, [&](double x) { return v.value(x); });
}

}  // namespace csusy
