#include "csusy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace csusy {

DiscreteHamiltonian discretize_hamiltonian(const SampledFunction& v) {
  const int n = v.size() - 2;
  if (n < 1) throw std::invalid_argument("discretize_hamiltonian: grid too small");
  const double h = v.grid.spacing();
  DiscreteHamiltonian ham;
  ham.off = -1.0 / (h * h);
  ham.diag.resize(n);
  for (int i = 0; i < n; ++i) ham.diag[i] = 2.0 / (h * h) + v.values[i + 1];
  return ham;
}

int DiscreteHamiltonian::count_below(double t) const {
  const double off2 = off * off;
  int count = 0;
  double d = diag[0] - t;
  if (d == 0.0) d = std::numeric_limits<double>::min();
  if (d < 0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    d = diag[i] - t - off2 / d;
    if (d == 0.0) d = std::numeric_limits<double>::min();
    if (d < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int count) {
  if (count < 1) return {};
  if (count > static_cast<int>(h.diag.size()))
    throw std::invalid_argument("lowest_eigenvalues: more eigenvalues than matrix rows");
  const double radius = 2.0 * std::abs(h.off);
  double lo0 = h.diag[0], hi0 = h.diag[0];
  for (double a : h.diag) {
    lo0 = std::min(lo0, a);
    hi0 = std::max(hi0, a);
  }
  lo0 -= radius;
  hi0 += radius;

  std::vector<double> out;
  for (int k = 1; k <= count; ++k) {
    double lo = lo0, hi = hi0;
    while (hi - lo > 1e-8) {
      const double mid = 0.5 * (lo + hi);
      if (h.count_below(mid) >= k)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

int eigenvalue_count_below(const DiscreteHamiltonian& h, double energy) {
  return h.count_below(energy);
}

}  // namespace csusy
