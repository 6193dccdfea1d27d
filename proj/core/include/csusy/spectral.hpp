#ifndef CSUSY_SPECTRAL_HPP
#define CSUSY_SPECTRAL_HPP

#include <vector>

#include "csusy/sampled_function.hpp"

namespace csusy {

/// Symmetric tridiagonal discretization of -d^2/dx^2 + V with Dirichlet
/// boundary conditions (interior grid points only).
struct DiscreteHamiltonian {
  std::vector<double> diag;
  double off;

  /// Number of eigenvalues strictly below t (Sturm sequence count).
  int count_below(double t) const;
};

DiscreteHamiltonian discretize_hamiltonian(const SampledFunction& v);

/// The lowest `count` eigenvalues, each bisected to 1e-8 absolute accuracy.
std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& h, int count);

int eigenvalue_count_below(const DiscreteHamiltonian& h, double energy);

}  // namespace csusy

#endif
