#ifndef CSUSY_PIPELINE_HPP
#define CSUSY_PIPELINE_HPP

#include <memory>
#include <vector>

#include "csusy/susy_transform.hpp"

namespace csusy {

/// Everything needed to run one transformation end to end.
struct TransformSpec {
  double lambda;            // factorization energy, below the spectrum
  int order;                // n >= 1
  double top_constant = 0;  // free constant of the level n - 1 Wronskian
  /// When its size equals `order`, these are used directly as the recursion
  /// constants for levels 1..n and `top_constant` is ignored.
  std::vector<double> explicit_constants;
  Grid grid = Grid::default_domain();

  /// With `pt_closed_forms` set (the default), the base problem is the
  /// -2 sech^2 well and the chain, its second homogeneous solution, and the
  /// pushed-through bound state Psi (E = -1) all come from closed forms.
  bool pt_closed_forms = true;
  std::shared_ptr<const Potential> potential;  // required when not closed-form
  double energy_e = -1.0;                      // energy of Psi
  double seed_y0 = 0, seed_dy0 = 0;            // u_0 initial values at x_min
  double psi_y0 = 0, psi_dy0 = 0;              // Psi initial values at x_min
};

struct TransformResult {
  int order;
  double lambda;
  double energy_e;
  SampledFunction v0;          // base potential samples
  SampledFunction v_n;         // transformed potential samples
  SampledFunction wronskian;   // W_{u0..u_{n-1}}
  SampledFunction phi;         // transformed state at energy_e
  SampledFunction chi;         // transformed state at lambda (unit pair Wronskian)
  SampledFunction chi_perp;    // its partner W_{n-2}/W_{n-1}
  double chi_scale;            // scalar applied to W_n/W_{n-1} to get chi
  RegularityReport regularity;
  std::vector<double> constants_used;  // recursion constants, levels 1..n
  double residual_phi, residual_chi, residual_chi_perp;
  /// Max relative deviation between the determinant and integral routes to
  /// phi, or -1 when only one route was available.
  double phi_route_deviation;
};

/// Runs chain construction, Wronskian recursion, regularity scan, and state
/// transformation. Throws SingularityError (with zero brackets) when
/// W_{u0..u_{n-1}} vanishes on the grid.
TransformResult run_transform(const TransformSpec& spec);

/// The chain and tower for a spec, without the regularity gate or the state
/// transformation (for scans and forced exports).
struct TowerSetup {
  JordanChain chain;
  WronskianTower tower;
};

TowerSetup build_transform_tower(const TransformSpec& spec);

/// Admixture coefficient b such that replacing the top chain function u_m by
/// u_m + b * partner (a second homogeneous solution at lambda) shifts the
/// free recursion constant of W_{u0..um} by `c`.
double top_constant_admixture(const JordanChain& chain, const SampledFunction& partner,
                              double c);

/// Lowest `count` eigenvalues of the transformed problem, from a tridiagonal
/// Dirichlet discretization of -d^2/dx^2 + V_n.
std::vector<double> transform_spectrum(const TransformResult& result, int count);

}  // namespace csusy

#endif
