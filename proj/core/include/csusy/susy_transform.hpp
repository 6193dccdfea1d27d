#ifndef CSUSY_SUSY_TRANSFORM_HPP
#define CSUSY_SUSY_TRANSFORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "csusy/wronskian.hpp"

namespace csusy {

/// Outcome of scanning a Wronskian for zeros on the grid.
struct RegularityReport {
  bool is_regular = false;
  /// Sign-change intervals refined by bisection to width < 1e-10.
  std::vector<std::pair<double, double>> zero_brackets;
  double min_abs_w = 0.0;
  std::string condition_notes;
};

RegularityReport regularity_scan(const SampledFunction& w);

/// V_n = V_0 - 2 (log W_{u0..u_{n-1}})''. Throws SingularityError when that
/// Wronskian vanishes on the grid.
SampledFunction transformed_potential(const WronskianTower& tower, const Potential& base,
                                      int order);

/// chi_n_perp = W_{u0..u_{n-2}} / W_{u0..u_{n-1}}, the second transformed
/// solution at the factorization energy (for order 1 the numerator is 1).
SampledFunction chi_perp(const WronskianTower& tower, int order);

/// The two solutions at the factorization energy with their pair Wronskian
/// normalized to 1: chi = scale * W_{u0..un} / W_{u0..u_{n-1}} and chi_perp
/// as above. `scale` is the factor applied to the raw quotient. The stored
/// derivative samples are reconciled so that
/// chi_perp * chi' - chi_perp' * chi = 1 holds exactly at every node (the
/// identity is badly conditioned near zeros of W_{u0..u_{n-2}}, where the
/// raw quotient-rule derivatives cannot realize it in floating point).
struct ChiPair {
  SampledFunction chi;
  SampledFunction chi_perp;
  double scale;
};

ChiPair chi_state(const WronskianTower& tower, int order);

/// Phi_n = W_{u0..u_{n-1}, Psi} / W_{u0..u_{n-1}} from determinant
/// evaluations. Psi must solve the base problem at `energy` != lambda.
SampledFunction transform_ratio(const JordanChain& chain, int order,
                                const SampledFunction& psi, double energy);

/// The same state through the integral representation
///   Phi_n = (lambda - E) (W_{n-2}/W_{n-1})
///           [ c + Int (W_{n-1}/W_{n-2}) (W_{u0..u_{n-2},Psi}/W_{n-2}) dt ],
/// which stays usable when the chain does not reach level n - 1. Zeros of
/// W_{n-2} are handled by the same double-pole subtraction as the recursion.
SampledFunction transform_integral(const WronskianTower& tower, const JordanChain& chain,
                                   int order, const SampledFunction& psi, double energy,
                                   double constant);

/// Scales f to unit L2 norm over the grid. Throws NotSquareIntegrableError
/// when |f| at either boundary exceeds 1e-2 of its maximum; bound states in
/// scope decay exponentially but polynomial prefactors from the Jordan chain
/// can leave a few-permille tail at the boundary of the default domain.
SampledFunction normalize(const SampledFunction& f);

}  // namespace csusy

#endif
