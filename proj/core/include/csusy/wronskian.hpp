#ifndef CSUSY_WRONSKIAN_HPP
#define CSUSY_WRONSKIAN_HPP

#include <vector>

#include "csusy/jordan_chain.hpp"

namespace csusy {

/// W_{u0..u_upto} evaluated pointwise as an LU determinant. Higher derivative
/// rows come from the chain equations (never from differencing), so the
/// potential must provide derivatives up to order upto - 1. The returned
/// function carries the analytic first derivative of the Wronskian.
SampledFunction direct_wronskian(const JordanChain& chain, int upto);

/// W_{u0..u_upto, psi} where psi solves the base equation at its own energy
/// and does not belong to the chain.
SampledFunction wronskian_with_state(const JordanChain& chain, int upto,
                                     const SampledFunction& psi, double psi_energy);

/// One step of the two-term recursion
///   W_n = -W_{n-2} [ c + Int_{x_min}^x (W_{n-1} / W_{n-2})^2 dt ].
/// Simple zeros of W_{n-2} produce double poles with zero residue in the
/// integrand; their singular parts are integrated analytically, so W_n stays
/// finite and smooth across them.
SampledFunction recursive_wronskian(const SampledFunction& w_lo, const SampledFunction& w_hi,
                                    double constant);

/// The chain of Wronskians W_{u0}, W_{u0,u1}, ..., built by the recursion.
/// levels[k] is the order-(k+1) Wronskian W_{u0..uk}; recursion_constants[k-1]
/// is the constant used when producing level k.
struct WronskianTower {
  std::vector<SampledFunction> levels;
  std::vector<double> recursion_constants;
  double lambda;

  int top() const { return static_cast<int>(levels.size()) - 1; }
};

/// Recursion with explicit constants; constants.size() fixes the top level.
WronskianTower build_tower(const JordanChain& chain, const std::vector<double>& constants);

/// Recursion with each constant chosen so that the level agrees with the
/// determinant evaluation at x_min. Levels above the chain order (if any)
/// take their constants from `above` in order, defaulting to 0.
WronskianTower build_tower_matched(const JordanChain& chain, int top,
                                   const std::vector<double>& above = {});

SampledFunction ones(const Grid& grid);

/// chi_0 = u_0, chi_j = W_{u0..uj} / W_{u0..u_{j-1}}: the factorization
/// W_{u0..un} = prod_j chi_j. Requires every divisor level to be zero-free.
struct ChiLadder {
  std::vector<SampledFunction> chis;
};

ChiLadder build_chi_ladder(const WronskianTower& tower);
SampledFunction factorized_wronskian(const ChiLadder& ladder, int upto);

/// Residual of the derivative identity d/dx W(chi, xi) = -chi^2 satisfied by
/// consecutive Wronskian quotients, relative to 1 + max chi^2. Both arguments
/// must carry derivatives.
double wronskian_derivative_check(const SampledFunction& chi, const SampledFunction& xi);

}  // namespace csusy

#endif
