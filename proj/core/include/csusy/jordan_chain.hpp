#ifndef CSUSY_JORDAN_CHAIN_HPP
#define CSUSY_JORDAN_CHAIN_HPP

#include <memory>
#include <utility>
#include <vector>

#include "csusy/ivp.hpp"
#include "csusy/poschl_teller.hpp"
#include "csusy/potential.hpp"

namespace csusy {

/// Prescription for a transformation-function chain at factorization energy
/// lambda:
///   u_0'' + (lambda - V0) u_0 = 0
///   u_j'' + (lambda - V0) u_j = -u_{j-1},  j = 1..order.
struct ChainSpec {
  enum class Seed { PoschlTeller, InitialValue };

  double lambda;
  int order;
  Seed seed = Seed::PoschlTeller;
  double y0 = 0.0;   // InitialValue seed only
  double dy0 = 0.0;
  /// Per level j = 1..order, the two integration constants of the nested
  /// integral representation (inner, outer); missing entries mean (0, 0).
  /// The homogeneous admixture u-hat is fixed to zero by convention.
  std::vector<std::pair<double, double>> inner_constants;

  std::pair<double, double> constants_for_level(int j) const {
    if (j >= 1 && j <= static_cast<int>(inner_constants.size()))
      return inner_constants[j - 1];
    return {0.0, 0.0};
  }
};

struct JordanChain {
  ChainSpec spec;
  std::shared_ptr<const Potential> potential;
  std::vector<SampledFunction> functions;  // u_0..u_order, with derivatives

  int order() const { return static_cast<int>(functions.size()) - 1; }
  const Grid& grid() const { return functions.front().grid; }
};

/// Build the chain through the integral representation
///   u_j = -u_0 [c_out + Int^x (c_in + Int^t u_0 u_{j-1} ds) / u_0^2 dt].
/// Refuses seeds u_0 with a sign change on the grid (the quotient is
/// undefined there); for such cases use pt_closed_form_chain.
JordanChain build_chain(const ChainSpec& spec, std::shared_ptr<const Potential> potential,
                        const Grid& grid);

struct ResidualReport {
  std::vector<double> per_level;  // relative interior residuals
  double tol = kResidualTol;
  bool pass() const {
    for (double r : per_level)
      if (!(r < tol)) return false;
    return true;
  }
  double worst() const {
    double w = 0;
    for (double r : per_level) w = std::max(w, r);
    return w;
  }
};

ResidualReport verify_chain(const JordanChain& chain);

/// Builds u_1 as the central lambda-difference of the seed u_0(x, lambda) and
/// reports its residual in the j = 1 chain equation. Validates the
/// parametric-derivative representation; requires a PoschlTeller seed.
ResidualReport parametric_chain_check(const ChainSpec& spec,
                                      std::shared_ptr<const Potential> potential,
                                      const Grid& grid, double dlambda);

/// The returned u_1 of the parametric route, for direct comparisons.
SampledFunction parametric_u1(const ChainSpec& spec, const Grid& grid, double dlambda);

/// Chain from the Poschl-Teller closed forms (order <= 3). `top_admixture`
/// adds that multiple of the second homogeneous solution to the top function,
/// which shifts the top-level Wronskian constant.
JordanChain pt_closed_form_chain(const PTParams& params, int order, const Grid& grid,
                                 double top_admixture = 0.0);

}  // namespace csusy

#endif
