#include "csusy/jordan_chain.hpp"

#include <cmath>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/quadrature.hpp"
#include "csusy/stencil.hpp"

namespace csusy {

namespace {

void require_no_sign_change(const SampledFunction& u0) {
  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i + 1 < u0.size(); ++i)
    if (u0.values[i] == 0.0 || u0.values[i] * u0.values[i + 1] < 0)
      brackets.emplace_back(u0.grid.x(i), u0.grid.x(i + 1));
  if (u0.values.back() == 0.0)
    brackets.emplace_back(u0.grid.x_max, u0.grid.x_max);
  if (!brackets.empty())
    throw SingularityError("build_chain: seed u_0 vanishes on the grid", brackets);
}

SampledFunction seed_function(const ChainSpec& spec,
                              const std::shared_ptr<const Potential>& potential,
                              const Grid& grid) {
  if (spec.seed == ChainSpec::Seed::PoschlTeller) {
    if (!(spec.lambda < 0))
      throw std::invalid_argument("build_chain: PoschlTeller seed needs lambda < 0");
    PTParams p(std::sqrt(-spec.lambda));
    return SampledFunction::sample(
        grid, [&](double x) { return pt_u(0, p, x); },
        [&](double x) { return pt_u_derivative(0, p, x); });
  }
  return integrate_ivp(*potential, spec.lambda, grid, spec.y0, spec.dy0);
}

}  // namespace

JordanChain build_chain(const ChainSpec& spec, std::shared_ptr<const Potential> potential,
                        const Grid& grid) {
  if (spec.order < 0) throw std::invalid_argument("build_chain: order must be >= 0");
  if (!potential) throw std::invalid_argument("build_chain: null potential");

  JordanChain chain{spec, potential, {}};
  chain.functions.reserve(spec.order + 1);
  chain.functions.push_back(seed_function(spec, potential, grid));
  const SampledFunction& u0 = chain.functions.front();
  if (spec.order > 0) require_no_sign_change(u0);

  for (int j = 1; j <= spec.order; ++j) {
    const auto [c_in, c_out] = spec.constants_for_level(j);
    const SampledFunction& prev = chain.functions.back();

    std::vector<double> prod(grid.n_points), dprod(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
      prod[i] = u0.values[i] * prev.values[i];
      dprod[i] = u0.derivatives[i] * prev.values[i] + u0.values[i] * prev.derivatives[i];
    }
    const auto inner =
        cumulative_integral(SampledFunction(grid, std::move(prod), std::move(dprod)), c_in);

    std::vector<double> quot(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i)
      quot[i] = inner.values[i] / (u0.values[i] * u0.values[i]);
    const auto outer = cumulative_integral(SampledFunction(grid, std::move(quot)), c_out);

    std::vector<double> uj(grid.n_points), duj(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
      uj[i] = -u0.values[i] * outer.values[i];
      duj[i] = -u0.derivatives[i] * outer.values[i] - inner.values[i] / u0.values[i];
    }
    chain.functions.emplace_back(grid, std::move(uj), std::move(duj));
  }
  return chain;
}

ResidualReport verify_chain(const JordanChain& chain) {
  const auto v = sample_potential(*chain.potential, chain.grid());
  ResidualReport report;
  for (int j = 0; j <= chain.order(); ++j) {
    const SampledFunction* source = j > 0 ? &chain.functions[j - 1] : nullptr;
    report.per_level.push_back(
        schrodinger_residual_rel(chain.functions[j], v, chain.spec.lambda, source));
  }
  return report;
}

SampledFunction parametric_u1(const ChainSpec& spec, const Grid& grid, double dlambda) {
  if (spec.seed != ChainSpec::Seed::PoschlTeller)
    throw std::invalid_argument("parametric_u1: PoschlTeller seed required");
  if (!(dlambda > 0)) throw std::invalid_argument("parametric_u1: dlambda must be positive");
  if (!(spec.lambda + dlambda < 0))
    throw std::invalid_argument("parametric_u1: lambda + dlambda must stay negative");
  PTParams plus(std::sqrt(-(spec.lambda + dlambda)));
  PTParams minus(std::sqrt(-(spec.lambda - dlambda)));
  return SampledFunction::sample(
      grid,
      [&](double x) { return (pt_u(0, plus, x) - pt_u(0, minus, x)) / (2 * dlambda); },
      [&](double x) {
        return (pt_u_derivative(0, plus, x) - pt_u_derivative(0, minus, x)) / (2 * dlambda);
      });
}

ResidualReport parametric_chain_check(const ChainSpec& spec,
                                      std::shared_ptr<const Potential> potential,
                                      const Grid& grid, double dlambda) {
  const auto u1 = parametric_u1(spec, grid, dlambda);
  PTParams p(std::sqrt(-spec.lambda));
  const auto u0 = SampledFunction::sample(
      grid, [&](double x) { return pt_u(0, p, x); },
      [&](double x) { return pt_u_derivative(0, p, x); });
  const auto v = sample_potential(*potential, grid);
  ResidualReport report;
  report.tol = std::max(kResidualTol, 100.0 * dlambda * dlambda);
  report.per_level.push_back(schrodinger_residual_rel(u1, v, spec.lambda, &u0));
  return report;
}

JordanChain pt_closed_form_chain(const PTParams& params, int order, const Grid& grid,
                                 double top_admixture) {
  if (order < 0 || order > 3)
    throw std::invalid_argument("pt_closed_form_chain: closed forms cover orders 0..3");
  ChainSpec spec{params.lambda(), order, ChainSpec::Seed::PoschlTeller};
  JordanChain chain{spec, std::make_shared<PoschlTellerPotential>(), {}};
  for (int j = 0; j <= order; ++j) {
    chain.functions.push_back(SampledFunction::sample(
        grid, [&](double x) { return pt_u(j, params, x); },
        [&](double x) { return pt_u_derivative(j, params, x); }));
  }
  if (top_admixture != 0.0) {
    SampledFunction& top = chain.functions.back();
    for (int i = 0; i < grid.n_points; ++i) {
      const double x = grid.x(i);
      top.values[i] += top_admixture * pt_u0_partner(params, x);
      top.derivatives[i] += top_admixture * pt_u0_partner_derivative(params, x);
    }
  }
  return chain;
}

}  // namespace csusy
