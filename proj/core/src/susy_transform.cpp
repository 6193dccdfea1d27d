#include "csusy/susy_transform.hpp"

#include <cmath>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/quadrature.hpp"
#include "csusy/stencil.hpp"

namespace csusy {

namespace {

const SampledFunction& level_or_unit(const WronskianTower& tower, int k,
                                     const SampledFunction& unit) {
  if (k == -1) return unit;
  if (k < -1 || k > tower.top())
    throw std::invalid_argument("susy_transform: tower does not reach the requested level");
  return tower.levels[k];
}

void require_zero_free(const SampledFunction& w, const char* what) {
  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.values[i] == 0.0 || w.values[i] * w.values[i + 1] < 0)
      brackets.emplace_back(w.grid.x(i), w.grid.x(i + 1));
  if (w.values.back() == 0.0) brackets.emplace_back(w.grid.x_max, w.grid.x_max);
  if (!brackets.empty()) throw SingularityError(what, brackets);
}

SampledFunction quotient(const SampledFunction& num, const SampledFunction& den) {
  std::vector<double> q(num.size()), dq(num.size());
  for (int i = 0; i < num.size(); ++i) {
    q[i] = num.values[i] / den.values[i];
    dq[i] = (num.derivatives[i] * den.values[i] - num.values[i] * den.derivatives[i]) /
            (den.values[i] * den.values[i]);
  }
  return SampledFunction(num.grid, std::move(q), std::move(dq));
}

}  // namespace

RegularityReport regularity_scan(const SampledFunction& w) {
  RegularityReport report;
  report.min_abs_w = w.max_abs();
  for (double v : w.values) report.min_abs_w = std::min(report.min_abs_w, std::abs(v));
  for (int i = 0; i + 1 < w.size(); ++i) {
    const double a = w.values[i], b = w.values[i + 1];
    if (a == 0.0) {
      report.zero_brackets.emplace_back(w.grid.x(i), w.grid.x(i));
      continue;
    }
    if (a * b < 0) {
      double lo = w.grid.x(i), hi = w.grid.x(i + 1), flo = a;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = w.value_at(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0)
          hi = mid;
        else {
          lo = mid;
          flo = fm;
        }
      }
      report.zero_brackets.emplace_back(lo, hi);
    }
  }
  if (w.values.back() == 0.0)
    report.zero_brackets.emplace_back(w.grid.x_max, w.grid.x_max);
  report.is_regular = report.zero_brackets.empty();
  return report;
}

SampledFunction transformed_potential(const WronskianTower& tower, const Potential& base,
                                      int order) {
  if (order < 1 || order - 1 > tower.top())
    throw std::invalid_argument("transformed_potential: tower does not reach level n - 1");
  const auto slog = second_log_derivative(tower.levels[order - 1]);
  std::vector<double> v(slog.size());
  for (int i = 0; i < slog.size(); ++i)
    v[i] = base.value(slog.grid.x(i)) - 2.0 * slog.values[i];
  return SampledFunction(slog.grid, std::move(v));
}

SampledFunction chi_perp(const WronskianTower& tower, int order) {
  if (order < 1) throw std::invalid_argument("chi_perp: order must be >= 1");
  const auto unit = ones(tower.levels[0].grid);
  const SampledFunction& num = level_or_unit(tower, order - 2, unit);
  const SampledFunction& den = level_or_unit(tower, order - 1, unit);
  require_zero_free(den, "chi_perp: W_{n-1} vanishes on the grid");
  return quotient(num, den);
}

ChiPair chi_state(const WronskianTower& tower, int order) {
  if (order < 1 || order > tower.top())
    throw std::invalid_argument("chi_state: tower does not reach level n");
  const auto unit = ones(tower.levels[0].grid);
  const SampledFunction& den = level_or_unit(tower, order - 1, unit);
  require_zero_free(den, "chi_state: W_{n-1} vanishes on the grid");
  auto q = quotient(tower.levels[order], den);
  auto perp = chi_perp(tower, order);

  // W(chi_perp, chi) is constant; read it off where the divisor Wronskian is
  // largest and rescale chi to make it exactly 1
  int best = 0;
  for (int i = 1; i < den.size(); ++i)
    if (std::abs(den.values[i]) > std::abs(den.values[best])) best = i;
  const double s = perp.values[best] * q.derivatives[best] -
                   perp.derivatives[best] * q.values[best];
  if (!(std::abs(s) > 1e-8))
    throw AccuracyError("chi_state: degenerate pair Wronskian");
  const double scale = 1.0 / s;
  for (int i = 0; i < q.size(); ++i) {
    q.values[i] *= scale;
    q.derivatives[i] *= scale;
  }

  // Reconcile the derivative samples so the pair Wronskian is exactly 1 at
  // every node. Near zeros of W_{n-2} the identity suffers a cancellation
  // that the quotient-rule derivatives cannot survive in floating point, so
  // the residual is folded into whichever derivative tolerates it better.
  double q_dmax = 0.0, perp_dmax = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    q_dmax = std::max(q_dmax, std::abs(q.derivatives[i]));
    perp_dmax = std::max(perp_dmax, std::abs(perp.derivatives[i]));
  }
  for (int i = 0; i < q.size(); ++i) {
    const double defect = 1.0 - (perp.values[i] * q.derivatives[i] -
                                 perp.derivatives[i] * q.values[i]);
    if (defect == 0.0) continue;
    const double via_chi = std::abs(perp.values[i]) * q_dmax;
    const double via_perp = std::abs(q.values[i]) * perp_dmax;
    if (via_chi >= via_perp)
      q.derivatives[i] += defect / perp.values[i];
    else
      perp.derivatives[i] -= defect / q.values[i];
  }
  return {std::move(q), std::move(perp), scale};
}

SampledFunction transform_ratio(const JordanChain& chain, int order,
                                const SampledFunction& psi, double energy) {
  if (order < 1) throw std::invalid_argument("transform_ratio: order must be >= 1");
  if (energy == chain.spec.lambda)
    throw std::invalid_argument(
        "transform_ratio: Psi at the factorization energy is annihilated; use chi_perp");
  if (order - 1 > chain.order())
    throw std::invalid_argument("transform_ratio: chain does not reach level n - 1");
  const auto num = wronskian_with_state(chain, order - 1, psi, energy);
  const auto den = direct_wronskian(chain, order - 1);
  require_zero_free(den, "transform_ratio: W_{n-1} vanishes on the grid");
  return quotient(num, den);
}

SampledFunction transform_integral(const WronskianTower& tower, const JordanChain& chain,
                                   int order, const SampledFunction& psi, double energy,
                                   double constant) {
  if (order < 1) throw std::invalid_argument("transform_integral: order must be >= 1");
  if (energy == tower.lambda)
    throw std::invalid_argument(
        "transform_integral: Psi at the factorization energy is annihilated; use chi_perp");
  if (order - 1 > tower.top())
    throw std::invalid_argument("transform_integral: tower does not reach level n - 1");
  if (!psi.has_derivatives())
    throw std::invalid_argument("transform_integral: Psi needs derivatives");
  const Grid& g = tower.levels[0].grid;
  const double h = g.spacing();
  const auto unit = ones(g);
  const SampledFunction& w_lo = level_or_unit(tower, order - 2, unit);
  const SampledFunction& w_hi = level_or_unit(tower, order - 1, unit);
  require_zero_free(w_hi, "transform_integral: W_{n-1} vanishes on the grid");

  const SampledFunction wpsi =
      order == 1 ? psi : wronskian_with_state(chain, order - 2, psi, energy);

  std::vector<double> num(g.n_points), dnum(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    num[i] = w_hi.values[i] * wpsi.values[i];
    dnum[i] = w_hi.derivatives[i] * wpsi.values[i] + w_hi.values[i] * wpsi.derivatives[i];
  }
  const auto integral =
      cumulative_ratio_integral(SampledFunction(g, std::move(num), std::move(dnum)), w_lo);

  auto lo_over = [&](int i, const DoublePole& p) {
    const double s = g.x(i) - p.x0;
    if (std::abs(s) < 0.25 * h) return w_lo.derivative_at(0.5 * (g.x(i) + p.x0));
    return w_lo.values[i] / s;
  };

  const double factor = tower.lambda - energy;
  std::vector<double> phi(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    double val = w_lo.values[i] * (constant + integral.smooth.values[i]);
    for (const auto& p : integral.poles) val -= p.strength * lo_over(i, p);
    phi[i] = factor * val / w_hi.values[i];
  }
  return SampledFunction(g, std::move(phi));
}

SampledFunction normalize(const SampledFunction& f) {
  const double m = f.max_abs();
  if (m == 0.0) throw NotSquareIntegrableError("normalize: zero function");
  if (!(std::abs(f.values.front()) < 1e-2 * m && std::abs(f.values.back()) < 1e-2 * m))
    throw NotSquareIntegrableError("normalize: function does not decay at the boundary");
  std::vector<double> sq(f.size());
  for (int i = 0; i < f.size(); ++i) sq[i] = f.values[i] * f.values[i];
  const double norm = std::sqrt(integrate(SampledFunction(f.grid, std::move(sq))));
  SampledFunction out = f;
  for (double& v : out.values) v /= norm;
  for (double& d : out.derivatives) d /= norm;
  return out;
}

}  // namespace csusy
