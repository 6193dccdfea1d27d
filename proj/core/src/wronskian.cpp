#include "csusy/wronskian.hpp"

#include <cmath>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/quadrature.hpp"

namespace csusy {

namespace {

constexpr int kMaxColumns = 8;

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

/// A Wronskian column: samples of a solution of y'' = (V - E) y - pred,
/// where pred (if any) is an earlier column of the same matrix.
struct Column {
  const SampledFunction* f;
  double energy;
  int pred;  // index of the source column, or -1
};

double lu_det(double a[kMaxColumns][kMaxColumns], int m) {
  double det = 1.0;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int r = k + 1; r < m; ++r)
      if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
    if (piv != k) {
      for (int c = k; c < m; ++c) std::swap(a[k][c], a[piv][c]);
      det = -det;
    }
    if (a[k][k] == 0.0) return 0.0;
    det *= a[k][k];
    for (int r = k + 1; r < m; ++r) {
      const double factor = a[r][k] / a[k][k];
      for (int c = k; c < m; ++c) a[r][c] -= factor * a[k][c];
    }
  }
  return det;
}

SampledFunction det_wronskian(const Potential& pot, const Grid& grid,
                              const std::vector<Column>& cols) {
  const int m = static_cast<int>(cols.size());
  if (m < 1 || m > kMaxColumns - 1)
    throw std::invalid_argument("det_wronskian: unsupported column count");
  for (const auto& col : cols) {
    if (!col.f->has_derivatives())
      throw std::invalid_argument("det_wronskian: columns need first derivatives");
    if (!(col.f->grid == grid))
      throw std::invalid_argument("det_wronskian: grid mismatch");
    if (col.pred >= static_cast<int>(&col - cols.data()))
      throw std::invalid_argument("det_wronskian: source column must precede its successor");
  }

  std::vector<double> det(grid.n_points), ddet(grid.n_points);
  double table[kMaxColumns][kMaxColumns + 1];  // [column][derivative order]
  double vder[kMaxColumns];
  double a[kMaxColumns][kMaxColumns];

  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    for (int s = 0; s <= std::max(0, m - 2); ++s) vder[s] = pot.derivative(s, x);

    for (int c = 0; c < m; ++c) {
      table[c][0] = cols[c].f->values[i];
      table[c][1] = cols[c].f->derivatives[i];
      for (int r = 2; r <= m; ++r) {
        double acc = 0.0;
        for (int s = 0; s <= r - 2; ++s)
          acc += binom(r - 2, s) * vder[s] * table[c][r - 2 - s];
        acc -= cols[c].energy * table[c][r - 2];
        if (cols[c].pred >= 0) acc -= table[cols[c].pred][r - 2];
        table[c][r] = acc;
      }
    }

    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a[r][c] = table[c][r];
    det[i] = lu_det(a, m);

    for (int r = 0; r < m - 1; ++r)
      for (int c = 0; c < m; ++c) a[r][c] = table[c][r];
    for (int c = 0; c < m; ++c) a[m - 1][c] = table[c][m];
    ddet[i] = lu_det(a, m);
  }
  return SampledFunction(grid, std::move(det), std::move(ddet));
}

/// The recursion step; when `match` is set the constant is chosen so that the
/// result equals `target` at x_min, otherwise `constant` is used as given.
std::pair<SampledFunction, double> recursive_impl(const SampledFunction& w_lo,
                                                  const SampledFunction& w_hi,
                                                  double constant, bool match, double target) {
  if (!(w_lo.grid == w_hi.grid))
    throw std::invalid_argument("recursive_wronskian: grid mismatch");
  if (!w_lo.has_derivatives() || !w_hi.has_derivatives())
    throw std::invalid_argument("recursive_wronskian: inputs need first derivatives");
  const Grid& g = w_lo.grid;
  const double h = g.spacing();
  const int n = g.n_points;

  std::vector<double> sq(n), dsq(n);
  for (int i = 0; i < n; ++i) {
    sq[i] = w_hi.values[i] * w_hi.values[i];
    dsq[i] = 2.0 * w_hi.values[i] * w_hi.derivatives[i];
  }
  const auto integral =
      cumulative_ratio_integral(SampledFunction(g, std::move(sq), std::move(dsq)), w_lo);
  const auto& smooth = integral.smooth;
  const auto& poles = integral.poles;

  double c = constant;
  if (match) {
    double sing0 = 0.0;
    for (const auto& p : poles) sing0 += p.strength / (g.x_min - p.x0);
    c = sing0 - target / w_lo.values[0];
  }

  // ratio w_lo(x) / (x - x0), evaluated through the derivative near the zero
  auto lo_over = [&](int i, const DoublePole& p) {
    const double s = g.x(i) - p.x0;
    if (std::abs(s) < 0.25 * h) return w_lo.derivative_at(0.5 * (g.x(i) + p.x0));
    return w_lo.values[i] / s;
  };

  std::vector<double> w(n), dw(n);
  for (int i = 0; i < n; ++i) {
    const double bracket = c + smooth.values[i];
    double val = -w_lo.values[i] * bracket;
    for (const auto& p : poles) val += p.strength * lo_over(i, p);
    w[i] = val;
    // derivative from the product rule; near a pole this cancels badly and is
    // replaced by a stencil below
    double der = -w_lo.derivatives[i] * bracket - w_lo.values[i] * smooth.derivatives[i];
    for (const auto& p : poles) {
      const double s = g.x(i) - p.x0;
      if (std::abs(s) > 1e-12)
        der += p.strength * (w_lo.derivatives[i] * s - w_lo.values[i]) / (s * s);
    }
    dw[i] = der;
  }
  for (int i = 0; i < n; ++i) {
    bool near = false;
    for (const auto& p : poles)
      if (std::abs(g.x(i) - p.x0) < 2.0 * h) near = true;
    if (!near) continue;
    // poles cannot touch the boundary (cumulative_ratio_integral throws), so
    // the 5-point stencil always fits
    dw[i] = (w[i - 2] - 8 * w[i - 1] + 8 * w[i + 1] - w[i + 2]) / (12 * h);
  }
  return {SampledFunction(g, std::move(w), std::move(dw)), c};
}

std::vector<Column> chain_columns(const JordanChain& chain, int upto) {
  if (upto < 0 || upto > chain.order())
    throw std::invalid_argument("direct_wronskian: level outside the chain");
  std::vector<Column> cols;
  for (int j = 0; j <= upto; ++j)
    cols.push_back({&chain.functions[j], chain.spec.lambda, j - 1});
  return cols;
}

}  // namespace

SampledFunction direct_wronskian(const JordanChain& chain, int upto) {
  return det_wronskian(*chain.potential, chain.grid(), chain_columns(chain, upto));
}

SampledFunction wronskian_with_state(const JordanChain& chain, int upto,
                                     const SampledFunction& psi, double psi_energy) {
  auto cols = chain_columns(chain, upto);
  cols.push_back({&psi, psi_energy, -1});
  return det_wronskian(*chain.potential, chain.grid(), cols);
}

SampledFunction recursive_wronskian(const SampledFunction& w_lo, const SampledFunction& w_hi,
                                    double constant) {
  return recursive_impl(w_lo, w_hi, constant, false, 0.0).first;
}

SampledFunction ones(const Grid& grid) {
  return SampledFunction(grid, std::vector<double>(grid.n_points, 1.0),
                         std::vector<double>(grid.n_points, 0.0));
}

WronskianTower build_tower(const JordanChain& chain, const std::vector<double>& constants) {
  WronskianTower tower{{chain.functions[0]}, constants, chain.spec.lambda};
  const auto unit = ones(chain.grid());
  for (std::size_t k = 1; k <= constants.size(); ++k) {
    const SampledFunction& lo = k == 1 ? unit : tower.levels[k - 2];
    tower.levels.push_back(recursive_wronskian(lo, tower.levels[k - 1], constants[k - 1]));
  }
  return tower;
}

WronskianTower build_tower_matched(const JordanChain& chain, int top,
                                   const std::vector<double>& above) {
  if (top < 1) throw std::invalid_argument("build_tower_matched: top must be >= 1");
  WronskianTower tower{{chain.functions[0]}, {}, chain.spec.lambda};
  const auto unit = ones(chain.grid());
  for (int k = 1; k <= top; ++k) {
    const SampledFunction& lo = k == 1 ? unit : tower.levels[k - 2];
    if (k <= chain.order()) {
      const double target = direct_wronskian(chain, k).values[0];
      auto [w, c] = recursive_impl(lo, tower.levels[k - 1], 0.0, true, target);
      tower.levels.push_back(std::move(w));
      tower.recursion_constants.push_back(c);
    } else {
      const int j = k - chain.order() - 1;
      const double c = j < static_cast<int>(above.size()) ? above[j] : 0.0;
      tower.levels.push_back(recursive_wronskian(lo, tower.levels[k - 1], c));
      tower.recursion_constants.push_back(c);
    }
  }
  return tower;
}

ChiLadder build_chi_ladder(const WronskianTower& tower) {
  ChiLadder ladder;
  ladder.chis.push_back(tower.levels[0]);
  for (int j = 1; j <= tower.top(); ++j) {
    const SampledFunction& num = tower.levels[j];
    const SampledFunction& den = tower.levels[j - 1];
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i + 1 < den.size(); ++i)
      if (den.values[i] == 0.0 || den.values[i] * den.values[i + 1] < 0)
        brackets.emplace_back(den.grid.x(i), den.grid.x(i + 1));
    if (den.values.back() == 0.0)
      brackets.emplace_back(den.grid.x_max, den.grid.x_max);
    if (!brackets.empty())
      throw SingularityError("build_chi_ladder: divisor Wronskian vanishes", brackets);
    std::vector<double> q(num.size()), dq(num.size());
    for (int i = 0; i < num.size(); ++i) {
      q[i] = num.values[i] / den.values[i];
      dq[i] = (num.derivatives[i] * den.values[i] - num.values[i] * den.derivatives[i]) /
              (den.values[i] * den.values[i]);
    }
    ladder.chis.emplace_back(num.grid, std::move(q), std::move(dq));
  }
  return ladder;
}

SampledFunction factorized_wronskian(const ChiLadder& ladder, int upto) {
  if (upto < 0 || upto >= static_cast<int>(ladder.chis.size()))
    throw std::invalid_argument("factorized_wronskian: level outside the ladder");
  const Grid& g = ladder.chis[0].grid;
  std::vector<double> prod(g.n_points, 1.0), dprod(g.n_points, 0.0);
  for (int j = 0; j <= upto; ++j) {
    const auto& chi = ladder.chis[j];
    for (int i = 0; i < g.n_points; ++i) {
      dprod[i] = dprod[i] * chi.values[i] + prod[i] * chi.derivatives[i];
      prod[i] *= chi.values[i];
    }
  }
  return SampledFunction(g, std::move(prod), std::move(dprod));
}

double wronskian_derivative_check(const SampledFunction& chi, const SampledFunction& xi) {
  if (!(chi.grid == xi.grid))
    throw std::invalid_argument("wronskian_derivative_check: grid mismatch");
  if (!chi.has_derivatives() || !xi.has_derivatives())
    throw std::invalid_argument("wronskian_derivative_check: inputs need derivatives");
  const int n = chi.size();
  const double h = chi.grid.spacing();
  std::vector<double> w(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] = chi.values[i] * xi.derivatives[i] - chi.derivatives[i] * xi.values[i];
    scale = std::max(scale, chi.values[i] * chi.values[i]);
  }
  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const double wp = (w[i - 2] - 8 * w[i - 1] + 8 * w[i + 1] - w[i + 2]) / (12 * h);
    worst = std::max(worst, std::abs(wp + chi.values[i] * chi.values[i]));
  }
  return worst / (1.0 + scale);
}

}  // namespace csusy
