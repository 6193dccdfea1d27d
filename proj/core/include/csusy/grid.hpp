#ifndef CSUSY_GRID_HPP
#define CSUSY_GRID_HPP

#include <stdexcept>

namespace csusy {

/// Uniform abscissae x_i = x_min + i*h, i = 0..n_points-1.
struct Grid {
  double x_min;
  double x_max;
  int n_points;

  Grid(double xmin, double xmax, int n) : x_min(xmin), x_max(xmax), n_points(n) {
    if (!(xmin < xmax)) throw std::invalid_argument("Grid: x_min must be < x_max");
    if (n < 9) throw std::invalid_argument("Grid: need at least 9 points for 5-point stencils");
  }

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return x_min + i * spacing(); }

  /// Nearest grid index for an abscissa (clamped to range).
  int index_near(double x) const {
    int i = static_cast<int>((x - x_min) / spacing() + 0.5);
    if (i < 0) i = 0;
    if (i >= n_points) i = n_points - 1;
    return i;
  }

  bool operator==(const Grid& o) const {
    return x_min == o.x_min && x_max == o.x_max && n_points == o.n_points;
  }

  /// Truncation of the real line used throughout: [-15, 15] at h = 0.005.
  static Grid default_domain() { return Grid(-15.0, 15.0, 6001); }
};

}  // namespace csusy

#endif
