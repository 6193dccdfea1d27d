#ifndef CSUSY_TOOLS_CONFIG_HPP
#define CSUSY_TOOLS_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "csusy/grid.hpp"
#include "csusy/pipeline.hpp"

namespace csusy::tools {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double lambda = -0.5;
  int order = 4;
  std::vector<double> constants;
  Grid grid = Grid::default_domain();

  std::string potential_type = "poschl_teller";
  std::string potential_file;
  double seed_y0 = 0, seed_dy0 = 0;  // chain seed for tabulated potentials
  double psi_y0 = 0, psi_dy0 = 0;    // Psi seed for tabulated potentials
  double energy = -1.0;

  int spectrum_count = 2;
  double residual_tol = 1e-6;
  std::string out_dir = ".";
};

/// Reads a config file: a TOML subset with `key = value` pairs, [section]
/// tables, # comments, strings, numbers, booleans, and flat number arrays.
/// Unknown keys are rejected.
RunConfig load_config(const std::string& path);

/// Maps a config onto a pipeline spec (resolves the potential, the constants
/// convention, and the state seeds). Throws ConfigError on inconsistencies.
TransformSpec to_transform_spec(const RunConfig& config);

}  // namespace csusy::tools

#endif
