#include "config.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>

#include "csusy/potential.hpp"

namespace csusy::tools {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

double parse_number(const std::string& raw, const std::string& key) {
  try {
    std::size_t used = 0;
    double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects a number, got '" + raw + "'");
  }
}

std::vector<double> parse_array(const std::string& raw, const std::string& key) {
  if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
    throw ConfigError("config: key '" + key + "' expects an array");
  std::vector<double> out;
  std::stringstream body(raw.substr(1, raw.size() - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_number(item, key));
  }
  return out;
}

std::string parse_string(const std::string& raw, const std::string& key) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
    throw ConfigError("config: key '" + key + "' expects a quoted string");
  return raw.substr(1, raw.size() - 2);
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  RunConfig c;
  double grid_xmin = c.grid.x_min, grid_xmax = c.grid.x_max;
  double grid_n = c.grid.n_points;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: malformed section header at line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected 'key = value' at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!section.empty()) key = section + "." + key;

    if (key == "lambda")
      c.lambda = parse_number(value, key);
    else if (key == "order")
      c.order = static_cast<int>(parse_number(value, key));
    else if (key == "constants")
      c.constants = parse_array(value, key);
    else if (key == "grid.x_min")
      grid_xmin = parse_number(value, key);
    else if (key == "grid.x_max")
      grid_xmax = parse_number(value, key);
    else if (key == "grid.n_points")
      grid_n = parse_number(value, key);
    else if (key == "potential.type")
      c.potential_type = parse_string(value, key);
    else if (key == "potential.file")
      c.potential_file = parse_string(value, key);
    else if (key == "potential.seed_y0")
      c.seed_y0 = parse_number(value, key);
    else if (key == "potential.seed_dy0")
      c.seed_dy0 = parse_number(value, key);
    else if (key == "state.energy")
      c.energy = parse_number(value, key);
    else if (key == "state.psi_y0")
      c.psi_y0 = parse_number(value, key);
    else if (key == "state.psi_dy0")
      c.psi_dy0 = parse_number(value, key);
    else if (key == "spectrum.count")
      c.spectrum_count = static_cast<int>(parse_number(value, key));
    else if (key == "tolerances.residual")
      c.residual_tol = parse_number(value, key);
    else if (key == "output.dir")
      c.out_dir = parse_string(value, key);
    else
      throw ConfigError("config: unknown key '" + key + "' at line " + std::to_string(lineno));
  }
  try {
    c.grid = Grid(grid_xmin, grid_xmax, static_cast<int>(grid_n));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: invalid grid: ") + e.what());
  }
  if (c.order < 1) throw ConfigError("config: order must be >= 1");
  if (c.spectrum_count < 1) throw ConfigError("config: spectrum.count must be >= 1");
  if (!(c.residual_tol > 0)) throw ConfigError("config: tolerances.residual must be positive");
  return c;
}

TransformSpec to_transform_spec(const RunConfig& c) {
  TransformSpec spec;
  spec.lambda = c.lambda;
  spec.order = c.order;
  spec.grid = c.grid;
  spec.energy_e = c.energy;
  if (c.constants.size() == 1)
    spec.top_constant = c.constants[0];
  else if (static_cast<int>(c.constants.size()) == c.order)
    spec.explicit_constants = c.constants;
  else if (!c.constants.empty())
    throw ConfigError(
        "config: constants must have length 1 (free top constant) or length = order");

  if (c.potential_type == "poschl_teller") {
    spec.pt_closed_forms = true;
    if (!(c.lambda < 0))
      throw ConfigError("config: lambda must be negative for the poschl_teller potential");
  } else if (c.potential_type == "tabulated") {
    if (c.potential_file.empty())
      throw ConfigError("config: tabulated potential requires potential.file");
    TabulatedPotential table = [&] {
      try {
        return TabulatedPotential::from_csv(c.potential_file);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
      }
    }();
    if (!table.covers(c.grid))
      throw ConfigError("config: tabulated potential does not cover the grid");
    spec.pt_closed_forms = false;
    spec.potential = std::make_shared<TabulatedPotential>(std::move(table));
    spec.seed_y0 = c.seed_y0;
    spec.seed_dy0 = c.seed_dy0;
    spec.psi_y0 = c.psi_y0;
    spec.psi_dy0 = c.psi_dy0;
  } else {
    throw ConfigError("config: unknown potential.type '" + c.potential_type + "'");
  }
  return spec;
}

}  // namespace csusy::tools
