#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace stochgeo::cli {

using Json = nlohmann::ordered_json;

// Which stochastic functional a command evaluates. `automatic` picks
// santalo for the simplex, centroid when --p is given, w otherwise.
enum class Functional { automatic, w, santalo, centroid, sylvester };

struct ExperimentConfig {
  std::string command;
  std::string body = "kgon:6:4";
  std::optional<std::string> vs;
  std::string coeff = "cross";
  Functional functional = Functional::automatic;
  int n_points = 3;
  double r = 1.0;
  std::optional<double> p;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  int nodes = 1024;  // quadrature panels
  int order = 8;     // Gauss points per panel
  std::size_t t_grid = 21;
  std::size_t vertex = 0;
  bool flat = false;  // sweep with beta == 0
  std::vector<int> ladder{8, 32, 128, 512};
  std::size_t trials = 201;
  double ci_level = 0.99;
  unsigned workers = 0;  // execution only; never part of a payload
  std::optional<std::string> out;
  std::optional<std::string> svg;

  // Throws std::invalid_argument for non-positive knobs.
  void validate() const;
  Json to_json() const;
};

std::string functional_name(Functional f);
Functional parse_functional(const std::string& text);

/// Result of one command: the JSON report plus an optional primary text
/// payload (CSV for sweeps, JSON lines for reductions) and SVG.
struct CommandOutput {
  Json report;
  std::optional<std::string> table;
  std::optional<std::string> svg;
  bool ok = true;
};

CommandOutput cmd_verify_constants(const ExperimentConfig& cfg);
CommandOutput cmd_dominance(const ExperimentConfig& cfg);
CommandOutput cmd_sweep(const ExperimentConfig& cfg);
CommandOutput cmd_converge(const ExperimentConfig& cfg);
CommandOutput cmd_reduce(const ExperimentConfig& cfg);
CommandOutput cmd_estimate(const ExperimentConfig& cfg);

CommandOutput run_command(const ExperimentConfig& cfg);

struct SeriesPoint {
  double x, y, lo, hi;
};
// Line plot with a shaded band between lo and hi.
std::string render_band_svg(const std::vector<SeriesPoint>& pts, const std::string& title,
                            const std::string& x_label, const std::string& y_label);

}  // namespace stochgeo::cli
