#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "stochgeo/errors.hpp"

namespace {

using stochgeo::cli::ExperimentConfig;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

void add_common(CLI::App* sub, ExperimentConfig& cfg, std::string& functional) {
  sub->add_option("--body", cfg.body,
                  "Body descriptor: square:A diamond:A kgon:K:A triangle:A disk:K:A file:PATH "
                  "randsym:PAIRS:A[:SEED] randpoly:K:A[:SEED]")
      ->capture_default_str();
  sub->add_option("--coeff", cfg.coeff, "Coefficient body: cross | simplex | lq:Q")->capture_default_str();
  sub->add_option("--functional", functional, "auto | w | santalo | centroid | sylvester")
      ->capture_default_str();
  sub->add_option("--n-points", cfg.n_points, "Points per sample (N)")->capture_default_str();
  sub->add_option("--r", cfg.r, "Negative moment order (>= 1)")->capture_default_str();
  sub->add_option("--p", cfg.p, "Centroid body exponent; selects the centroid functional");
  sub->add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  sub->add_option("--nodes", cfg.nodes, "Quadrature panels on the circle")->capture_default_str();
  sub->add_option("--order", cfg.order, "Gauss points per panel")->capture_default_str();
  sub->add_option("--ci-level", cfg.ci_level, "Confidence level")->capture_default_str();
  sub->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->capture_default_str();
  sub->add_option("--out", cfg.out, "Output file for the command's primary payload");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic polar-volume functionals of planar convex bodies"};
  app.require_subcommand(1);
  ExperimentConfig cfg;
  std::string functional = "auto";

  auto* verify = app.add_subcommand("verify-constants", "Check closed-form anchors");
  verify->add_option("--seed", cfg.seed, "Seed for the random polygon family")->capture_default_str();
  verify->add_option("--nodes", cfg.nodes, "Quadrature panels")->capture_default_str();
  verify->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  verify->add_option("--out", cfg.out, "Write the JSON report here");

  auto* dominance = app.add_subcommand("dominance", "Paired comparison of a body and an extremizer");
  add_common(dominance, cfg, functional);
  dominance->add_option("--vs", cfg.vs, "Extremizer descriptor (default square:4, triangle:4 for santalo)");

  auto* sweep = app.add_subcommand("sweep", "W along an RS-movement, CSV with optional SVG");
  add_common(sweep, cfg, functional);
  sweep->add_option("--t-grid", cfg.t_grid, "Grid points over [t_min, t_max]")->capture_default_str();
  sweep->add_option("--vertex", cfg.vertex, "Vertex to move")->capture_default_str();
  sweep->add_flag("--flat", cfg.flat, "Control run with a zero chord-shift profile");
  sweep->add_option("--svg", cfg.svg, "Write a plot of the sweep");

  auto* converge = app.add_subcommand("converge", "Hausdorff and polar-volume convergence ladder");
  add_common(converge, cfg, functional);
  converge->add_option("--ladder", cfg.ladder, "Point counts")->capture_default_str();
  converge->add_option("--trials", cfg.trials, "Trials per rung for median distances")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Reduce a polygon to the extremizer by RS-movements");
  add_common(reduce, cfg, functional);

  auto* estimate = app.add_subcommand("estimate", "Estimate one functional");
  add_common(estimate, cfg, functional);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.functional = stochgeo::cli::parse_functional(functional);
    const auto result = stochgeo::cli::run_command(cfg);
    const std::string report = result.report.dump(2) + "\n";
    if (result.table) {
      if (cfg.out) write_file(*cfg.out, *result.table);
      else std::cout << *result.table;
    } else if (cfg.out) {
      write_file(*cfg.out, report);
    }
    if (result.svg && cfg.svg) write_file(*cfg.svg, *result.svg);
    std::cout << report;
    return result.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
