#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mdecon::cli;

  CLI::App app{"mdecon — multiplicative deconvolution via Mellin transforms"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand(
      "simulate",
      "Run a Monte-Carlo experiment; writes report.csv and curves.csv");
  simulate->add_option("--preset", sim.preset_name,
                       "Built-in experiment (fig1 ... fig8)");
  simulate->add_option("--config", sim.config_path,
                       "JSON experiment spec (see README)");
  simulate->add_option("--out", sim.out_dir, "Output directory")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Override the experiment seed");
  simulate->add_option("--replications", sim.replications,
                       "Override the replication count");
  simulate->add_option("--jobs", sim.jobs, "Worker threads for replications")
      ->capture_default_str();

  EstimateOptions est;
  auto* estimate = app.add_subcommand(
      "estimate",
      "Estimate density/survival from sample files; writes estimate.csv and "
      "selection.csv");
  estimate->add_option("--config", est.config_path, "JSON estimation config")
      ->required();
  estimate->add_option("--out", est.out_dir, "Output directory")
      ->capture_default_str();
  estimate->add_flag("--survival", est.survival,
                     "Estimate the survival function (requires c > 1)");
  estimate->add_flag("--known-error", est.known_error,
                     "Use the analytic error law from the config even if a "
                     "u_file is present");

  MellinTableOptions tab;
  auto* table = app.add_subcommand(
      "mellin-table", "Tabulate an analytic Mellin transform; writes mellin.csv");
  table->add_option("--config", tab.config_path, "JSON table config")
      ->required();
  table->add_option("--out", tab.out_dir, "Output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);      // prints help or the parse error
    return code == 0 ? 0 : 2;          // 2: command-line misuse
  }

  try {
    if (simulate->parsed()) {
      cmd_simulate(sim);
    } else if (estimate->parsed()) {
      cmd_estimate(est);
    } else if (table->parsed()) {
      cmd_mellin_table(tab);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
