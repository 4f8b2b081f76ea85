#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "mdecon/empirical.hpp"
#include "mdecon/estimators.hpp"
#include "mdecon/selection.hpp"
#include "mdecon/simulation.hpp"
#include "sample_io.hpp"

namespace mdecon::cli {

namespace {

namespace fs = std::filesystem;

std::string output_path(const std::string& out_dir, const char* file) {
  fs::create_directories(out_dir);
  return (fs::path(out_dir) / file).string();
}

void write_report_csv(const std::string& path, const ExperimentReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"emise", "", format_double(report.emise)});
  for (std::size_t j = 0; j < report.per_replication_ise.size(); ++j) {
    rows.push_back({"ise", std::to_string(j + 1),
                    format_double(report.per_replication_ise[j])});
  }
  for (const auto& [k, count] : report.k_hat_histogram) {
    rows.push_back({"k_hat_count", format_double(k), std::to_string(count)});
  }
  write_csv(path, {"record", "key", "value"}, rows);
}

void write_curves_csv(const std::string& path, const ExperimentReport& report) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.x_points.size(); ++i) {
    rows.push_back({format_double(report.x_points[i]),
                    format_double(report.truth_curve[i]),
                    format_double(report.median_curve[i])});
  }
  write_csv(path, {"x", "truth", "median"}, rows);
}

void write_selection_csv(const std::string& path,
                         const SelectionResult& selection) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : selection.per_k) {
    rows.push_back({format_double(row.k), format_double(row.contrast),
                    format_double(row.penalty), format_double(row.objective),
                    row.k == selection.k_hat ? "1" : "0",
                    format_double(selection.k_hat),
                    std::to_string(selection.k_n),
                    format_double(selection.sigma_hat_sq),
                    format_double(selection.kappa_effective)});
  }
  write_csv(path,
            {"k", "contrast", "penalty", "objective", "selected", "k_hat",
             "k_n", "sigma_hat_sq", "kappa_effective"},
            rows);
}

void write_estimate_csv(const std::string& path, const CurveEstimate& curve) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < curve.x_points.size(); ++i) {
    rows.push_back(
        {format_double(curve.x_points[i]), format_double(curve.values[i])});
  }
  write_csv(path, {"x", "estimate"}, rows);
}

}  // namespace

void cmd_simulate(const SimulateOptions& options) {
  if (options.preset_name && options.config_path) {
    throw UsageError("simulate: --preset and --config are mutually exclusive");
  }
  ExperimentSpec spec;
  if (options.preset_name) {
    spec = preset(*options.preset_name);
  } else if (options.config_path) {
    spec = parse_experiment(load_json_file(*options.config_path));
  } else {
    throw UsageError("simulate: provide --preset <fig1..fig8> or --config <file>");
  }
  if (options.replications) spec.replications = *options.replications;
  if (options.seed) spec.seed = *options.seed;

  const ExperimentReport report = run_experiment(spec, options.jobs);

  write_report_csv(output_path(options.out_dir, "report.csv"), report);
  write_curves_csv(output_path(options.out_dir, "curves.csv"), report);
}

void cmd_estimate(const EstimateOptions& options) {
  EstimateConfig cfg = parse_estimate(load_json_file(options.config_path));
  if (options.survival) cfg.survival = true;
  const bool known = options.known_error || !cfg.u_file.has_value();
  if (known && !cfg.error.has_value()) {
    throw std::runtime_error(
        "estimate: no 'u_file' sample given, so the error law must be known — "
        "add an 'error' distribution to the config");
  }
  if (cfg.survival && !(cfg.c > 1.0)) {
    throw std::runtime_error(
        "estimate: --survival requires c > 1 (got c = " +
        format_double(cfg.c) + ")");
  }

  const Sample y(read_sample_file(cfg.y_file));
  const auto n = static_cast<std::int64_t>(y.size());
  const TGrid grid = make_tgrid(cfg.t_max, cfg.t_step);
  const MellinFn my_hat = empirical_mellin(y, cfg.c, grid);
  const double sigma_sq = sigma_hat_sq(y, cfg.c);
  const WeightFn v = make_weight(grid, cfg.c, cfg.a);

  SelectionResult selection{};
  CurveEstimate curve;
  if (known) {
    const MellinFn mu = analytic_mellin_fn(*cfg.error, cfg.c, grid);
    const PenaltyConfig pen(Regime::known, cfg.kappa, cfg.k_step);
    selection = select_known(my_hat, mu, v, cfg.c, n, sigma_sq, pen);
    curve = cfg.survival
                ? survival_known(my_hat, mu, selection.k_hat, cfg.c, cfg.x_points)
                : density_known(my_hat, mu, selection.k_hat, cfg.c, cfg.x_points);
  } else {
    const Sample u(read_sample_file(*cfg.u_file));
    const auto m = static_cast<std::int64_t>(u.size());
    const MellinFn mu_hat = empirical_mellin(u, cfg.c, grid);
    const ThresholdMask mask = threshold_mask(mu_hat, m, n);
    const PenaltyConfig pen(Regime::unknown, cfg.kappa, cfg.k_step);
    selection =
        select_unknown(my_hat, mu_hat, mask, v, cfg.c, n, m, sigma_sq, pen);
    const MellinFn mx = mx_hat(my_hat, mu_hat, mask);
    curve = cfg.survival
                ? survival_unknown(mx, selection.k_hat, cfg.c, cfg.x_points)
                : density_unknown(mx, selection.k_hat, cfg.c, cfg.x_points);
  }

  write_estimate_csv(output_path(options.out_dir, "estimate.csv"), curve);
  write_selection_csv(output_path(options.out_dir, "selection.csv"), selection);
}

void cmd_mellin_table(const MellinTableOptions& options) {
  const MellinTableConfig cfg =
      parse_mellin_table(load_json_file(options.config_path));
  const TGrid grid = make_tgrid(cfg.t_max, cfg.t_step);
  const MellinFn mfn = analytic_mellin_fn(cfg.dist, cfg.c, grid);

  // Conjugate symmetry makes t < 0 redundant; tabulate t >= 0 ascending.
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = grid.half(); j < grid.size(); ++j) {
    const auto value = mfn.values()[j];
    rows.push_back({format_double(grid.point(j)), format_double(value.real()),
                    format_double(value.imag()),
                    format_double(std::abs(value))});
  }
  write_csv(output_path(options.out_dir, "mellin.csv"),
            {"t", "re", "im", "abs"}, rows);
}

}  // namespace mdecon::cli
