#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdecon/distributions.hpp"
#include "mdecon/simulation.hpp"

namespace mdecon::cli {

//! Estimation run described by a JSON config (see README for the schema).
struct EstimateConfig {
  std::string y_file;
  std::optional<std::string> u_file;  //!< error sample → unknown-error route
  std::optional<DistSpec> error;      //!< analytic error law → known-error route
  double c = 0.5;
  double a = 0.0;
  double kappa = 0.3;
  double k_step = 1.0;
  double t_max = 20.0;
  double t_step = 0.01;
  bool survival = false;
  std::vector<double> x_points;  //!< defaults to 400 points on [0.01, 8]
};

//! Mellin-table dump described by a JSON config.
struct MellinTableConfig {
  DistSpec dist = GammaDist(1.0, 3.0);
  double c = 0.5;
  double t_max = 5.0;
  double t_step = 0.1;
};

//! Loads and parses a JSON file; parse errors become `std::runtime_error`
//! mentioning the path.
nlohmann::json load_json_file(const std::string& path);

//! {"family": "gamma"|"weibull"|"beta"|"lognormal"|"pareto", <params>} with
//! the parameter names matching the distribution structs (q/p, s/k, a/b,
//! mu/sigma_sq, l/x_min).
DistSpec parse_dist(const nlohmann::json& node, const std::string& context);

//! Full experiment spec for `simulate --config`; unrecognized keys rejected.
ExperimentSpec parse_experiment(const nlohmann::json& node);

EstimateConfig parse_estimate(const nlohmann::json& node);

MellinTableConfig parse_mellin_table(const nlohmann::json& node);

}  // namespace mdecon::cli
