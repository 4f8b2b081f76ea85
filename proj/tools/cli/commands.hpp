#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mdecon::cli {

//! Command-line misuse (exit code 2), as opposed to runtime/config failures
//! (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulateOptions {
  std::optional<std::string> preset_name;
  std::optional<std::string> config_path;
  std::string out_dir = ".";
  std::optional<std::int64_t> replications;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

struct EstimateOptions {
  std::string config_path;
  std::string out_dir = ".";
  bool survival = false;     //!< estimate the survival function (needs c > 1)
  bool known_error = false;  //!< force the known-error route
};

struct MellinTableOptions {
  std::string config_path;
  std::string out_dir = ".";
};

//! Runs a Monte-Carlo experiment; writes report.csv and curves.csv.
void cmd_simulate(const SimulateOptions& options);

//! Estimates from user sample files; writes estimate.csv and selection.csv.
void cmd_estimate(const EstimateOptions& options);

//! Tabulates an analytic Mellin transform; writes mellin.csv.
void cmd_mellin_table(const MellinTableOptions& options);

}  // namespace mdecon::cli
