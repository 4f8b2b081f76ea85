#include "config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace mdecon::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw std::runtime_error("config: " + context + ": " + what);
}

void check_keys(const json& node, const std::set<std::string>& allowed,
                const std::string& context) {
  if (!node.is_object()) fail(context, "expected a JSON object");
  for (const auto& item : node.items()) {
    if (!allowed.count(item.key())) {
      fail(context, "unknown key '" + item.key() + "'");
    }
  }
}

double get_number(const json& node, const std::string& key,
                  const std::string& context) {
  if (!node.contains(key)) fail(context, "missing key '" + key + "'");
  if (!node.at(key).is_number()) fail(context, "'" + key + "' must be a number");
  return node.at(key).get<double>();
}

double get_number_or(const json& node, const std::string& key,
                     double fallback, const std::string& context) {
  if (!node.contains(key) || node.at(key).is_null()) return fallback;
  if (!node.at(key).is_number()) fail(context, "'" + key + "' must be a number");
  return node.at(key).get<double>();
}

std::int64_t get_int(const json& node, const std::string& key,
                     const std::string& context) {
  if (!node.contains(key)) fail(context, "missing key '" + key + "'");
  if (!node.at(key).is_number_integer()) {
    fail(context, "'" + key + "' must be an integer");
  }
  return node.at(key).get<std::int64_t>();
}

std::vector<double> linspace(double lo, double hi, std::int64_t count) {
  if (count < 2) throw std::runtime_error("config: x_points count must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

//! x_points: either an explicit array of abscissas or
//! {"min": lo, "max": hi, "count": N} for a uniform grid.
std::vector<double> parse_x_points(const json& node,
                                   const std::string& context) {
  if (node.is_array()) {
    std::vector<double> out;
    for (const auto& v : node) {
      if (!v.is_number()) fail(context, "x_points entries must be numbers");
      out.push_back(v.get<double>());
    }
    if (out.size() < 2) fail(context, "x_points needs at least 2 entries");
    return out;
  }
  check_keys(node, {"min", "max", "count"}, context + ".x_points");
  const double lo = get_number(node, "min", context + ".x_points");
  const double hi = get_number(node, "max", context + ".x_points");
  const std::int64_t count = get_int(node, "count", context + ".x_points");
  if (!(lo > 0.0) || !(hi > lo)) {
    fail(context, "x_points requires 0 < min < max");
  }
  return linspace(lo, hi, count);
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config file '" + path + "': cannot open");
  try {
    return json::parse(in, /*cb=*/nullptr, /*allow_exceptions=*/true,
                       /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config file '" + path + "': " + e.what());
  }
}

DistSpec parse_dist(const json& node, const std::string& context) {
  if (!node.is_object() || !node.contains("family")) {
    fail(context, "expected {\"family\": ..., <params>}");
  }
  const std::string family = node.at("family").get<std::string>();
  if (family == "gamma") {
    check_keys(node, {"family", "q", "p"}, context);
    return GammaDist(get_number(node, "q", context),
                     get_number(node, "p", context));
  }
  if (family == "weibull") {
    check_keys(node, {"family", "s", "k"}, context);
    return WeibullDist(get_number(node, "s", context),
                       get_number(node, "k", context));
  }
  if (family == "beta") {
    check_keys(node, {"family", "a", "b"}, context);
    return BetaDist(get_number(node, "a", context),
                    get_number(node, "b", context));
  }
  if (family == "lognormal") {
    check_keys(node, {"family", "mu", "sigma_sq"}, context);
    return LogNormalDist(get_number(node, "mu", context),
                         get_number(node, "sigma_sq", context));
  }
  if (family == "pareto") {
    check_keys(node, {"family", "l", "x_min"}, context);
    return ParetoDist(get_number(node, "l", context),
                      get_number(node, "x_min", context));
  }
  fail(context, "unknown family '" + family +
                    "' (expected gamma, weibull, beta, lognormal, pareto)");
}

ExperimentSpec parse_experiment(const json& node) {
  const std::string ctx = "experiment";
  check_keys(node,
             {"name", "target", "error", "n", "m", "c", "a", "kappa", "k_step",
              "replications", "seed", "t_max", "t_step", "x_points"},
             ctx);
  ExperimentSpec spec;
  spec.name = node.value("name", std::string("custom"));
  if (node.contains("target")) {
    spec.target = parse_dist(node.at("target"), ctx + ".target");
  }
  if (node.contains("error")) {
    spec.error = parse_dist(node.at("error"), ctx + ".error");
  }
  spec.n = get_int(node, "n", ctx);
  if (node.contains("m") && !node.at("m").is_null()) {
    spec.m = get_int(node, "m", ctx);
  }
  spec.c = get_number_or(node, "c", spec.c, ctx);
  spec.a = get_number_or(node, "a", spec.a, ctx);
  spec.kappa = get_number_or(node, "kappa", spec.kappa, ctx);
  spec.k_step = get_number_or(node, "k_step", spec.k_step, ctx);
  if (node.contains("replications")) {
    spec.replications = get_int(node, "replications", ctx);
  }
  if (node.contains("seed")) {
    spec.seed = static_cast<std::uint64_t>(get_int(node, "seed", ctx));
  }
  spec.t_max = get_number_or(node, "t_max", spec.t_max, ctx);
  spec.t_step = get_number_or(node, "t_step", spec.t_step, ctx);
  if (node.contains("x_points")) {
    spec.x_points = parse_x_points(node.at("x_points"), ctx);
  }
  return spec;
}

EstimateConfig parse_estimate(const json& node) {
  const std::string ctx = "estimate";
  check_keys(node,
             {"y_file", "u_file", "error", "c", "a", "kappa", "k_step",
              "t_max", "t_step", "survival", "x_points"},
             ctx);
  EstimateConfig cfg;
  if (!node.contains("y_file") || !node.at("y_file").is_string()) {
    fail(ctx, "missing key 'y_file' (path to the Y-sample)");
  }
  cfg.y_file = node.at("y_file").get<std::string>();
  if (node.contains("u_file") && !node.at("u_file").is_null()) {
    cfg.u_file = node.at("u_file").get<std::string>();
  }
  if (node.contains("error") && !node.at("error").is_null()) {
    cfg.error = parse_dist(node.at("error"), ctx + ".error");
  }
  cfg.c = get_number_or(node, "c", cfg.c, ctx);
  cfg.a = get_number_or(node, "a", cfg.a, ctx);
  cfg.kappa = get_number_or(node, "kappa", cfg.kappa, ctx);
  cfg.k_step = get_number_or(node, "k_step", cfg.k_step, ctx);
  cfg.t_max = get_number_or(node, "t_max", cfg.t_max, ctx);
  cfg.t_step = get_number_or(node, "t_step", cfg.t_step, ctx);
  if (node.contains("survival")) {
    if (!node.at("survival").is_boolean()) {
      fail(ctx, "'survival' must be a boolean");
    }
    cfg.survival = node.at("survival").get<bool>();
  }
  if (node.contains("x_points")) {
    cfg.x_points = parse_x_points(node.at("x_points"), ctx);
  } else {
    cfg.x_points = linspace(0.01, 8.0, 400);
  }
  return cfg;
}

MellinTableConfig parse_mellin_table(const json& node) {
  const std::string ctx = "mellin-table";
  check_keys(node, {"dist", "c", "t_max", "t_step"}, ctx);
  MellinTableConfig cfg;
  if (!node.contains("dist")) fail(ctx, "missing key 'dist'");
  cfg.dist = parse_dist(node.at("dist"), ctx + ".dist");
  cfg.c = get_number_or(node, "c", cfg.c, ctx);
  cfg.t_max = get_number_or(node, "t_max", cfg.t_max, ctx);
  cfg.t_step = get_number_or(node, "t_step", cfg.t_step, ctx);
  return cfg;
}

}  // namespace mdecon::cli
