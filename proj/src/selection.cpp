#include "mdecon/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdecon {

namespace {

constexpr double kSnapSlack = 1e-9;

//! Shared scan core: given the contrast transform, the penalty weight, the
//! scan range and σ̂², walks k = k_step, 2·k_step, ..., k_n and minimizes
//! contrast + 2 σ̂² pen_k. Ties break to the smallest k.
SelectionResult scan(const MellinFn& contrast_fn, const WeightFn& v,
                     std::span<const double> penalty_weight, int k_n,
                     bool capped, std::int64_t n, double sigma_sq,
                     const PenaltyConfig& cfg) {
  const TGrid& grid = contrast_fn.grid();
  SelectionResult result;
  result.k_n = k_n;
  result.sigma_hat_sq = sigma_sq;
  result.kappa_effective = 2.0 * sigma_sq * cfg.kappa;
  result.capped_at_grid = capped;

  const auto count = static_cast<std::size_t>(
      std::floor(static_cast<double>(k_n) / cfg.k_step + kSnapSlack));
  result.per_k.reserve(count);

  std::size_t best = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    const double k = static_cast<double>(i) * cfg.k_step;
    SelectionRow row;
    row.k = k;
    row.contrast = -l2_norm_sq(contrast_fn, v, k, Band::inside);
    const double delta = delta_k(penalty_weight, grid, k);
    row.penalty = penalty(cfg, k, n, delta, small_delta_k(delta, k));
    row.objective = row.contrast + 2.0 * sigma_sq * row.penalty;
    result.per_k.push_back(row);
    if (row.objective < result.per_k[best].objective) {
      best = result.per_k.size() - 1;
    }
  }
  if (result.per_k.empty()) {
    throw std::invalid_argument("selection: empty cutoff scan (k_step > k_n)");
  }
  result.k_hat = result.per_k[best].k;
  return result;
}

int cap_to_grid(double k_limit, const TGrid& grid, bool* capped) {
  const int grid_cap =
      static_cast<int>(std::floor(grid.t_max() + kSnapSlack));
  if (grid_cap < 1) {
    throw std::invalid_argument("selection: grid must cover |t| <= 1");
  }
  if (k_limit > static_cast<double>(grid_cap)) {
    *capped = true;
    return grid_cap;
  }
  *capped = false;
  return static_cast<int>(k_limit);
}

int kn_scan(double range_bound, std::span<const double> weight,
            const TGrid& grid, bool* capped) {
  const double delta_1 = delta_k(weight, grid, 1.0);
  const int limit = cap_to_grid(range_bound, grid, capped);
  int best = 1;
  for (int k = 1; k <= limit; ++k) {
    const double lhs = static_cast<double>(k) *
                       delta_k(weight, grid, static_cast<double>(k));
    if (lhs <= range_bound * delta_1) best = k;
  }
  // Feasibility may also end before the grid cap; only report capping when
  // the grid, not the inequality, was binding.
  if (*capped && best < limit) *capped = false;
  return best;
}

}  // namespace

PenaltyConfig::PenaltyConfig(Regime regime_, double kappa_, double k_step_)
    : regime(regime_), kappa(kappa_), k_step(k_step_) {
  if (!(kappa >= 0.0)) {
    throw std::invalid_argument("PenaltyConfig: kappa must be >= 0");
  }
  if (!(k_step > 0.0)) {
    throw std::invalid_argument("PenaltyConfig: k_step must be positive");
  }
}

PenaltyConfig PenaltyConfig::with_theory_constant(Regime regime,
                                                  double k_step) {
  return PenaltyConfig(regime, regime == Regime::known ? 48.0 : 24.0, k_step);
}

double delta_k(std::span<const double> weight, const TGrid& grid, double k) {
  if (weight.size() != grid.size()) {
    throw std::invalid_argument("delta_k: weight/grid size mismatch");
  }
  if (!(k > 0.0) || k > grid.t_max() * (1.0 + kSnapSlack) + kSnapSlack) {
    throw std::invalid_argument("delta_k: cutoff outside the grid");
  }
  const std::size_t h = grid.cover_offset(k);
  double best = 0.0;
  for (std::size_t j = grid.half() - h; j <= grid.half() + h; ++j) {
    best = std::max(best, weight[j]);
  }
  return best;
}

double small_delta_k(double delta, double k) {
  if (!(delta >= 0.0)) {
    throw std::invalid_argument("small_delta_k: delta must be nonnegative");
  }
  // The maximum with k+2 keeps the value defined (and equal to 1) even for
  // the degenerate all-zero weights produced by an all-false threshold set.
  return std::log(std::max(delta, k + 2.0)) / std::log(k + 2.0);
}

int kn_known(std::int64_t n, std::span<const double> weight_vu,
             const TGrid& grid) {
  if (n < 1) throw std::invalid_argument("kn_known: n must be >= 1");
  const double nn = static_cast<double>(n);
  bool capped = false;
  return kn_scan(nn * nn, weight_vu, grid, &capped);
}

int kn_unknown(std::int64_t n, std::span<const double> weight_v,
               const TGrid& grid) {
  if (n < 1) throw std::invalid_argument("kn_unknown: n must be >= 1");
  bool capped = false;
  return kn_scan(static_cast<double>(n), weight_v, grid, &capped);
}

double penalty(const PenaltyConfig& cfg, double k, std::int64_t n,
               double delta, double small_delta) {
  if (n < 1) throw std::invalid_argument("penalty: n must be >= 1");
  return cfg.kappa * delta * small_delta * k / static_cast<double>(n);
}

SelectionResult select_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                             const WeightFn& v, double c, std::int64_t n,
                             double sigma_hat_sq_value,
                             const PenaltyConfig& cfg) {
  if (!(my_hat.grid() == mu_exact.grid()) ||
      !(my_hat.grid() == v.grid())) {
    throw std::invalid_argument("select_known: grid mismatch");
  }
  if (v.c() != c) {
    throw std::invalid_argument("select_known: weight built for a different c");
  }
  const MellinFn dag = dagger(mu_exact);
  const MellinFn contrast_fn = pointwise_product(my_hat, dag);

  // Penalty weight v_U = |M_U^dagger|^2 v.
  std::vector<double> vu(dag.size());
  for (std::size_t j = 0; j < dag.size(); ++j) {
    vu[j] = std::norm(dag.value(j)) * v.value(j);
  }

  bool capped = false;
  const double nn = static_cast<double>(n);
  const int k_n = kn_scan(nn * nn, vu, my_hat.grid(), &capped);
  return scan(contrast_fn, v, vu, k_n, capped, n, sigma_hat_sq_value, cfg);
}

SelectionResult select_unknown(const MellinFn& my_hat, const MellinFn& mu_hat,
                               const ThresholdMask& mask, const WeightFn& v,
                               double c, std::int64_t n, std::int64_t m,
                               double sigma_hat_sq_value,
                               const PenaltyConfig& cfg) {
  if (!(my_hat.grid() == mu_hat.grid()) || !(my_hat.grid() == mask.grid()) ||
      !(my_hat.grid() == v.grid())) {
    throw std::invalid_argument("select_unknown: grid mismatch");
  }
  if (v.c() != c) {
    throw std::invalid_argument(
        "select_unknown: weight built for a different c");
  }
  if (mask.m() != m || mask.n() != n) {
    throw std::invalid_argument(
        "select_unknown: mask built for different sample sizes");
  }
  const MellinFn contrast_fn = mx_hat(my_hat, mu_hat, mask);
  const MellinFn dag = dagger(mu_hat);

  // Random penalty weight v_hat = |M_U^dagger 1_M|^2 v.
  std::vector<double> v_hat(dag.size());
  for (std::size_t j = 0; j < dag.size(); ++j) {
    v_hat[j] =
        mask.included(j) ? std::norm(dag.value(j)) * v.value(j) : 0.0;
  }

  bool capped = false;
  const int k_n = kn_scan(static_cast<double>(n),
                          std::span<const double>(v.values()),
                          my_hat.grid(), &capped);
  return scan(contrast_fn, v, v_hat, k_n, capped, n, sigma_hat_sq_value, cfg);
}

}  // namespace mdecon
