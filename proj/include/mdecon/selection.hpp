#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdecon/empirical.hpp"
#include "mdecon/mellin.hpp"

namespace mdecon {

enum class Regime { known, unknown };

//! Penalty configuration for the data-driven cutoff choice.
//!
//! The per-cutoff penalty is pen_k = kappa · Δ_k · δ_k · k / n and the
//! objective adds 2 σ̂² pen_k to the contrast, so the full multiplier in
//! front of Δ_k δ_k k/n is kappa_effective = 2 σ̂² kappa (exposed in
//! SelectionResult so that constants stated under other parameterizations
//! can be mapped onto this convention).
//!
//! `kappa` defaults to the regime's theory constant (48 known / 24 unknown),
//! which is far too conservative in practice; simulation presets override it.
//! `k_step` spaces the cutoff scan k = k_step, 2·k_step, ..., k_n; the
//! default 1.0 scans integers, presets refine to 0.1.
struct PenaltyConfig {
  PenaltyConfig(Regime regime, double kappa, double k_step = 1.0);

  //! kappa = the regime's theory constant.
  static PenaltyConfig with_theory_constant(Regime regime, double k_step = 1.0);

  double theory_constant() const { return regime == Regime::known ? 48.0 : 24.0; }

  Regime regime;
  double kappa;
  double k_step;
};

struct SelectionRow {
  double k;
  double contrast;   //!< −‖M̂_X,k‖²_{L²(v)}
  double penalty;    //!< kappa Δ_k δ_k k / n
  double objective;  //!< contrast + 2 σ̂² penalty
};

//! Outcome of the penalized cutoff scan. k_hat attains the smallest
//! objective; ties break to the smallest k; every scanned k appears in
//! per_k exactly once, in increasing order.
struct SelectionResult {
  double k_hat;
  int k_n;
  double sigma_hat_sq;
  double kappa_effective;  //!< 2 σ̂² kappa
  bool capped_at_grid;     //!< k_n was limited by the grid's t_max
  std::vector<SelectionRow> per_k;
};

//! Δ_k = max of the tabulated weight over grid points in [-k, k].
double delta_k(std::span<const double> weight, const TGrid& grid, double k);

//! δ_k = log(Δ ∨ (k+2)) / log(k+2); always ≥ 1.
double small_delta_k(double delta, double k);

//! Known-error maximal cutoff k_n = max{ k ∈ ⟦n²⟧ : k Δ_k ≤ n² Δ_1 } for the
//! weight v_U, additionally capped at the grid's t_max.
int kn_known(std::int64_t n, std::span<const double> weight_vu,
             const TGrid& grid);

//! Unknown-error maximal cutoff k_n = max{ k ∈ ⟦n⟧ : k Δ_k ≤ n Δ_1 } for the
//! weight v, additionally capped at the grid's t_max.
int kn_unknown(std::int64_t n, std::span<const double> weight_v,
               const TGrid& grid);

//! pen_k = kappa · delta · small_delta · k / n.
double penalty(const PenaltyConfig& cfg, double k, std::int64_t n,
               double delta, double small_delta);

//! Known-error selection: scans k = k_step, ..., k_n minimizing
//! −‖M̂_Y M_U†‖²_{L²(v), [-k,k]} + 2 σ̂² pen_k with penalty weight
//! v_U = |M_U†|² v.
SelectionResult select_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                             const WeightFn& v, double c, std::int64_t n,
                             double sigma_hat_sq, const PenaltyConfig& cfg);

//! Unknown-error selection: contrast from the masked plug-in M̂_X in
//! L²(v), penalty weight v̂ = |M̂_U† 1_𝔐|² v, cutoff range from kn_unknown
//! with weight v.
SelectionResult select_unknown(const MellinFn& my_hat, const MellinFn& mu_hat,
                               const ThresholdMask& mask, const WeightFn& v,
                               double c, std::int64_t n, std::int64_t m,
                               double sigma_hat_sq, const PenaltyConfig& cfg);

}  // namespace mdecon
