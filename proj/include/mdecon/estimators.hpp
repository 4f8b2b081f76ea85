#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdecon/empirical.hpp"
#include "mdecon/mellin.hpp"

namespace mdecon {

enum class CurveKind {
  density_known,
  density_unknown,
  survival_known,
  survival_unknown,
};

//! A spectral cut-off estimate tabulated on x-points. Survival kinds require
//! c > 1 at construction; values are finite at every point.
struct CurveEstimate {
  std::vector<double> x_points;
  std::vector<double> values;
  double cutoff_k;
  double c;
  CurveKind kind;
};

//! Known-error density estimator: the truncated inverse transform of
//! M̂_Y · M_U† over [-k, k], evaluated at each x.
CurveEstimate density_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                            double cutoff_k, double c,
                            std::span<const double> x_points);

//! Unknown-error density estimator: the truncated inverse transform of the
//! (already masked) plug-in M̂_X over [-k, k].
CurveEstimate density_unknown(const MellinFn& mx_hat_fn, double cutoff_k,
                              double c, std::span<const double> x_points);

//! Known-error survival estimator: the truncated inverse transform taken on
//! the line c-1 of M̂_Y(t) M_U†(t)/(c-1+i2πt); requires c > 1.
CurveEstimate survival_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                             double cutoff_k, double c,
                             std::span<const double> x_points);

//! Unknown-error survival estimator; as survival_known with the masked
//! plug-in transform in place of M̂_Y · M_U†.
CurveEstimate survival_unknown(const MellinFn& mx_hat_fn, double cutoff_k,
                               double c, std::span<const double> x_points);

//! One replication's ingredients of the risk-representation diagnostic for
//! E‖M̂_X,k − M_X‖²_{L²(w)}: the left-hand side and the four right-hand
//! terms, each integrated with the same band-splitting quadrature.
//! Averaging `lhs - variance_term - u_error_term - mask_loss_term` over
//! replications recovers `bias` (which is deterministic).
struct RiskDiagnostic {
  double lhs;             //!< ‖M̂_X,k − M_X‖²_w, this replication
  double bias;            //!< ‖M_X‖²_w outside [-k, k]
  double variance_term;   //!< n⁻¹ ‖V_Y M̂_U† 1_𝔐‖²_w inside [-k, k]
  double u_error_term;    //!< ‖M_X M̂_U† (M_U − M̂_U) 1_𝔐‖²_w inside
  double mask_loss_term;  //!< ‖M_X 1_{𝔐ᶜ}‖²_w inside
};

//! Evaluates the diagnostic on one replication. `vy_sq` tabulates
//! V_Y²(t) = E[Y^{2(c-1)}] − |M_Y(t)|² on the grid and `weight` is the
//! integration weight (constant 1, or t_c for the survival variant).
RiskDiagnostic risk_diagnostic(const MellinFn& my_hat, const MellinFn& mu_hat,
                               const ThresholdMask& mask, const MellinFn& mx,
                               const MellinFn& mu,
                               std::span<const double> vy_sq, double cutoff_k,
                               std::span<const double> weight, std::int64_t n);

}  // namespace mdecon
