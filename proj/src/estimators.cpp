#include "mdecon/estimators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdecon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

//! Evaluates the truncated inverse transform of `mfn` on the line `line_c`
//! at every x-point; all four estimators funnel through this single path so
//! that identical transform inputs yield bit-identical curves.
CurveEstimate truncated_inverse_curve(const MellinFn& mfn, double cutoff_k,
                                      double line_c, double stored_c,
                                      CurveKind kind,
                                      std::span<const double> x_points) {
  CurveEstimate curve;
  curve.x_points.assign(x_points.begin(), x_points.end());
  curve.values.resize(x_points.size());
  curve.cutoff_k = cutoff_k;
  curve.c = stored_c;
  curve.kind = kind;
  for (std::size_t i = 0; i < x_points.size(); ++i) {
    curve.values[i] = mellin_inverse(mfn, cutoff_k, line_c, x_points[i]);
  }
  return curve;
}

//! g(t) = mfn(t) / (c-1+i2πt), the Mellin transform of the survival
//! function on the line c-1 when mfn transforms the density on the line c.
MellinFn survival_transform(const MellinFn& mfn, double c) {
  std::vector<std::complex<double>> values(mfn.size());
  for (std::size_t j = 0; j < mfn.size(); ++j) {
    const std::complex<double> denom(c - 1.0, kTwoPi * mfn.grid().point(j));
    values[j] = mfn.value(j) / denom;
  }
  return MellinFn(mfn.grid(), std::move(values));
}

void check_survival_c(double c) {
  if (!(c > 1.0)) {
    throw std::invalid_argument("survival estimation requires c > 1");
  }
}

}  // namespace

CurveEstimate density_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                            double cutoff_k, double c,
                            std::span<const double> x_points) {
  const MellinFn plug_in = pointwise_product(my_hat, dagger(mu_exact));
  return truncated_inverse_curve(plug_in, cutoff_k, c, c,
                                 CurveKind::density_known, x_points);
}

CurveEstimate density_unknown(const MellinFn& mx_hat_fn, double cutoff_k,
                              double c, std::span<const double> x_points) {
  return truncated_inverse_curve(mx_hat_fn, cutoff_k, c, c,
                                 CurveKind::density_unknown, x_points);
}

CurveEstimate survival_known(const MellinFn& my_hat, const MellinFn& mu_exact,
                             double cutoff_k, double c,
                             std::span<const double> x_points) {
  check_survival_c(c);
  const MellinFn plug_in = pointwise_product(my_hat, dagger(mu_exact));
  return truncated_inverse_curve(survival_transform(plug_in, c), cutoff_k,
                                 c - 1.0, c, CurveKind::survival_known,
                                 x_points);
}

CurveEstimate survival_unknown(const MellinFn& mx_hat_fn, double cutoff_k,
                               double c, std::span<const double> x_points) {
  check_survival_c(c);
  return truncated_inverse_curve(survival_transform(mx_hat_fn, c), cutoff_k,
                                 c - 1.0, c, CurveKind::survival_unknown,
                                 x_points);
}

RiskDiagnostic risk_diagnostic(const MellinFn& my_hat, const MellinFn& mu_hat,
                               const ThresholdMask& mask, const MellinFn& mx,
                               const MellinFn& mu,
                               std::span<const double> vy_sq, double cutoff_k,
                               std::span<const double> weight,
                               std::int64_t n) {
  const TGrid& grid = my_hat.grid();
  if (!(grid == mu_hat.grid()) || !(grid == mask.grid()) ||
      !(grid == mx.grid()) || !(grid == mu.grid())) {
    throw std::invalid_argument("risk_diagnostic: grid mismatch");
  }
  if (vy_sq.size() != grid.size() || weight.size() != grid.size()) {
    throw std::invalid_argument("risk_diagnostic: table size mismatch");
  }
  if (n < 1) {
    throw std::invalid_argument("risk_diagnostic: n must be >= 1");
  }

  const MellinFn plug_in = mx_hat(my_hat, mu_hat, mask);
  const MellinFn dag = dagger(mu_hat);
  const std::size_t size = grid.size();

  std::vector<std::complex<double>> diff(size), var_amp(size), u_err(size),
      mask_loss(size);
  for (std::size_t j = 0; j < size; ++j) {
    const std::complex<double> dag_masked =
        mask.included(j) ? dag.value(j) : std::complex<double>(0.0, 0.0);
    diff[j] = plug_in.value(j) - mx.value(j);
    var_amp[j] = std::sqrt(std::max(vy_sq[j], 0.0)) * dag_masked;
    u_err[j] = mx.value(j) * dag_masked * (mu.value(j) - mu_hat.value(j));
    mask_loss[j] = mask.included(j) ? std::complex<double>(0.0, 0.0)
                                    : mx.value(j);
  }

  RiskDiagnostic out;
  out.bias = l2_norm_sq(mx, weight, cutoff_k, Band::outside);
  out.lhs = l2_norm_sq(MellinFn(grid, std::move(diff)), weight, cutoff_k,
                       Band::inside) +
            out.bias;
  out.variance_term = l2_norm_sq(MellinFn(grid, std::move(var_amp)), weight,
                                 cutoff_k, Band::inside) /
                      static_cast<double>(n);
  out.u_error_term = l2_norm_sq(MellinFn(grid, std::move(u_err)), weight,
                                cutoff_k, Band::inside);
  out.mask_loss_term = l2_norm_sq(MellinFn(grid, std::move(mask_loss)), weight,
                                  cutoff_k, Band::inside);
  return out;
}

}  // namespace mdecon
