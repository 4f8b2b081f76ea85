#include "mdecon/empirical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdecon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ThresholdMask::ThresholdMask(TGrid grid, std::vector<unsigned char> included,
                             std::int64_t m, std::int64_t n)
    : grid_(std::move(grid)), included_(std::move(included)), m_(m), n_(n) {
  if (included_.size() != grid_.size()) {
    throw std::invalid_argument("ThresholdMask: flags/grid size mismatch");
  }
  if (m_ < 1 || n_ < 1) {
    throw std::invalid_argument("ThresholdMask: counts must be >= 1");
  }
}

ThresholdMask ThresholdMask::all_true(TGrid grid, std::int64_t m,
                                      std::int64_t n) {
  std::vector<unsigned char> flags(grid.size(), 1);
  return ThresholdMask(std::move(grid), std::move(flags), m, n);
}

MellinFn empirical_mellin(const Sample& sample, double c, const TGrid& grid) {
  const std::size_t n = sample.size();
  const std::size_t nt = grid.half() + 1;

  // Precomputed log-table: observation i contributes r_i e^{i 2π t u_i} with
  // u_i = log Y_i and r_i = Y_i^{c-1}; one complex exponential per
  // (observation, nonnegative grid point), mirrored to negative t.
  std::vector<std::complex<double>> acc(nt, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = std::log(sample.values()[i]);
    const double r = std::exp((c - 1.0) * u);
    const double base = kTwoPi * u;
    for (std::size_t j = 0; j < nt; ++j) {
      const double angle = base * grid.point(grid.half() + j);
      acc[j] += r * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t j = 0; j < nt; ++j) {
    const std::complex<double> v = acc[j] * inv_n;
    values[grid.half() + j] = v;
    values[grid.half() - j] = std::conj(v);
  }
  return MellinFn(grid, std::move(values));
}

double sigma_hat_sq(const Sample& sample, double c) {
  double sum = 0.0;
  for (double y : sample.values()) {
    sum += std::exp(2.0 * (c - 1.0) * std::log(y));
  }
  return 1.0 + sum / static_cast<double>(sample.size());
}

ThresholdMask threshold_mask(const MellinFn& mu_hat, std::int64_t m,
                             std::int64_t n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("threshold_mask: counts must be >= 1");
  }
  const double level = static_cast<double>(m < n ? m : n);
  std::vector<unsigned char> flags(mu_hat.size());
  for (std::size_t j = 0; j < mu_hat.size(); ++j) {
    flags[j] = (level * std::norm(mu_hat.value(j)) >= 1.0) ? 1 : 0;
  }
  return ThresholdMask(mu_hat.grid(), std::move(flags), m, n);
}

MellinFn mx_hat(const MellinFn& my_hat, const MellinFn& mu_hat,
                const ThresholdMask& mask) {
  if (!(my_hat.grid() == mu_hat.grid()) ||
      !(my_hat.grid() == mask.grid())) {
    throw std::invalid_argument("mx_hat: grid mismatch");
  }
  const MellinFn ratio = pointwise_product(my_hat, dagger(mu_hat));
  std::vector<std::complex<double>> values(ratio.size());
  for (std::size_t j = 0; j < ratio.size(); ++j) {
    values[j] = mask.included(j) ? ratio.value(j)
                                 : std::complex<double>(0.0, 0.0);
  }
  return MellinFn(my_hat.grid(), std::move(values));
}

}  // namespace mdecon
