#pragma once

#include <cstdint>
#include <vector>

#include "mdecon/distributions.hpp"
#include "mdecon/grid.hpp"
#include "mdecon/mellin.hpp"

namespace mdecon {

//! The random frequency set 𝔐 = { t : (m ∧ n) |M̂_U(t)|² ≥ 1 } on which the
//! estimated error transform is large enough to invert stably.
class ThresholdMask {
 public:
  ThresholdMask(TGrid grid, std::vector<unsigned char> included,
                std::int64_t m, std::int64_t n);

  const TGrid& grid() const { return grid_; }
  bool included(std::size_t j) const { return included_[j] != 0; }
  const std::vector<unsigned char>& flags() const { return included_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }

  //! All grid points included (every inversion allowed); convenience for the
  //! known-error bridge.
  static ThresholdMask all_true(TGrid grid, std::int64_t m, std::int64_t n);

 private:
  TGrid grid_;
  std::vector<unsigned char> included_;
  std::int64_t m_, n_;
};

//! Empirical Mellin transform M̂(t) = n⁻¹ Σ_i Y_i^{c-1+i2πt}, evaluated as
//! one complex exponential per (observation, grid point) with a precomputed
//! log-table; conjugate-symmetric by construction.
MellinFn empirical_mellin(const Sample& sample, double c, const TGrid& grid);

//! σ̂² = 1 + n⁻¹ Σ_i Y_i^{2(c-1)}; always ≥ 1.
double sigma_hat_sq(const Sample& sample, double c);

//! Builds 𝔐 from an estimated error transform; the defining inequality is
//! `≥` exactly, so ties are included.
ThresholdMask threshold_mask(const MellinFn& mu_hat, std::int64_t m,
                             std::int64_t n);

//! Plug-in transform M̂_X = M̂_Y · M̂_U† · 1_𝔐, pointwise. Shares the dagger
//! and product operations with the known-error path so that an exact error
//! transform plus an all-true mask reproduces that path bit-for-bit.
MellinFn mx_hat(const MellinFn& my_hat, const MellinFn& mu_hat,
                const ThresholdMask& mask);

}  // namespace mdecon
