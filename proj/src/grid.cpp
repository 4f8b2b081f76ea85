#include "mdecon/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace mdecon {

namespace {

// Relative slack for snapping cutoffs and half-widths onto grid multiples,
// so that k = j*step (up to rounding) selects offset j rather than j+1.
constexpr double kSnapSlack = 1e-9;

}  // namespace

TGrid::TGrid(double t_max, double step) : step_(step) {
  if (!(t_max > 0.0) || !(step > 0.0)) {
    throw std::invalid_argument("TGrid: t_max and step must be positive");
  }
  if (t_max / step < 1.0 - kSnapSlack) {
    throw std::invalid_argument("TGrid: t_max/step must be at least 1");
  }
  half_ = static_cast<std::size_t>(std::ceil(t_max / step - kSnapSlack));
  points_.resize(2 * half_ + 1);
  for (std::size_t j = 0; j < points_.size(); ++j) {
    points_[j] =
        (static_cast<double>(j) - static_cast<double>(half_)) * step_;
  }
}

std::size_t TGrid::cover_offset(double cutoff_k) const {
  if (!(cutoff_k > 0.0)) {
    throw std::invalid_argument("cutoff must be positive");
  }
  const double raw = std::ceil(cutoff_k / step_ - kSnapSlack);
  if (raw < 0.0) return 0;
  const auto offset = static_cast<std::size_t>(raw);
  return offset > half_ ? half_ : offset;
}

TGrid make_tgrid(double t_max, double step) { return TGrid(t_max, step); }

}  // namespace mdecon
