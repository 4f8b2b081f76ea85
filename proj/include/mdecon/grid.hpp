#pragma once

#include <cstddef>
#include <vector>

namespace mdecon {

//! A symmetric, uniformly spaced frequency grid containing t = 0.
//!
//! The grid discretizes the frequency line on which Mellin transforms are
//! tabulated. It always holds an odd number of points
//!   -t_max, ..., -step, 0, step, ..., t_max
//! with constant spacing `step`; a requested half-width that is not an
//! integer multiple of `step` is snapped up to the next multiple.
class TGrid {
 public:
  //! Constructs a grid covering [-t_max, t_max]; throws
  //! `std::invalid_argument` unless both arguments are strictly positive and
  //! t_max/step >= 1.
  TGrid(double t_max, double step);

  double t_max() const { return points_.back(); }
  double step() const { return step_; }

  //! Total number of grid points (always odd).
  std::size_t size() const { return points_.size(); }

  //! Index of t = 0, equal to the number of strictly positive points.
  std::size_t half() const { return half_; }

  double point(std::size_t j) const { return points_[j]; }
  const std::vector<double>& points() const { return points_; }

  //! Smallest index offset h such that h*step covers the cutoff, i.e. the
  //! points with indices half()-h ... half()+h span [-k, k]. The offset is
  //! clamped to half(); cutoffs must be positive and within t_max (callers
  //! validate the latter where the contract demands it).
  std::size_t cover_offset(double cutoff_k) const;

  //! Grids compare equal when they tabulate the same points.
  bool operator==(const TGrid& other) const {
    return half_ == other.half_ && step_ == other.step_;
  }

 private:
  double step_;
  std::size_t half_;
  std::vector<double> points_;
};

//! Builds a symmetric frequency grid; see TGrid's constructor.
TGrid make_tgrid(double t_max, double step);

}  // namespace mdecon
