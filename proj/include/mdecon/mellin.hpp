#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mdecon/grid.hpp"

namespace mdecon {

//! A complex-valued function tabulated on a frequency grid.
//!
//! Instances hold Mellin transforms M_c[h](t) = ∫ x^{c-1+i2πt} h(x) dx and
//! derived quantities (empirical transforms, plug-in ratios, ...). Transforms
//! of real densities are conjugate-symmetric, value(-t) = conj(value(t));
//! the invariant is established by the constructors used in practice and
//! checked in tests rather than enforced here.
class MellinFn {
 public:
  MellinFn(TGrid grid, std::vector<std::complex<double>> values);

  const TGrid& grid() const { return grid_; }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::complex<double> value(std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

 private:
  TGrid grid_;
  std::vector<std::complex<double>> values_;
};

//! The weight family v(t) = t_c(t)^a with t_c(t) = ((c-1)^2 + 4π^2 t^2)^{-1},
//! tabulated on a frequency grid. a = 0 yields the constant weight 1.
class WeightFn {
 public:
  WeightFn(TGrid grid, double c, double a);

  const TGrid& grid() const { return grid_; }
  double c() const { return c_; }
  double a() const { return a_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t j) const { return values_[j]; }

 private:
  TGrid grid_;
  double c_;
  double a_;
  std::vector<double> values_;
};

//! Convenience factory for WeightFn.
WeightFn make_weight(TGrid grid, double c, double a);

//! Which part of the grid an integral runs over: the cutoff band [-k, k]
//! (snapped outward to whole grid cells) or its complement within
//! [-t_max, t_max]. The shared band edge carries half weight on both sides,
//! so inside + outside equals the full-grid integral exactly.
enum class Band { inside, outside };

//! Trapezoid approximation of M_c[h](t) on every grid point for a density
//! tabulated on a strictly positive, strictly increasing x-grid. The output
//! is conjugate-symmetric by construction (negative frequencies mirror the
//! positive ones).
MellinFn mellin_numeric(std::span<const double> x_points,
                        std::span<const double> density_values, double c,
                        const TGrid& grid);

//! Trapezoid approximation of the truncated inverse transform
//! ∫_{[-k,k]} x^{-c-i2πt} mfn(t) dt, returning the real part. The cutoff must
//! lie within the grid's support.
double mellin_inverse(const MellinFn& mfn, double cutoff_k, double c,
                      double x);

//! As mellin_inverse, but also reports the (spurious) imaginary part of the
//! integral; for conjugate-symmetric inputs it is a pure rounding residual.
struct InverseValue {
  double value;
  double imag_residual;
};
InverseValue mellin_inverse_with_residual(const MellinFn& mfn, double cutoff_k,
                                          double c, double x);

//! Trapezoid approximation of ∫ |mfn(t)|^2 w(t) dt over the chosen band.
double l2_norm_sq(const MellinFn& mfn, std::span<const double> weight,
                  double cutoff_k, Band band);
double l2_norm_sq(const MellinFn& mfn, const WeightFn& weight, double cutoff_k,
                  Band band);
//! Unweighted variant (w ≡ 1).
double l2_norm_sq(const MellinFn& mfn, double cutoff_k, Band band);

//! Pointwise reciprocal with the zero convention: dagger(m)(t) = 1/m(t) where
//! m(t) != 0 (exact complex comparison) and 0 elsewhere. Total function.
MellinFn dagger(const MellinFn& mfn);

//! Pointwise product of two functions tabulated on the same grid.
MellinFn pointwise_product(const MellinFn& lhs, const MellinFn& rhs);

}  // namespace mdecon
