#pragma once

#include <complex>
#include <functional>

#include "mdecon/estimators.hpp"

namespace mdecon::oracle {

//! Tolerances for the adaptive reference integrators. These integrators are
//! deliberately independent of the production trapezoid code: they exist to
//! cross-check it, so they share no quadrature routines with it.
struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 48;
};

//! Adaptive (interval-halving Simpson) evaluation of the Mellin transform
//! ∫ x^{c-1+i2πt} pdf(x) dx, split at x = 1 and integrated in log-scale with
//! tail truncation once the running tail contribution drops below abs_tol.
//! Throws `std::runtime_error` if a panel fails to converge within
//! max_depth halvings.
std::complex<double> quad_mellin(const std::function<double(double)>& pdf,
                                 double c, double t,
                                 const QuadSpec& spec = QuadSpec());

//! Adaptive evaluation of the multiplicative convolution density
//! (pdf_x ⊛ pdf_u)(y) = ∫ pdf_x(x) pdf_u(y/x) x^{-1} dx at y > 0.
double quad_mult_convolution(const std::function<double(double)>& pdf_x,
                             const std::function<double(double)>& pdf_u,
                             double y, const QuadSpec& spec = QuadSpec());

//! Reference integrated squared error ∫ (curve(x) − truth(x))² x^{2c-1} dx
//! over the curve's x-range, with the curve linearly interpolated and the
//! integral taken by Simpson panels at 10× the curve's resolution.
double quad_ise(const CurveEstimate& curve,
                const std::function<double(double)>& truth, double c,
                const QuadSpec& spec = QuadSpec());

}  // namespace mdecon::oracle
