#include "mdecon/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace mdecon::oracle {

namespace {

using Complex = std::complex<double>;

//! Classic recursive Simpson refinement with the |S2 - S1|/15 error model.
//! This is the reference integrator; it intentionally shares nothing with
//! the production trapezoid code.
Complex adaptive_panel(const std::function<Complex(double)>& f, double a,
                       double b, Complex fa, Complex fm, Complex fb,
                       Complex whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw std::runtime_error(
        "oracle quadrature: panel did not converge within max_depth");
  }
  return adaptive_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_panel(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a,
                         double b, double tol, int depth) {
  // Integrand support edges sit exactly on panel boundaries, where the
  // integrand may carry its one-sided nonzero value. Sampling that isolated
  // value would defeat the refinement (the panel error then shrinks at the
  // same rate as the halved tolerance), so the two boundary samples are
  // nudged inward by a vanishing fraction of the panel. Recursive panels
  // reuse these samples and only ever evaluate strictly interior nodes.
  const double width = b - a;
  const Complex fa = f(a + 1e-12 * width);
  const Complex fb = f(b - 1e-12 * width);
  const Complex fm = f(0.5 * (a + b));
  const Complex whole = width / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_panel(f, a, b, fa, fm, fb, whole, tol, depth);
}

//! Integrates f over the whole real line: the anchor interval
//! [anchor_lo, anchor_hi] in one adaptive call, then unit chunks marching
//! away from each anchor, truncating a direction once three consecutive
//! chunks fall below the absolute tolerance. Anchors sit on the integrand's
//! potential support corners so that no panel straddles a jump (the
//! tol-halving refinement cannot converge across an interior discontinuity:
//! the panel error and the tolerance then shrink at the same rate).
Complex chunked_line_integral(const std::function<Complex(double)>& f,
                              double anchor_lo, double anchor_hi,
                              const QuadSpec& spec) {
  constexpr int kMaxChunks = 800;
  Complex total = 0.0;
  if (anchor_hi > anchor_lo) {
    total += adaptive_simpson(f, anchor_lo, anchor_hi, spec.abs_tol,
                              spec.max_depth);
  }
  for (int direction : {+1, -1}) {
    const double base = (direction > 0) ? anchor_hi : anchor_lo;
    int quiet = 0;
    for (int chunk = 0; chunk < kMaxChunks && quiet < 3; ++chunk) {
      const double lo =
          (direction > 0) ? base + chunk : base - (chunk + 1);
      const Complex piece =
          adaptive_simpson(f, lo, lo + 1.0, spec.abs_tol, spec.max_depth);
      total += piece;
      quiet = (std::abs(piece) < spec.abs_tol) ? quiet + 1 : 0;
    }
  }
  return total;
}

}  // namespace

std::complex<double> quad_mellin(const std::function<double(double)>& pdf,
                                 double c, double t, const QuadSpec& spec) {
  const double omega = 2.0 * std::numbers::pi * t;
  // x = e^u turns x^{c-1+i2πt} pdf(x) dx into e^{cu} e^{iωu} pdf(e^u) du and
  // splits naturally at x = 1 (u = 0).
  auto integrand = [&](double u) -> Complex {
    const double x = std::exp(u);
    const double envelope = std::exp(c * u) * pdf(x);
    if (envelope == 0.0) return Complex(0.0, 0.0);
    return envelope * Complex(std::cos(omega * u), std::sin(omega * u));
  };
  return chunked_line_integral(integrand, 0.0, 0.0, spec);
}

double quad_mult_convolution(const std::function<double(double)>& pdf_x,
                             const std::function<double(double)>& pdf_u,
                             double y, const QuadSpec& spec) {
  if (!(y > 0.0)) {
    throw std::invalid_argument("quad_mult_convolution: y must be positive");
  }
  // x = e^u turns ∫ f_X(x) f_U(y/x) x^{-1} dx into ∫ f_X(e^u) f_U(y e^{-u}) du.
  // Support edges of the factor densities can only sit at x = 1 (u = 0, e.g.
  // a unit-minimum Pareto or the Beta right endpoint) and, for the error
  // factor, at y/x = 1 (u = ln y); anchoring there keeps every adaptive
  // panel on one smooth piece of the integrand.
  auto integrand = [&](double u) -> Complex {
    const double x = std::exp(u);
    const double fx = pdf_x(x);
    if (fx == 0.0) return Complex(0.0, 0.0);
    return Complex(fx * pdf_u(y / x), 0.0);
  };
  const double log_y = std::log(y);
  return chunked_line_integral(integrand, std::min(0.0, log_y),
                               std::max(0.0, log_y), spec)
      .real();
}

double quad_ise(const CurveEstimate& curve,
                const std::function<double(double)>& truth, double c,
                const QuadSpec& spec) {
  (void)spec;
  const auto& x = curve.x_points;
  if (x.size() < 2) {
    throw std::invalid_argument("quad_ise: curve needs >= 2 points");
  }
  // Composite Simpson at 10x the curve's resolution, with the curve linearly
  // interpolated between its tabulated values.
  auto integrand = [&](std::size_t cell, double xx) {
    const double x0 = x[cell];
    const double x1 = x[cell + 1];
    const double w = (xx - x0) / (x1 - x0);
    const double est =
        (1.0 - w) * curve.values[cell] + w * curve.values[cell + 1];
    const double diff = est - truth(xx);
    return diff * diff * std::pow(xx, 2.0 * c - 1.0);
  };
  double total = 0.0;
  constexpr int kRefine = 10;  // panels per tabulated cell
  for (std::size_t cell = 0; cell + 1 < x.size(); ++cell) {
    const double h = (x[cell + 1] - x[cell]) / kRefine;
    for (int p = 0; p < kRefine; ++p) {
      const double a = x[cell] + p * h;
      const double b = a + h;
      const double m = 0.5 * (a + b);
      total += h / 6.0 *
               (integrand(cell, a) + 4.0 * integrand(cell, m) +
                integrand(cell, b));
    }
  }
  return total;
}

}  // namespace mdecon::oracle
