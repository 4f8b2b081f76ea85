#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mdecon/distributions.hpp"
#include "mdecon/empirical.hpp"
#include "mdecon/estimators.hpp"

using namespace mdecon;

namespace {

constexpr double kPi = std::numbers::pi;

MellinFn constant_fn(const TGrid& grid, std::complex<double> value) {
  return MellinFn(grid, std::vector<std::complex<double>>(grid.size(), value));
}

MellinFn scaled(const MellinFn& m, double alpha) {
  std::vector<std::complex<double>> values = m.values();
  for (auto& v : values) v *= alpha;
  return MellinFn(m.grid(), std::move(values));
}

//! Closed-form Gamma(1,3) survival: e^{-x}(1 + x + x²/2).
double gamma13_survival(double x) {
  return std::exp(-x) * (1.0 + x + 0.5 * x * x);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * double(i) / double(count - 1);
  }
  return out;
}

}  // namespace

TEST_CASE("density_known: zero transform gives the zero curve") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const MellinFn zero = constant_fn(grid, 0.0);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const CurveEstimate est = density_known(zero, mu, 10.0, 0.5, linspace(0.5, 6.0, 12));
  for (double v : est.values) CHECK(v == 0.0);
  CHECK(est.kind == CurveKind::density_known);
  CHECK(est.cutoff_k == 10.0);
}

TEST_CASE("density_known: noiseless large-sample recovery of Gamma(1,3)") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const Sample x = sample(GammaDist(1.0, 3.0), 100000, 321);
  const MellinFn my_hat = empirical_mellin(x, 0.5, grid);
  const MellinFn mu_one = constant_fn(grid, 1.0);  // no noise: M_U ≡ 1
  const auto xs = linspace(0.5, 6.0, 23);
  const CurveEstimate est = density_known(my_hat, mu_one, 10.0, 0.5, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(est.values[i] - pdf(GammaDist(1.0, 3.0), xs[i])) <= 0.02);
  }
}

TEST_CASE("density_known: population plug-in matches the truncated truth") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const DistSpec fx = GammaDist(1.0, 3.0);
  const DistSpec fu = ParetoDist(1.0, 1.0);
  const MellinFn mx = analytic_mellin_fn(fx, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(fu, 0.5, grid);
  const MellinFn my = pointwise_product(mx, mu);  // convolution theorem
  const auto xs = linspace(0.5, 6.0, 23);
  const CurveEstimate est = density_known(my, mu, 10.0, 0.5, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(est.values[i] - mellin_inverse(mx, 10.0, 0.5, xs[i])) <=
          1e-3);
  }
}

TEST_CASE("density_known: cutoff beyond the grid rejected") {
  const TGrid grid = make_tgrid(2.0, 0.01);
  const MellinFn one = constant_fn(grid, 1.0);
  CHECK_THROWS_AS(density_known(one, one, 5.0, 0.5, linspace(1.0, 2.0, 3)),
                  std::invalid_argument);
}

TEST_CASE("density_unknown: all-false mask gives the zero curve") {
  const TGrid grid = make_tgrid(2.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0), 50, 3);
  const Sample u = sample(ParetoDist(1.0, 1.0), 50, 4);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask none(grid, std::vector<unsigned char>(grid.size(), 0), 50, 50);
  const CurveEstimate est =
      density_unknown(mx_hat(my_hat, mu_hat, none), 1.0, 0.5, linspace(0.5, 6.0, 5));
  for (double v : est.values) CHECK(v == 0.0);
}

TEST_CASE("bridging: exact M_U with an all-true mask reproduces known-error") {
  const TGrid grid = make_tgrid(5.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0), 500, 17);
  const auto n = static_cast<std::int64_t>(y.size());
  const auto xs = linspace(0.5, 6.0, 23);

  SUBCASE("density") {
    const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
    const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
    const ThresholdMask all = ThresholdMask::all_true(grid, n, n);
    const CurveEstimate known = density_known(my_hat, mu, 3.0, 0.5, xs);
    const CurveEstimate unknown =
        density_unknown(mx_hat(my_hat, mu, all), 3.0, 0.5, xs);
    CHECK(known.values == unknown.values);  // bit-for-bit
  }

  SUBCASE("survival") {
    const MellinFn my_hat = empirical_mellin(y, 1.5, grid);
    const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 1.5, grid);
    const ThresholdMask all = ThresholdMask::all_true(grid, n, n);
    const CurveEstimate known = survival_known(my_hat, mu, 3.0, 1.5, xs);
    const CurveEstimate unknown =
        survival_unknown(mx_hat(my_hat, mu, all), 3.0, 1.5, xs);
    CHECK(known.values == unknown.values);  // bit-for-bit
  }
}

TEST_CASE("survival_known: population plug-in hits the closed-form survival") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const DistSpec fx = GammaDist(1.0, 3.0);
  const DistSpec fu = ParetoDist(1.0, 1.0);
  // c = 3/2: Pareto moment needs c − 1 < l, fine.
  const MellinFn mx = analytic_mellin_fn(fx, 1.5, grid);
  const MellinFn mu = analytic_mellin_fn(fu, 1.5, grid);
  const MellinFn my = pointwise_product(mx, mu);
  const std::vector<double> xs{1.0};
  const CurveEstimate est = survival_known(my, mu, 10.0, 1.5, xs);
  CHECK(std::abs(est.values[0] - gamma13_survival(1.0)) <= 0.01);
  CHECK(gamma13_survival(1.0) == doctest::Approx(0.919699).epsilon(1e-5));

  const std::vector<double> far{30.0};
  const CurveEstimate tail = survival_known(my, mu, 10.0, 1.5, far);
  CHECK(std::abs(tail.values[0]) <= 0.02);
}

TEST_CASE("survival estimators: c <= 1 rejected") {
  const TGrid grid = make_tgrid(2.0, 0.01);
  const MellinFn one = constant_fn(grid, 1.0);
  CHECK_THROWS_AS(survival_known(one, one, 1.0, 0.5, linspace(1.0, 2.0, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(survival_unknown(one, 1.0, 1.0, linspace(1.0, 2.0, 3)),
                  std::invalid_argument);
}

TEST_CASE("estimators: linear in the Y-transform") {
  const TGrid grid = make_tgrid(5.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0), 300, 23);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const auto xs = linspace(0.5, 6.0, 11);
  const double alpha = -2.75;
  const CurveEstimate base = density_known(my_hat, mu, 3.0, 0.5, xs);
  const CurveEstimate scaled_est = density_known(scaled(my_hat, alpha), mu, 3.0, 0.5, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(scaled_est.values[i] ==
          doctest::Approx(alpha * base.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("survival weight: dividing by (c-1+i2πt) equals the t_c weight") {
  const TGrid grid = make_tgrid(2.0, 0.01);
  const double c = 1.5;
  std::vector<std::complex<double>> g(grid.size()), g_div(grid.size());
  std::vector<double> tc(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid.point(j);
    g[j] = std::complex<double>(std::exp(-0.1 * t * t), 0.3 * t);
    const std::complex<double> denom(c - 1.0, 2.0 * kPi * t);
    g_div[j] = g[j] / denom;
    tc[j] = 1.0 / std::norm(denom);
  }
  const MellinFn gfn(grid, g);
  const MellinFn gdiv(grid, g_div);
  const double lhs = l2_norm_sq(gdiv, 1.5, Band::inside);
  const double rhs = l2_norm_sq(gfn, tc, 1.5, Band::inside);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("risk_diagnostic: exact decomposition in the deterministic limit") {
  const TGrid grid = make_tgrid(4.0, 0.01);
  const DistSpec fx = GammaDist(1.0, 3.0);
  const DistSpec fu = ParetoDist(1.0, 1.0);
  const MellinFn mx = analytic_mellin_fn(fx, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(fu, 0.5, grid);
  const MellinFn my = pointwise_product(mx, mu);
  const ThresholdMask all = ThresholdMask::all_true(grid, 200, 200);
  const std::vector<double> vy_zero(grid.size(), 0.0);
  const std::vector<double> w_one(grid.size(), 1.0);

  // M̂_Y = exact M_Y, M̂_U = exact M_U, no variance: everything but the
  // truncation bias vanishes and the identity is exact.
  const RiskDiagnostic d =
      risk_diagnostic(my, mu, all, mx, mu, vy_zero, 2.0, w_one, 200);
  CHECK(d.variance_term == 0.0);
  CHECK(d.u_error_term <= 1e-25);
  CHECK(d.mask_loss_term == 0.0);
  CHECK(d.lhs == doctest::Approx(d.bias).epsilon(1e-9));
  CHECK(d.bias == doctest::Approx(l2_norm_sq(mx, 2.0, Band::outside)).epsilon(1e-14));
}
