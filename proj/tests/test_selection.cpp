#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "mdecon/distributions.hpp"
#include "mdecon/empirical.hpp"
#include "mdecon/rng.hpp"
#include "mdecon/selection.hpp"

using namespace mdecon;

namespace {

constexpr double kPi = std::numbers::pi;

//! Modal k̂ of select_known over 100 seeded replications of the
//! Gamma(1,3)×Pareto(1,1), n = 1000, kappa = 0.6 configuration. Regression
//! baseline: pinned after the first verified run of this implementation.
constexpr double kPinnedModalKHat = 1.0;

std::vector<double> pareto_vu_weight(const TGrid& grid) {
  // |M_U†|² for Pareto(1,1) at c = 1/2: 9/4 + 4π²t²
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const MellinFn dag = dagger(mu);
  std::vector<double> w(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) w[j] = std::norm(dag.value(j));
  return w;
}

}  // namespace

TEST_CASE("delta_k: flat, Pareto, and decreasing weights") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const std::vector<double> flat(grid.size(), 1.0);
  CHECK(delta_k(flat, grid, 1.0) == 1.0);
  CHECK(delta_k(flat, grid, 7.0) == 1.0);

  const std::vector<double> vu = pareto_vu_weight(grid);
  CHECK(delta_k(vu, grid, 1.0) ==
        doctest::Approx(2.25 + 4.0 * kPi * kPi).epsilon(1e-12));

  std::vector<double> decreasing(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    decreasing[j] = std::exp(-std::abs(grid.point(j)));
  }
  CHECK(delta_k(decreasing, grid, 1.0) == 1.0);   // attained at t = 0
  CHECK(delta_k(decreasing, grid, 5.0) == 1.0);   // constant in k

  CHECK_THROWS_AS(delta_k(flat, grid, 50.0), std::invalid_argument);
}

TEST_CASE("delta_k: nondecreasing in k") {
  const TGrid grid = make_tgrid(8.0, 0.01);
  const std::vector<double> vu = pareto_vu_weight(grid);
  double prev = 0.0;
  for (double k = 1.0; k <= 8.0; k += 1.0) {
    const double cur = delta_k(vu, grid, k);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("small_delta_k: formula values and the >= 1 floor") {
  CHECK(small_delta_k(1.0, 5.0) == 1.0);
  const double delta = 2.25 + 4.0 * kPi * kPi;  // ≈ 41.728
  CHECK(small_delta_k(delta, 1.0) ==
        doctest::Approx(std::log(delta) / std::log(3.0)).epsilon(1e-12));
  CHECK(small_delta_k(delta, 1.0) == doctest::Approx(3.396).epsilon(1e-3));
  CHECK(small_delta_k(5.0, 3.0) == 1.0);  // Δ = k+2 exactly
  for (double k : {1.0, 2.0, 10.0}) {
    for (double d : {0.5, 1.0, 3.0, 100.0}) {
      CHECK(small_delta_k(d, k) >= 1.0);
    }
  }
}

TEST_CASE("kn_known: flat weight reaches n² until the grid caps it") {
  const TGrid grid = make_tgrid(20.0, 0.1);
  const std::vector<double> flat(grid.size(), 1.0);
  CHECK(kn_known(3, flat, grid) == 9);    // n² = 9 below the cap
  CHECK(kn_known(10, flat, grid) == 20);  // capped at t_max
  CHECK(kn_known(1, flat, grid) == 1);
}

TEST_CASE("kn_known: Pareto weight obeys the defining inequality") {
  const TGrid grid = make_tgrid(12.0, 0.01);
  const std::vector<double> vu = pareto_vu_weight(grid);
  const int kn = kn_known(10, vu, grid);
  // integer scan of k(9/4+4π²k²) ≤ 100·(9/4+4π²)
  const double budget = 100.0 * (2.25 + 4.0 * kPi * kPi);
  auto lhs = [](double k) { return k * (2.25 + 4.0 * kPi * kPi * k * k); };
  CHECK(lhs(kn) <= budget);
  CHECK(lhs(kn + 1) > budget);
  CHECK(kn == 4);
}

TEST_CASE("kn_unknown: flat and t_c weights reach n") {
  const TGrid grid = make_tgrid(20.0, 0.1);
  const std::vector<double> flat(grid.size(), 1.0);
  CHECK(kn_unknown(5, flat, grid) == 5);
  CHECK(kn_unknown(1, flat, grid) == 1);
  CHECK(kn_unknown(100, flat, grid) == 20);  // grid cap

  const WeightFn tc = make_weight(grid, 0.5, 1.0);  // decreasing in |t|
  CHECK(kn_unknown(5, tc.values(), grid) == 5);
}

TEST_CASE("penalty: theory constant, degenerate kappa, monotonicity") {
  const double delta = 2.25 + 4.0 * kPi * kPi;
  const double sdelta = std::log(delta) / std::log(3.0);
  const PenaltyConfig theory = PenaltyConfig::with_theory_constant(Regime::known);
  CHECK(theory.kappa == 48.0);
  CHECK(penalty(theory, 1.0, 1000, delta, sdelta) ==
        doctest::Approx(6.802).epsilon(1e-3));
  CHECK(PenaltyConfig::with_theory_constant(Regime::unknown).kappa == 24.0);

  const PenaltyConfig zero(Regime::known, 0.0);
  CHECK(penalty(zero, 3.0, 100, delta, sdelta) == 0.0);

  const PenaltyConfig cfg(Regime::unknown, 0.3);
  double prev = 0.0;
  for (double k = 1.0; k <= 10.0; k += 1.0) {
    const double p = penalty(cfg, k, 500, 1.0, 1.0);  // flat Δ·δ
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("penalty config: validation") {
  CHECK_THROWS_AS(PenaltyConfig(Regime::known, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(PenaltyConfig(Regime::known, 0.3, 0.0), std::invalid_argument);
  CHECK_NOTHROW(PenaltyConfig(Regime::known, 0.0));  // degenerate but legal
}

TEST_CASE("select_known: degenerate penalties hit the scan ends") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  1000, 2024);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const double sigma = sigma_hat_sq(y, 0.5);

  const SelectionResult free_fit = select_known(
      my_hat, mu, v, 0.5, 1000, sigma, PenaltyConfig(Regime::known, 0.0));
  CHECK(free_fit.k_hat == doctest::Approx(double(free_fit.k_n)));

  const SelectionResult clamped = select_known(
      my_hat, mu, v, 0.5, 1000, sigma, PenaltyConfig(Regime::known, 1e6));
  CHECK(clamped.k_hat == doctest::Approx(1.0));

  CHECK(free_fit.sigma_hat_sq == sigma);
  CHECK(free_fit.kappa_effective == 0.0);
  CHECK(clamped.kappa_effective == doctest::Approx(2.0 * sigma * 1e6));
}

TEST_CASE("select_known: contrast nonincreasing, scan total, minimum attained") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  500, 77);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const SelectionResult sel =
      select_known(my_hat, mu, v, 0.5, 500, sigma_hat_sq(y, 0.5),
                   PenaltyConfig(Regime::known, 0.6));

  REQUIRE(!sel.per_k.empty());
  CHECK(sel.per_k.size() == static_cast<std::size_t>(sel.k_n));
  double best = 1e300;
  for (std::size_t i = 0; i < sel.per_k.size(); ++i) {
    CHECK(sel.per_k[i].k == doctest::Approx(double(i + 1)));
    if (i > 0) CHECK(sel.per_k[i].contrast <= sel.per_k[i - 1].contrast + 1e-15);
    best = std::min(best, sel.per_k[i].objective);
  }
  // objective == contrast + 2σ̂²·penalty, exactly as stored
  for (const SelectionRow& row : sel.per_k) {
    CHECK(row.objective ==
          doctest::Approx(row.contrast + 2.0 * sel.sigma_hat_sq * row.penalty)
              .epsilon(1e-12));
  }
  // k̂ attains the minimum, smallest-k tie-break
  for (const SelectionRow& row : sel.per_k) {
    if (row.k < sel.k_hat) CHECK(row.objective > best);
  }
  CHECK(sel.k_hat >= 1.0);
  CHECK(sel.k_hat <= double(sel.k_n));
}

TEST_CASE("select_known: modal k-hat regression baseline") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const PenaltyConfig cfg(Regime::known, 0.6);
  std::map<double, int> histogram;
  for (int r = 0; r < 100; ++r) {
    const Sample y =
        sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0), 1000,
                       derive_seed(1234, static_cast<std::uint64_t>(r)));
    const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
    const SelectionResult sel =
        select_known(my_hat, mu, v, 0.5, 1000, sigma_hat_sq(y, 0.5), cfg);
    histogram[sel.k_hat] += 1;
  }
  double modal = 0.0;
  int modal_count = 0;
  int spread = 0;
  for (const auto& [k, count] : histogram) {
    spread += 1;
    if (count > modal_count) {
      modal = k;
      modal_count = count;
    }
  }
  INFO("modal k-hat: ", modal, " with count ", modal_count, " over ", spread,
       " distinct values");
  CHECK(modal == kPinnedModalKHat);
  CHECK(spread <= 6);  // concentrated on a small range
}

TEST_CASE("select_unknown: all-false mask degenerates to the smallest k") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  200, 9);
  const Sample u = sample(ParetoDist(1.0, 1.0), 200, 10);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask none(grid, std::vector<unsigned char>(grid.size(), 0),
                           200, 200);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const SelectionResult sel =
      select_unknown(my_hat, mu_hat, none, v, 0.5, 200, 200,
                     sigma_hat_sq(y, 0.5), PenaltyConfig(Regime::unknown, 0.3));
  CHECK(sel.k_hat == doctest::Approx(1.0));
  for (const SelectionRow& row : sel.per_k) CHECK(row.contrast == 0.0);
}

TEST_CASE("select_unknown: exact-M_U bridge reproduces known contrasts") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  400, 41);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu = analytic_mellin_fn(ParetoDist(1.0, 1.0), 0.5, grid);
  const ThresholdMask all = ThresholdMask::all_true(grid, 400, 400);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const double sigma = sigma_hat_sq(y, 0.5);

  const SelectionResult known = select_known(
      my_hat, mu, v, 0.5, 400, sigma, PenaltyConfig(Regime::known, 0.6));
  const SelectionResult unknown =
      select_unknown(my_hat, mu, all, v, 0.5, 400, 400, sigma,
                     PenaltyConfig(Regime::unknown, 0.3));
  const std::size_t shared = std::min(known.per_k.size(), unknown.per_k.size());
  REQUIRE(shared >= 1);
  for (std::size_t i = 0; i < shared; ++i) {
    CHECK(known.per_k[i].contrast == unknown.per_k[i].contrast);  // bit-for-bit
  }
}

TEST_CASE("select_unknown: k-hat nonincreasing in kappa") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  1000, 314);
  const Sample u = sample(ParetoDist(1.0, 1.0), 1000, 315);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask mask = threshold_mask(mu_hat, 1000, 1000);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const double sigma = sigma_hat_sq(y, 0.5);

  double prev_k_hat = 1e300;
  for (double kappa : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    const SelectionResult sel =
        select_unknown(my_hat, mu_hat, mask, v, 0.5, 1000, 1000, sigma,
                       PenaltyConfig(Regime::unknown, kappa));
    CHECK(sel.k_hat <= prev_k_hat);
    prev_k_hat = sel.k_hat;
  }
}

TEST_CASE("select_unknown: scaling sigma as-if larger never increases k-hat") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  500, 161);
  const Sample u = sample(ParetoDist(1.0, 1.0), 500, 162);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask mask = threshold_mask(mu_hat, 500, 500);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const double sigma = sigma_hat_sq(y, 0.5);
  const PenaltyConfig cfg(Regime::unknown, 0.3);

  double prev_k_hat = 1e300;
  for (double lambda : {1.0, 2.0, 5.0, 20.0}) {
    const SelectionResult sel = select_unknown(my_hat, mu_hat, mask, v, 0.5,
                                               500, 500, lambda * sigma, cfg);
    CHECK(sel.k_hat <= prev_k_hat);
    prev_k_hat = sel.k_hat;
  }
}

TEST_CASE("select_unknown: sub-integer scan visits k_step multiples") {
  const TGrid grid = make_tgrid(20.0, 0.01);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  200, 55);
  const Sample u = sample(ParetoDist(1.0, 1.0), 200, 56);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask mask = threshold_mask(mu_hat, 200, 200);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  const SelectionResult sel =
      select_unknown(my_hat, mu_hat, mask, v, 0.5, 200, 200,
                     sigma_hat_sq(y, 0.5),
                     PenaltyConfig(Regime::unknown, 0.3, 0.5));
  REQUIRE(!sel.per_k.empty());
  for (std::size_t i = 0; i < sel.per_k.size(); ++i) {
    CHECK(sel.per_k[i].k == doctest::Approx(0.5 * double(i + 1)).epsilon(1e-12));
  }
  CHECK(sel.per_k.back().k <= double(sel.k_n) + 1e-12);
  CHECK(sel.k_hat >= 0.5);
}

TEST_CASE("select_unknown: count mismatches rejected") {
  const TGrid grid = make_tgrid(5.0, 0.1);
  const Sample y = sample_product(GammaDist(1.0, 3.0), ParetoDist(1.0, 1.0),
                                  50, 1);
  const Sample u = sample(ParetoDist(1.0, 1.0), 60, 2);
  const MellinFn my_hat = empirical_mellin(y, 0.5, grid);
  const MellinFn mu_hat = empirical_mellin(u, 0.5, grid);
  const ThresholdMask mask = threshold_mask(mu_hat, 60, 50);
  const WeightFn v = make_weight(grid, 0.5, 0.0);
  CHECK_THROWS_AS(select_unknown(my_hat, mu_hat, mask, v, 0.5, 50, 99, 1.5,
                                 PenaltyConfig(Regime::unknown, 0.3)),
                  std::invalid_argument);
}
