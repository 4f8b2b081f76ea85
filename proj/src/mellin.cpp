#include "mdecon/mellin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdecon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSnapSlack = 1e-9;

void check_same_grid(const TGrid& a, const TGrid& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
  }
}

void check_cutoff(const TGrid& grid, double cutoff_k) {
  if (!(cutoff_k > 0.0)) {
    throw std::invalid_argument("cutoff must be positive");
  }
  if (cutoff_k > grid.t_max() * (1.0 + kSnapSlack) + kSnapSlack) {
    throw std::invalid_argument("cutoff exceeds the grid's t_max");
  }
}

}  // namespace

MellinFn::MellinFn(TGrid grid, std::vector<std::complex<double>> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("MellinFn: values/grid size mismatch");
  }
}

WeightFn::WeightFn(TGrid grid, double c, double a)
    : grid_(std::move(grid)), c_(c), a_(a) {
  if (a < 0.0) {
    throw std::invalid_argument("WeightFn: exponent a must be nonnegative");
  }
  if (a > 0.0 && c == 1.0) {
    throw std::invalid_argument(
        "WeightFn: a positive exponent requires c != 1 (t_c(0) diverges)");
  }
  values_.resize(grid_.size());
  const double cm1_sq = (c - 1.0) * (c - 1.0);
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (a == 0.0) {
      values_[j] = 1.0;
    } else {
      const double t = grid_.point(j);
      const double tc = 1.0 / (cm1_sq + kTwoPi * kTwoPi * t * t);
      values_[j] = std::pow(tc, a);
    }
  }
}

WeightFn make_weight(TGrid grid, double c, double a) {
  return WeightFn(std::move(grid), c, a);
}

MellinFn mellin_numeric(std::span<const double> x_points,
                        std::span<const double> density_values, double c,
                        const TGrid& grid) {
  const std::size_t nx = x_points.size();
  if (nx < 2 || density_values.size() != nx) {
    throw std::invalid_argument(
        "mellin_numeric: need >= 2 x-points with matching density values");
  }
  for (std::size_t i = 0; i < nx; ++i) {
    if (!(x_points[i] > 0.0)) {
      throw std::invalid_argument("mellin_numeric: x-grid must be positive");
    }
    if (i + 1 < nx && !(x_points[i + 1] > x_points[i])) {
      throw std::invalid_argument(
          "mellin_numeric: x-grid must be strictly increasing");
    }
  }

  // Trapezoid mass per abscissa, folded into g_i = w_i f(x_i) x_i^{c-1}.
  const std::size_t nt = grid.half() + 1;
  std::vector<std::complex<double>> acc(nt, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    const double left = (i == 0) ? x_points[0] : x_points[i - 1];
    const double right = (i + 1 == nx) ? x_points[nx - 1] : x_points[i + 1];
    const double w = 0.5 * (right - left);
    const double u = std::log(x_points[i]);
    const double g = w * density_values[i] * std::exp((c - 1.0) * u);
    if (g == 0.0) continue;
    const double base = kTwoPi * u;
    for (std::size_t j = 0; j < nt; ++j) {
      const double angle = base * grid.point(grid.half() + j);
      acc[j] += g * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }

  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t j = 0; j < nt; ++j) {
    values[grid.half() + j] = acc[j];
    values[grid.half() - j] = std::conj(acc[j]);
  }
  return MellinFn(grid, std::move(values));
}

InverseValue mellin_inverse_with_residual(const MellinFn& mfn, double cutoff_k,
                                          double c, double x) {
  check_cutoff(mfn.grid(), cutoff_k);
  if (!(x > 0.0)) {
    throw std::invalid_argument("mellin_inverse: x must be positive");
  }
  const TGrid& grid = mfn.grid();
  const std::size_t h = grid.cover_offset(cutoff_k);
  if (h == 0) return {0.0, 0.0};

  const double u = std::log(x);
  std::complex<double> acc = 0.0;
  for (std::size_t j = grid.half() - h; j <= grid.half() + h; ++j) {
    const double w =
        (j == grid.half() - h || j == grid.half() + h) ? 0.5 : 1.0;
    const double angle = -kTwoPi * grid.point(j) * u;
    acc += w * mfn.value(j) *
           std::complex<double>(std::cos(angle), std::sin(angle));
  }
  const double scale = grid.step() * std::exp(-c * u);
  return {scale * acc.real(), scale * acc.imag()};
}

double mellin_inverse(const MellinFn& mfn, double cutoff_k, double c,
                      double x) {
  return mellin_inverse_with_residual(mfn, cutoff_k, c, x).value;
}

double l2_norm_sq(const MellinFn& mfn, std::span<const double> weight,
                  double cutoff_k, Band band) {
  if (weight.size() != mfn.size()) {
    throw std::invalid_argument("l2_norm_sq: weight/grid size mismatch");
  }
  check_cutoff(mfn.grid(), cutoff_k);
  const TGrid& grid = mfn.grid();
  const std::size_t h = grid.cover_offset(cutoff_k);
  const std::size_t mid = grid.half();

  double sum = 0.0;
  if (band == Band::inside) {
    if (h == 0) return 0.0;
    for (std::size_t j = mid - h; j <= mid + h; ++j) {
      const double w = (j == mid - h || j == mid + h) ? 0.5 : 1.0;
      sum += w * std::norm(mfn.value(j)) * weight[j];
    }
  } else {
    if (h >= mid) return 0.0;
    for (std::size_t j = 0; j <= mid - h; ++j) {
      const double w = (j == 0 || j == mid - h) ? 0.5 : 1.0;
      sum += w * std::norm(mfn.value(j)) * weight[j];
    }
    for (std::size_t j = mid + h; j < grid.size(); ++j) {
      const double w = (j == mid + h || j + 1 == grid.size()) ? 0.5 : 1.0;
      sum += w * std::norm(mfn.value(j)) * weight[j];
    }
  }
  return grid.step() * sum;
}

double l2_norm_sq(const MellinFn& mfn, const WeightFn& weight, double cutoff_k,
                  Band band) {
  check_same_grid(mfn.grid(), weight.grid(), "l2_norm_sq");
  return l2_norm_sq(mfn, std::span<const double>(weight.values()), cutoff_k,
                    band);
}

double l2_norm_sq(const MellinFn& mfn, double cutoff_k, Band band) {
  const std::vector<double> ones(mfn.size(), 1.0);
  return l2_norm_sq(mfn, std::span<const double>(ones), cutoff_k, band);
}

MellinFn dagger(const MellinFn& mfn) {
  std::vector<std::complex<double>> values(mfn.size());
  const std::complex<double> zero(0.0, 0.0);
  for (std::size_t j = 0; j < mfn.size(); ++j) {
    const std::complex<double> v = mfn.value(j);
    values[j] = (v == zero) ? zero : 1.0 / v;
  }
  return MellinFn(mfn.grid(), std::move(values));
}

MellinFn pointwise_product(const MellinFn& lhs, const MellinFn& rhs) {
  check_same_grid(lhs.grid(), rhs.grid(), "pointwise_product");
  std::vector<std::complex<double>> values(lhs.size());
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    values[j] = lhs.value(j) * rhs.value(j);
  }
  return MellinFn(lhs.grid(), std::move(values));
}

}  // namespace mdecon
