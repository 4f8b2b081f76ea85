#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mdecon/grid.hpp"
#include "mdecon/mellin.hpp"

namespace mdecon {

//! Gamma(q, p): density q^p/Γ(p) x^{p-1} e^{-qx} on (0, ∞); q is the rate,
//! p the shape.
struct GammaDist {
  GammaDist(double q, double p);
  double q, p;
};

//! Weibull(s, k): density s k (sx)^{k-1} exp(-(sx)^k) on (0, ∞).
struct WeibullDist {
  WeibullDist(double s, double k);
  double s, k;
};

//! Beta(a, b): density x^{a-1}(1-x)^{b-1}/B(a,b) on (0, 1).
struct BetaDist {
  BetaDist(double a, double b);
  double a, b;
};

//! LogNormal(mu, sigma_sq): density of exp(mu + sigma Z), Z standard normal.
struct LogNormalDist {
  LogNormalDist(double mu, double sigma_sq);
  double mu, sigma_sq;
};

//! Pareto(l, x_min): density l x_min^l / x^{l+1} on [x_min, ∞).
struct ParetoDist {
  ParetoDist(double l, double x_min);
  double l, x_min;
};

//! Closed-choice distribution specification for targets and errors.
using DistSpec =
    std::variant<GammaDist, WeibullDist, BetaDist, LogNormalDist, ParetoDist>;

//! A sample of strictly positive observations.
class Sample {
 public:
  //! Validates positivity; throws `std::invalid_argument` on empty input or
  //! any value <= 0.
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

//! Short lower-case family name ("gamma", "weibull", ...), used by the CLI
//! and in messages.
std::string dist_name(const DistSpec& dist);

//! n i.i.d. draws; deterministic given the seed.
Sample sample(const DistSpec& dist, std::int64_t n, std::uint64_t seed);

//! n i.i.d. products X·U of independent draws from the two families, drawn
//! pairwise from one seeded stream.
Sample sample_product(const DistSpec& dist_x, const DistSpec& dist_u,
                      std::int64_t n, std::uint64_t seed);

//! Density value at x > 0; zero outside the support (and, for Beta, at the
//! endpoints {0, 1} themselves).
double pdf(const DistSpec& dist, double x);

//! Closed-form Mellin transform E[X^{c-1+i2πt}], z = c-1+i2πt:
//!   Gamma:     q^{-z} Γ(p+z)/Γ(p)        (requires p+c-1 > 0)
//!   Weibull:   s^{-z} Γ(1+z/k)           (requires 1+(c-1)/k > 0)
//!   Beta:      B(a+z, b)/B(a, b)         (requires a+c-1 > 0)
//!   LogNormal: exp(mu z + sigma_sq z^2/2)
//!   Pareto:    l x_min^z/(l-z)           (requires c-1 < l)
//! Throws `std::domain_error` when the moment does not exist.
std::complex<double> analytic_mellin(const DistSpec& dist, double c, double t);

//! analytic_mellin tabulated on a whole grid (conjugate-symmetric).
MellinFn analytic_mellin_fn(const DistSpec& dist, double c, const TGrid& grid);

//! Family-specific default x-grid for numeric transforms of the pdf: wide
//! enough that the truncated tails contribute < 1e-4 to Mellin integrals for
//! c in [1/2, 3/2], and fine enough for oscillations up to |t| = 5.
std::vector<double> default_x_grid(const DistSpec& dist);

}  // namespace mdecon
