#pragma once

#include <cstdint>
#include <random>

namespace mdecon {

//! Random variate primitives with fully specified streams.
//!
//! The engine is std::mt19937_64 (its output sequence is fixed by the C++
//! standard) and every variate is derived from it by an explicit, documented
//! recipe, so samples are bit-identical across platforms and compilers:
//!  - uniform_open: ((raw >> 11) + 0.5) * 2^-53, strictly inside (0, 1);
//!  - normal: Box-Muller on two uniforms, the paired draw is cached;
//!  - gamma: Marsaglia-Tsang squeeze for shape >= 1, boosted by a power of a
//!    uniform for shape < 1.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  //! One raw 64-bit engine word.
  std::uint64_t raw() { return engine_(); }

  //! Uniform draw strictly inside (0, 1).
  double uniform_open();

  //! Standard normal draw.
  double normal();

  //! Gamma(shape, 1) draw; shape must be strictly positive.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

//! Derives an independent-looking child seed from a base seed and a stream
//! index via a SplitMix64-style mix; deterministic and collision-scrambling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace mdecon
