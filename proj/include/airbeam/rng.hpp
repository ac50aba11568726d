#pragma once

#include "airbeam/types.hpp"

#include <cstdint>
#include <initializer_list>

namespace airbeam {

/// Counter-seeded xoshiro256** stream with its own Gaussian state.
///
/// Substreams are derived by hashing (master seed, path indices) through
/// splitmix64, so trial-level streams are identical no matter which worker
/// thread draws them or in what order. Copying an Rng copies the full state,
/// including the cached Box-Muller spare.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Stream for a nested work item, e.g. substream(seed, {kind, trial}).
  static Rng substream(std::uint64_t master_seed,
                       std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  Real uniform01();

  /// Standard normal (Box-Muller; one spare kept between calls).
  Real gaussian();

  /// Circularly-symmetric complex Gaussian, unit variance per entry
  /// (real and imaginary parts each N(0, 1/2)).
  Complex cgaussian();

 private:
  std::uint64_t state_[4];
  Real spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace airbeam
