#include "airbeam/rng.hpp"

#include <cmath>
#include <numbers>

namespace airbeam {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

Rng Rng::substream(std::uint64_t master_seed,
                   std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = master_seed;
  (void)splitmix64(h);
  for (std::uint64_t id : path) {
    h ^= splitmix64(h) + id;
    (void)splitmix64(h);
  }
  return Rng(h);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

Real Rng::uniform01() {
  return static_cast<Real>(next_u64() >> 11) * 0x1.0p-53;
}

Real Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is kept away from 0 so the log is finite.
  const Real u1 = 1.0 - uniform01();
  const Real u2 = uniform01();
  const Real radius = std::sqrt(-2.0 * std::log(u1));
  const Real angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::cgaussian() {
  const Real scale = std::numbers::sqrt2 / 2.0;
  const Real re = gaussian();
  const Real im = gaussian();
  return {scale * re, scale * im};
}

}  // namespace airbeam
