#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lie2 {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent streams from one root seed.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream) {
  return mix64(root ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

/// FNV-1a, so suite names map to stable stream ids.
constexpr std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(split_seed(seed, trial));
}

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Seed and size of a batch of independent random trials; trial t always draws from
/// trial_rng(seed, t), so a sub-range reproduces those trials of the full batch.
struct SampleBatch {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t first = 0;

  std::size_t end() const { return first + trials; }
};

}  // namespace lie2
