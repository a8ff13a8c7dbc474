#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace ehlab {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so seeded runs are
// identical across platforms and standard libraries.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGolden;
    return splitmix64_mix(state_);
  }

  // Uniform in [0, bound), bound > 0 (multiply-shift reduction).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Independent value for (seed, stream, index): one stream per purpose, one
// index per edge or trial.
inline std::uint64_t stream_value(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = splitmix64_mix(seed + kGolden * (stream + 1));
  return splitmix64_mix(z + kGolden * (index + 1));
}

inline double stream_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(stream_value(seed, stream, index) >> 11) * 0x1.0p-53;
}

inline std::uint64_t stream_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                                  std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(stream_value(seed, stream, index)) * bound) >> 64);
}

// Seed for the i-th child of a seeded run (trials, chains).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t child) {
  return stream_value(seed, 0x5eed, child);
}

template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace ehlab
