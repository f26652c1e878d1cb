#pragma once

#include <cstdint>

namespace bsyk {

// Counter-based randomness built on the SplitMix64 output function.
// Every draw is a pure function of (key, counter), so streams can be
// consumed in any order (or in parallel) without changing the values.
//
// Stream derivation rule used throughout the project:
//   realization key = derive_stream(master_seed, realization_index)
//   purpose key     = derive_stream(realization key, purpose salt)
//   draw i          = mix of (purpose key, i)

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// i-th output of a SplitMix64 sequence seeded with `key`.
inline std::uint64_t derive_stream(std::uint64_t key, std::uint64_t index) {
  return splitmix_mix(key + (index + 1) * kGoldenGamma);
}

// Purpose salts, XORed into a realization key before stream derivation so
// coupling draws, sparsity masks, shot sampling and noise trajectories
// never alias.
namespace salt {
constexpr std::uint64_t kCoupling = 0x636f75706c696e67ull;  // "coupling"
constexpr std::uint64_t kSparsity = 0x7370617273697479ull;  // "sparsity"
constexpr std::uint64_t kShots = 0x73686f7473000000ull;     // "shots"
constexpr std::uint64_t kNoise = 0x6e6f697365000000ull;     // "noise"
constexpr std::uint64_t kLayout = 0x6c61796f75740000ull;    // "layout"
constexpr std::uint64_t kOrder = 0x6f72646572000000ull;     // "order"
}  // namespace salt

// Uniform double in the open interval (0,1); 53-bit resolution.
inline double u64_to_unit_open(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal quantile, Wichura's AS241 (PPND16).  Deterministic and
// platform-independent; relative accuracy ~1e-16 over (0,1).
double normal_icdf(double p);

// A keyed counter stream.  `at_*` calls are pure functions of the counter;
// the `next_*` calls advance an internal cursor for sequential use.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  CounterRng child(std::uint64_t salt) const {
    return CounterRng(derive_stream(key_, salt));
  }

  std::uint64_t key() const { return key_; }

  std::uint64_t at_u64(std::uint64_t counter) const {
    return derive_stream(key_, counter);
  }
  double at_unit(std::uint64_t counter) const {
    return u64_to_unit_open(at_u64(counter));
  }
  // Inverse-CDF Gaussian: exactly one uniform per draw.
  double at_normal(std::uint64_t counter) const {
    return normal_icdf(at_unit(counter));
  }
  bool at_bernoulli(std::uint64_t counter, double p) const {
    return at_unit(counter) < p;
  }

  std::uint64_t next_u64() { return at_u64(cursor_++); }
  double next_unit() { return u64_to_unit_open(next_u64()); }
  double next_normal() { return normal_icdf(next_unit()); }
  bool next_bernoulli(double p) { return next_unit() < p; }
  // Uniform integer in [0, n) by rejection-free scaling; n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // 128-bit multiply keeps the draw unbiased enough for n << 2^64.
    unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t cursor_ = 0;
};

}  // namespace bsyk
