#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace vclab {

// Deterministic splitmix64 stream. Used instead of std::mt19937 + distributions
// so that seeded runs are reproducible across standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // warm up so nearby seeds diverge immediately
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, bound), bound >= 1, unbiased via rejection
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // uniform in (0, 1]
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

  bool bernoulli(double p) { return uniform01() <= p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Keyed derivation: independent stream per (seed, key...). Children of
// distinct keys never collide in practice; used for per-vertex tapes,
// per-trial seeds and similar.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t s = seed ^ 0x5851f42d4c957f2dULL;
  splitmix64(s);
  s ^= key * 0x2545f4914f6cdd1dULL;
  splitmix64(s);
  return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2) {
  return derive_seed(derive_seed(seed, k1), k2);
}

// 256-bit random tape
using Tape = std::array<std::uint64_t, 4>;

inline Tape make_tape(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t s = derive_seed(seed, key);
  Tape t;
  for (auto& w : t) w = splitmix64(s);
  return t;
}

inline bool tape_bit(const Tape& t, unsigned i) {
  return (t[(i / 64) % 4] >> (i % 64)) & 1ULL;
}

}  // namespace vclab
