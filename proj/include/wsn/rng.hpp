#pragma once

#include <cstdint>
#include <string_view>

namespace wsn {

// Deterministic splitmix64 generator. We avoid <random> distributions so that
// identical seeds produce identical runs on every platform/toolchain.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0,n), n > 0
  uint64_t below(uint64_t n) {
    // Lemire's multiply-shift; bias is negligible for simulation use but we
    // reject to keep draws exactly uniform.
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = -n % n;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

 private:
  uint64_t state_;
};

inline uint64_t hash_mix(uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdull;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ull;
  z ^= z >> 33;
  return z;
}

// Named substream derivation: one master seed, independent streams per
// purpose/node. Adding a new purpose never perturbs existing streams.
inline uint64_t substream_seed(uint64_t master, std::string_view tag, uint64_t id = 0) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the tag
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return hash_mix(master ^ hash_mix(h) ^ hash_mix(id * 0x9e3779b97f4a7c15ull + 1));
}

inline Rng substream(uint64_t master, std::string_view tag, uint64_t id = 0) {
  return Rng(substream_seed(master, tag, id));
}

}  // namespace wsn
