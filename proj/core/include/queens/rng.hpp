#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace queens {

// Seeded generator with platform-independent derived draws. std::mt19937_64
// output is pinned by the standard; the distributions are not, so we roll our
// own bounded/real helpers to keep fixed-seed runs byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r = engine_();
    while (r < reject) r = engine_();
    return r % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

  // Independent child stream, for fan-out across workers.
  Rng fork() { return Rng(engine_()); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace queens
