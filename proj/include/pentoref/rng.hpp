#pragma once

// Seeded randomness helpers. All sampling goes through Rng so that draws
// depend only on the mt19937_64 stream, not on library-specific
// distribution internals, and stay reproducible across compilers.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace pentoref {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent child seed for (master, stream, index). Boards each get their
// own derived seed, so generation order never affects the result.
inline constexpr std::uint64_t derive_seed(std::uint64_t master,
                                           std::uint64_t stream,
                                           std::uint64_t index = 0) {
  return splitmix64(splitmix64(master ^ splitmix64(stream)) ^ splitmix64(index + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Unbiased draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t min = (-n) % n;  // 2^64 mod n
    std::uint64_t x;
    do {
      x = engine_();
    } while (x < min);
    return x % n;
  }

  // Inclusive integer range.
  int range(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    if (v.empty()) throw std::invalid_argument("Rng::pick: empty candidate set");
    return v[static_cast<std::size_t>(below(v.size()))];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

  // k distinct draws from [0, n), order randomized.
  std::vector<int> sample_distinct(int n, int k) {
    if (k > n) throw std::invalid_argument("Rng::sample_distinct: k > n");
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(k));
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pentoref
