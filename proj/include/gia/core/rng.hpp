#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gia {

/// splitmix64 round; used to derive stage seeds so that every pipeline stage
/// gets an independent, platform-stable stream.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(a ^ mix64(b)); }

/// FNV-1a over a string; handy for deriving seeds from stage names.
inline uint64_t fnv1a(const char* s) {
  uint64_t h = 1469598103934665603ULL;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
  return h;
}

/// Deterministic RNG with explicitly implemented distributions.
/// std:: distributions are avoided on purpose: their output is
/// implementation-defined, which would make persisted runs non-portable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed == 0 ? 0x6a09e667f3bcc908ULL : seed) {
    // xoshiro256** state from splitmix64 expansion
    for (auto& w : st_) {
      s_ = mix64(s_);
      w = s_;
    }
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(st_[1] * 5, 7) * 9;
    const uint64_t t = st_[1] << 17;
    st_[2] ^= st_[0];
    st_[3] ^= st_[1];
    st_[1] ^= st_[2];
    st_[0] ^= st_[3];
    st_[2] ^= t;
    st_[3] = rotl(st_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    const uint64_t limit = (~uint64_t{0}) - (~uint64_t{0}) % n;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  int below(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Laplace(0, beta) via inverse CDF. beta == 0 yields exactly 0.
  double laplace(double beta) {
    if (beta == 0.0) return 0.0;
    double u;
    do {
      u = uniform() - 0.5;
    } while (u == -0.5 || u == 0.5);
    const double sign = u < 0.0 ? -1.0 : 1.0;
    return -beta * sign * std::log(1.0 - 2.0 * std::fabs(u));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = below(static_cast<uint64_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Random permutation of {0..n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p);
    return p;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_;
  uint64_t st_[4];
};

}  // namespace gia
