#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace targetrank {

// std::uniform_* distributions are implementation-defined, so all sampling
// is hand-rolled on top of mt19937_64 (whose output sequence is pinned by
// the standard). Outputs stay reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound), rejection-sampled to avoid modulo bias
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // uniform in [0, 1) with 53 random bits
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent per-stream seed from a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Floyd's algorithm; k distinct values from [0, n) in insertion order.
std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k, Rng& rng);

// Shortest round-trip decimal representation.
std::string format_double(double v);

// Presentation rounding used by the report tables: truncates toward zero at
// `decimals` places and trims trailing zeros, so 0.712 -> "0.71" and
// 0.708 -> "0.7". Stored values keep full precision.
std::string format_fixed_trunc(double v, int decimals);

bool is_valid_utf8(std::string_view s);

}  // namespace targetrank
