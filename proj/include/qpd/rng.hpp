#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace qpd {

// Philox4x64-10 counter-based generator. Streams are addressed by
// (seed, stream): the pair is the Philox key, so distinct stream indices
// for one seed give statistically independent, reproducible sub-streams
// regardless of scheduling. Matches the reference Philox outputs
// (known-answer-tested against an independent implementation).
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  std::uint64_t next_u64() {
    if (idx_ == 4) refill();
    return buf_[idx_++];
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; pairs are cached.
  double normal();

  std::uint64_t operator()() { return next_u64(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> ctr_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buf_{};
  int idx_ = 4;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace qpd
