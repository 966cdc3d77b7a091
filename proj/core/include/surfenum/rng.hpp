#pragma once

// Philox4x32-10 counter-based generator. Every block of four 32-bit words is
// a pure function of (key, counter), so parallel workers addressed by
// disjoint counters never share state.

#include <array>
#include <cstdint>

namespace surfenum {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key);

/// Sequential draws from the stream addressed by (seed, stream, attempt):
/// the counter is (block, attempt low, attempt high, stream).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t attempt);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on {0, ..., bound - 1}; bound >= 1. Lemire's rejection method.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform on {lo, ..., hi}.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  PhiloxKey key_;
  PhiloxBlock counter_;
  PhiloxBlock buffer_{};
  int used_ = 4;
};

}  // namespace surfenum
