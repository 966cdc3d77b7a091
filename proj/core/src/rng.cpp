#include "surfenum/rng.hpp"

namespace surfenum {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53;
constexpr std::uint32_t kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9;
constexpr std::uint32_t kW1 = 0xBB67AE85;

void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

PhiloxBlock philox4x32_10(PhiloxBlock ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t attempt)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0, static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32), stream} {}

std::uint32_t CounterRng::next_u32() {
  if (used_ == 4) {
    buffer_ = philox4x32_10(counter_, key_);
    ++counter_[0];
    used_ = 0;
  }
  return buffer_[used_++];
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t hi = next_u32();
  return hi << 32 | next_u32();
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
  if (bound <= 1) return 0;
  if (bound <= 0xffffffffULL) {
    const auto b = static_cast<std::uint32_t>(bound);
    std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * b;
    auto low = static_cast<std::uint32_t>(m);
    if (low < b) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-b) % b;
      while (low < threshold) {
        m = static_cast<std::uint64_t>(next_u32()) * b;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return m >> 32;
  }
  // Wide bounds: plain rejection on the top multiple.
  const std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % bound;
}

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform(span));
}

}  // namespace surfenum
