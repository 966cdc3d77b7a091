#include <doctest.h>

#include <cmath>
#include <set>

#include "surfenum/rng.hpp"

using namespace surfenum;

// Known-answer vectors published with the Random123 reference implementation.
TEST_CASE("philox4x32_10 known answers") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxBlock{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxBlock{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxBlock{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("CounterRng streams are deterministic and distinct") {
  CounterRng a(5, 1, 9), b(5, 1, 9);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

  std::set<std::uint64_t> firsts;
  for (std::uint32_t stream = 0; stream < 4; ++stream) {
    for (std::uint64_t attempt : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{1} << 40}) {
      for (std::uint64_t seed : {0, 1}) firsts.insert(CounterRng(seed, stream, attempt).next_u64());
    }
  }
  CHECK(firsts.size() == 24);
}

TEST_CASE("uniform draws stay in range") {
  CounterRng rng(1, 0, 0);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(rng.uniform(1) == 0);
    REQUIRE(rng.uniform(7) < 7);
    const auto x = rng.uniform_int(-3, 3);
    REQUIRE((x >= -3 && x <= 3));
  }
  CHECK(rng.uniform_int(5, 5) == 5);
  const std::uint64_t huge = std::uint64_t{1} << 63;
  for (int i = 0; i < 1000; ++i) REQUIRE(rng.uniform(huge + 1) <= huge);
}

TEST_CASE("uniform(4) residue frequencies") {
  const int draws = 100000;
  const double p = 0.25;
  const double sigma = std::sqrt(draws * p * (1 - p));
  std::array<int, 4> counts{};
  CounterRng rng(2024, 3, 0);
  for (int i = 0; i < draws; ++i) ++counts[rng.uniform(4)];
  for (int c : counts) CHECK(std::abs(c - draws * p) <= 5 * sigma);
}
