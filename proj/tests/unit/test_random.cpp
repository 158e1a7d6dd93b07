#include <gtest/gtest.h>

#include <array>
#include <cstdint>

#include "support.hpp"

using namespace graphon_cpd;

namespace {

using Ctr = Philox4x32::counter_type;
using Key = Philox4x32::key_type;

}  // namespace

// Known-answer vectors of the reference Philox4x32-10.
TEST(Philox, KnownAnswerZero) {
  constexpr Ctr out = Philox4x32::apply({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Ctr{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerOnes) {
  const Ctr out = Philox4x32::apply({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                    {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out, (Ctr{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPi) {
  const Ctr out = Philox4x32::apply({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                    {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out, (Ctr{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, UniformRangeAndAddressing) {
  for (std::uint32_t k = 0; k < 1000; ++k) {
    const double u = uniform_at(123, k, k % 7, k % 11, StreamTag::edges);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(uniform_at(5, 1, 2, 3, StreamTag::edges), uniform_at(5, 1, 2, 3, StreamTag::edges));
  EXPECT_NE(uniform_at(5, 1, 2, 3, StreamTag::edges),
            uniform_at(5, 1, 2, 3, StreamTag::latent_positions));
  EXPECT_NE(uniform_at(5, 1, 2, 3, StreamTag::edges), uniform_at(6, 1, 2, 3, StreamTag::edges));
  EXPECT_NE(uniform_at(5, 1, 2, 3, StreamTag::edges),
            uniform_at(5ull | (1ull << 40), 1, 2, 3, StreamTag::edges));
}

TEST(Philox, UniformMeanAndVariance) {
  const int N = 200000;
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < N; ++k) {
    const double u = uniform_at(99, static_cast<std::uint32_t>(k), 0, 0, StreamTag::edges);
    s += u;
    s2 += u * u;
  }
  const double mean = s / N;
  const double var = s2 / N - mean * mean;
  EXPECT_NEAR(mean, 0.5, 0.005);
  EXPECT_NEAR(var, 1.0 / 12.0, 0.002);
}
