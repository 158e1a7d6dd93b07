#pragma once

// Counter-based random numbers (Philox4x32-10, Salmon et al. 2011).
//
// Every draw is addressed by (seed, t, i, j, tag): the 64-bit seed forms the
// key, and the counter is (j, i, t, tag). Draws therefore do not depend on
// evaluation order, which keeps parallel generation bit-reproducible.

#include <array>
#include <cstdint>

namespace graphon_cpd {

class Philox4x32 {
 public:
  using counter_type = std::array<std::uint32_t, 4>;
  using key_type = std::array<std::uint32_t, 2>;

  static constexpr counter_type apply(counter_type ctr, key_type key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Substream domains, stored in the last counter word.
enum class StreamTag : std::uint32_t {
  edges = 0,
  latent_positions = 1,
};

/// Uniform double in [0, 1) with 53 random bits, for draw (seed, t, i, j, tag).
constexpr double uniform_at(std::uint64_t seed, std::uint32_t t, std::uint32_t i, std::uint32_t j,
                            StreamTag tag) noexcept {
  const Philox4x32::key_type key{static_cast<std::uint32_t>(seed),
                                 static_cast<std::uint32_t>(seed >> 32)};
  const auto out = Philox4x32::apply({j, i, t, static_cast<std::uint32_t>(tag)}, key);
  const std::uint64_t bits = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Handle for the edge draws of one snapshot.
struct SnapshotStream {
  std::uint64_t seed = 0;
  std::uint32_t t = 0;

  [[nodiscard]] constexpr double uniform(std::uint32_t i, std::uint32_t j) const noexcept {
    return uniform_at(seed, t, i, j, StreamTag::edges);
  }
};

}  // namespace graphon_cpd
