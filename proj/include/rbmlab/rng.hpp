#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace rbmlab {

// Identifies one random stream: chain i of an ensemble draws from
// (master_seed, stream_base + i). Distinct (seed, stream) pairs index
// disjoint counter blocks, so streams never overlap.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_base = 0;
};

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// The key carries the 64-bit seed; the 128-bit counter carries
// (block index, stream id). Every block is addressable, which makes
// replay and checkpoint/resume exact: regenerating draw n of a stream
// never requires walking the first n-1 draws.
struct Philox4x32 {
  static constexpr std::uint32_t kMulA = 0xD2511F53u;
  static constexpr std::uint32_t kMulB = 0xCD9E8D57u;
  static constexpr std::uint32_t kBumpA = 0x9E3779B9u;
  static constexpr std::uint32_t kBumpB = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t index) {
    std::uint32_t c0 = static_cast<std::uint32_t>(index);
    std::uint32_t c1 = static_cast<std::uint32_t>(index >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += kBumpA;
        k1 += kBumpB;
      }
      std::uint64_t pa = static_cast<std::uint64_t>(kMulA) * c0;
      std::uint64_t pb = static_cast<std::uint64_t>(kMulB) * c2;
      std::uint32_t hi_a = static_cast<std::uint32_t>(pa >> 32);
      std::uint32_t lo_a = static_cast<std::uint32_t>(pa);
      std::uint32_t hi_b = static_cast<std::uint32_t>(pb >> 32);
      std::uint32_t lo_b = static_cast<std::uint32_t>(pb);
      std::uint32_t n0 = hi_b ^ c1 ^ k0;
      std::uint32_t n2 = hi_a ^ c3 ^ k1;
      c0 = n0;
      c1 = lo_b;
      c2 = n2;
      c3 = lo_a;
    }
    return {c0, c1, c2, c3};
  }
};

// A positioned view into one stream. State is just the draw count, so a
// stream can be persisted and resumed exactly from (seed, stream, draws).
class RandomStream {
 public:
  RandomStream() = default;
  RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t draws = 0)
      : seed_(seed), stream_(stream), draws_(draws) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t draws() const { return draws_; }

  // Uniform double in [0, 1) with 53 random bits. Two draws per block.
  double next_unit() {
    std::uint64_t blk = draws_ >> 1;
    int half = static_cast<int>(draws_ & 1u);
    if (blk != cached_block_) {
      cache_ = Philox4x32::block(seed_, stream_, blk);
      cached_block_ = blk;
    }
    ++draws_;
    std::uint32_t lo = cache_[half * 2];
    std::uint32_t hi = cache_[half * 2 + 1];
    std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) | (lo >> 11);
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform integer in [0, n). One draw.
  std::uint64_t next_index(std::uint64_t n) {
    double u = next_unit();
    auto idx = static_cast<std::uint64_t>(u * static_cast<double>(n));
    return idx < n ? idx : n - 1;
  }

  // Standard normal via Box-Muller; always consumes two draws.
  double next_normal() {
    double u1 = next_unit();
    double u2 = next_unit();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t draws_ = 0;
  std::uint64_t cached_block_ = ~0ull;
  std::array<std::uint32_t, 4> cache_{};
};

// Stream id layout used across the library. The high byte tags the purpose
// so that independent parts of a run can never collide on a stream.
namespace streams {
constexpr std::uint64_t kInit = 1ull << 56;
constexpr std::uint64_t kShuffle = 2ull << 56;       // + epoch index
constexpr std::uint64_t kNegative = 3ull << 56;      // + update * n_chains + chain
constexpr std::uint64_t kGeneration = 4ull << 56;    // + chain
constexpr std::uint64_t kAis = 5ull << 56;           // + runner
constexpr std::uint64_t kDatasetSplit = 6ull << 56;
constexpr std::uint64_t kSynth = 7ull << 56;
constexpr std::uint64_t kEquilibrium = 8ull << 56;   // + chain
}  // namespace streams

}  // namespace rbmlab
