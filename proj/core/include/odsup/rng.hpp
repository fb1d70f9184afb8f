#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace odsup::rng {

// Philox4x32-10 block function. Counter-based: the output is a pure function
// of (counter, key), so any position in a stream can be generated without
// sequencing through earlier draws.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// Quantile function of the standard normal distribution (Wichura's AS 241,
// PPND16 variant). Accurate to ~1e-16 for p in (0,1).
double inv_normal_cdf(double p);

// 64-bit mixing finalizer (splitmix64). Statistically independent outputs
// for distinct inputs; used to derive sub-seeds.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a hash of a byte string, for deriving purpose-tagged sub-seeds.
std::uint64_t fnv1a64(std::string_view bytes);

// Deterministic sub-seed for (master seed, purpose tag, index). Disjoint tags
// give decoupled streams; this is how Monte Carlo replicates separate their
// data seeds from their bootstrap seeds.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index);

// One independent random stream identified by (seed, stream). Draw order is
// the only state; two streams with distinct ids never overlap (the stream id
// occupies the high counter words, the draw position the low ones).
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          hi_{static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)} {}

    std::uint64_t next_u64();

    // Uniform on the open interval (0,1): (x >> 11) * 2^-53 + 2^-54.
    double next_uniform();

    // Standard normal via inverse-CDF of next_uniform().
    double next_normal();

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> hi_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    unsigned buffered_ = 0;
};

}  // namespace odsup::rng
