#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mixspec/model.hpp"

namespace mixspec {

// Philox4x32-10 counter-based generator. Stateless block function: each
// (counter, key) pair maps to 128 independent output bits, so any draw can be
// produced on any thread with no shared state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// splitmix64-style avalanche; used to derive sub-seeds (per replication, per
// purpose) from a master seed. mix64(a, b) is a keyed variant.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

// A deterministic random stream identified by (seed, stream). Streams with
// distinct ids are independent; the sequence depends only on (seed, stream)
// and the number of draws, never on threading.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on the open interval (0,1): ((r >> 11) + 0.5) * 2^-53,
    // never exactly 0 or 1 so logs are always safe.
    double u01();

    // Standard normal via inverse-CDF (exact monotone map from one u01).
    double normal();

    // One draw from the requested base law, including its analytic
    // standardization constants (always mean 0, variance 1).
    double draw(BaseDistribution base);

    // Uniform integer in [0, bound), masked rejection sampling (unbiased).
    std::uint32_t below(std::uint32_t bound);

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int available_ = 0;

    void refill();
};

// In-place uniform random permutation of `perm` (Fisher-Yates, one stream).
void fisher_yates(std::vector<int>& perm, RngStream& rng);

}  // namespace mixspec
