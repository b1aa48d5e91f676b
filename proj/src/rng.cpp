#include "mixspec/rng.hpp"

#include <cmath>

#include "mixspec/errors.hpp"
#include "mixspec/numerics.hpp"

namespace mixspec {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

inline std::array<std::uint32_t, 4> philox_round(const std::array<std::uint32_t, 4>& ctr,
                                                 const std::array<std::uint32_t, 2>& key) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        counter = philox_round(counter, key);
    }
    return counter;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void RngStream::refill() {
    std::array<std::uint32_t, 4> counter = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = philox4x32(counter, key_);
    ++block_;
    available_ = 4;
}

std::uint32_t RngStream::next_u32() {
    if (available_ == 0) refill();
    return buffer_[4 - available_--];
}

std::uint64_t RngStream::next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RngStream::u01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() { return normal_quantile(u01()); }

double RngStream::draw(BaseDistribution base) {
    switch (base) {
        case BaseDistribution::StandardNormal:
            return normal();
        case BaseDistribution::ScaledT6: {
            // t_6 = N / sqrt(chi^2_6 / 6) with chi^2_6 = 2*Gamma(3) drawn
            // exactly as -2 log(u1 u2 u3); scaled by sqrt(4/6) for unit
            // variance.
            double n = normal();
            double g3 = -std::log(u01() * u01() * u01());
            return n * std::sqrt(3.0 / g3) * std::sqrt(4.0 / 6.0);
        }
        case BaseDistribution::StandardizedChiSq3: {
            // chi^2_3 = chi^2_1 + chi^2_2 = N^2 - 2 log(u); standardized to
            // mean 0, variance 1 by sqrt(1/6)*(x - 3).
            double n = normal();
            double x = n * n - 2.0 * std::log(u01());
            return (x - 3.0) * std::sqrt(1.0 / 6.0);
        }
        case BaseDistribution::Uniform:
            return (2.0 * u01() - 1.0) * std::sqrt(3.0);
    }
    throw InvalidInput("RngStream::draw: unknown base distribution");
}

std::uint32_t RngStream::below(std::uint32_t bound) {
    if (bound == 0) throw InvalidInput("RngStream::below: zero bound");
    if (bound == 1) return 0;
    std::uint32_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    for (;;) {
        std::uint32_t v = next_u32() & mask;
        if (v < bound) return v;
    }
}

void fisher_yates(std::vector<int>& perm, RngStream& rng) {
    for (std::size_t i = perm.size(); i > 1; --i) {
        std::uint32_t j = rng.below(static_cast<std::uint32_t>(i));
        std::swap(perm[i - 1], perm[j]);
    }
}

}  // namespace mixspec
