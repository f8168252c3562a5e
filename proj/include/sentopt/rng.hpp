#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sentopt {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A draw is addressed by (key, counter); no state is carried between calls,
// so path i / step j produces the same numbers on any thread schedule.
struct philox4x32 {
    static constexpr std::uint32_t mult0 = 0xD2511F53u;
    static constexpr std::uint32_t mult1 = 0xCD9E8D57u;
    static constexpr std::uint32_t weyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t weyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                              std::uint64_t ctr_hi,
                                              std::uint64_t ctr_lo) {
        std::uint32_t k0 = std::uint32_t(key);
        std::uint32_t k1 = std::uint32_t(key >> 32);
        std::array<std::uint32_t, 4> c{std::uint32_t(ctr_lo), std::uint32_t(ctr_lo >> 32),
                                       std::uint32_t(ctr_hi), std::uint32_t(ctr_hi >> 32)};
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = std::uint64_t(mult0) * c[0];
            std::uint64_t p1 = std::uint64_t(mult1) * c[2];
            c = {std::uint32_t(p1 >> 32) ^ c[1] ^ k0, std::uint32_t(p1),
                 std::uint32_t(p0 >> 32) ^ c[3] ^ k1, std::uint32_t(p0)};
            k0 += weyl0;
            k1 += weyl1;
        }
        return c;
    }
};

// (0,1) uniform, bin-centered on 52 bits; both conversions are exact, so the
// result can reach neither endpoint and log() is always finite.
inline double uniform01(std::uint32_t lo, std::uint32_t hi) {
    std::uint64_t u = (std::uint64_t(hi) << 32) | lo;
    return (double(u >> 12) + 0.5) * 0x1.0p-52;
}

// One Philox block -> an independent N(0,1) pair via Box-Muller.
// stream: path (or purpose) index, index: step index within the stream.
inline std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                         std::uint64_t index) {
    auto b = philox4x32::block(seed, stream, index);
    double u1 = uniform01(b[0], b[1]);
    double u2 = uniform01(b[2], b[3]);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.2831853071795864769 * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

// Seed mixer for deriving independent sub-seeds (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace sentopt
