#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "sentopt/rng.hpp"
#include "sentopt/stats.hpp"

using namespace sentopt;

namespace {

// Straight-line reference of the 10-round algorithm, written independently
// of the library implementation.
std::array<std::uint32_t, 4> reference_block(std::array<std::uint32_t, 4> ctr,
                                             std::array<std::uint32_t, 2> key) {
    auto mulhilo = [](std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
        std::uint64_t p = std::uint64_t(a) * b;
        lo = std::uint32_t(p);
        hi = std::uint32_t(p >> 32);
    };
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(0xD2511F53u, ctr[0], lo0, hi0);
        mulhilo(0xCD9E8D57u, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
    }
    return ctr;
}

} // namespace

TEST_CASE("counter generator matches an independent reference implementation") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t key = gen(), hi = gen(), lo = gen();
        auto got = philox4x32::block(key, hi, lo);
        auto want = reference_block(
            {std::uint32_t(lo), std::uint32_t(lo >> 32), std::uint32_t(hi),
             std::uint32_t(hi >> 32)},
            {std::uint32_t(key), std::uint32_t(key >> 32)});
        CHECK(got == want);
    }
}

TEST_CASE("published known-answer vectors") {
    auto zeros = philox4x32::block(0, 0, 0);
    CHECK(zeros[0] == 0x6627e8d5u);
    CHECK(zeros[1] == 0xe169c58du);
    CHECK(zeros[2] == 0xbc57ac4cu);
    CHECK(zeros[3] == 0x9b00dbd8u);

    auto ones = philox4x32::block(0xffffffffffffffffull, 0xffffffffffffffffull,
                                  0xffffffffffffffffull);
    CHECK(ones[0] == 0x408f276du);
    CHECK(ones[1] == 0x41c83b0eu);
    CHECK(ones[2] == 0xa20bc7c6u);
    CHECK(ones[3] == 0x6d5451fdu);

    // counter = first digits of pi, key continues the sequence
    auto pi = philox4x32::block(0x299f31d0a4093822ull, 0x0370734413198a2eull,
                                0x85a308d3243f6a88ull);
    CHECK(pi[0] == 0xd16cfe09u);
    CHECK(pi[1] == 0x94fdccebu);
    CHECK(pi[2] == 0x5001e420u);
    CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("uniform mapping stays inside the open unit interval") {
    CHECK(uniform01(0, 0) > 0.0);
    CHECK(uniform01(0xffffffffu, 0xffffffffu) < 1.0);
}

TEST_CASE("normal pairs are stateless and well distributed") {
    auto a = normal_pair(42, 7, 1000);
    auto b = normal_pair(42, 7, 1000);
    CHECK(a == b);
    CHECK(normal_pair(42, 7, 1001) != a);
    CHECK(normal_pair(42, 8, 1000) != a);
    CHECK(normal_pair(43, 7, 1000) != a);

    std::vector<double> z;
    z.reserve(200000);
    for (std::uint64_t i = 0; i < 100000; ++i) {
        auto p = normal_pair(7, 0, i);
        z.push_back(p[0]);
        z.push_back(p[1]);
    }
    sample_stats st = summarize(z);
    CHECK(std::abs(st.mean) < 3.0 * st.se_mean);
    CHECK(st.variance == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(st.skewness) < 0.02);
    CHECK(std::abs(st.excess_kurtosis) < 0.04);
}
