// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "keccak/hex.hpp"
#include "keccak/permutation.hpp"
#include "keccak/sha3.hpp"
#include "keccak/sponge.hpp"

namespace keccak {

/// Expected values the self-test checks the build against. Kept as a
/// plain struct so a test can corrupt a copy and confirm the self-test
/// actually notices.
struct selftest_fixture {
    struct digest_vector {
        unsigned output_bits;
        domain_mode mode;
        std::string_view digest_hex;
    };
    std::array<digest_vector, 8> empty_message_digests;
    round_constant_table round_constants;  // canonical 64-bit table
    std::array<unsigned, 25> rho_offsets;  // linear order 5y+x
};

inline const selftest_fixture& default_selftest_fixture() {
    static const selftest_fixture fixture{
            {{{224, domain_mode::keccak,
               "f71837502ba8e10837bdd8d365adb85591895602fc552b48b7390abd"},
              {256, domain_mode::keccak,
               "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470"},
              {384, domain_mode::keccak,
               "2c23146a63a29acf99e73b88f8c24eaa7dc60aa771780ccc006afbfa8fe2479b"
               "2dd2b21362337441ac12b515911957ff"},
              {512, domain_mode::keccak,
               "0eab42de4c3ceb9235fc91acffe746b29c29a8c366b7c60e4e67c466f36a4304"
               "c00fa9caf9d87976ba469bcbe06713b435f091ef2769fb160cdab33d3670680e"},
              {224, domain_mode::fips202,
               "6b4e03423667dbb73b6e15454f0eb1abd4597f9a1b078e3f5b5a6bc7"},
              {256, domain_mode::fips202,
               "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a"},
              {384, domain_mode::fips202,
               "0c63a75b845e4f7d01107d852e4c2485c51a50aaaa94fc61995e71bbee983a2a"
               "c3713831264adb47fb6bd1e058d5f004"},
              {512, domain_mode::fips202,
               "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
               "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26"}}},
            {0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
             0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
             0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
             0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
             0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
             0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
             0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
             0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL},
            {0, 1, 62, 28, 27, 36, 44, 6, 55, 20, 3, 10, 43,
             25, 39, 41, 45, 15, 21, 8, 18, 2, 61, 56, 14}};
    return fixture;
}

struct selftest_report {
    bool ok{true};
    std::vector<std::string> failures;
};

/// Smoke checks for a fresh build: the eight empty-message digests, the
/// generated constant tables against their published values, per-row chi
/// bijectivity, and a padding round-trip sample.
inline selftest_report run_selftest(const selftest_fixture& fixture = default_selftest_fixture()) {
    selftest_report report;
    auto record_failure = [&report](std::string what) {
        report.ok = false;
        report.failures.push_back(std::move(what));
    };

    for (const auto& expected : fixture.empty_message_digests) {
        const auto digest =
                keccak_hash(variant::from_output_bits(expected.output_bits), {}, expected.mode);
        if (to_hex(digest) != expected.digest_hex)
            record_failure("empty-message digest mismatch for " +
                           std::to_string(expected.output_bits) + "/" +
                           std::string(to_string(expected.mode)));
    }

    if (generate_round_constants(lane_width(64)) != fixture.round_constants)
        record_failure("round-constant table does not match the published values");

    const auto offsets = generate_rho_offsets(lane_width(64));
    for (unsigned y = 0; y < 5; ++y)
        for (unsigned x = 0; x < 5; ++x)
            if (offsets[x][y] != fixture.rho_offsets[5 * y + x]) {
                record_failure("rotation-offset table does not match the published values");
                y = 5;
                break;
            }

    // chi restricted to one row must permute all 32 row values
    std::array<bool, 32> seen{};
    for (unsigned value = 0; value < 32; ++value) {
        state s(lane_width(64));
        for (unsigned x = 0; x < 5; ++x) s.lane(x, 0) = (value >> x) & 1;
        chi(s);
        unsigned image = 0;
        for (unsigned x = 0; x < 5; ++x) image |= static_cast<unsigned>(s.lane(x, 0) & 1) << x;
        if (seen[image]) {
            record_failure("chi is not a bijection on rows");
            break;
        }
        seen[image] = true;
    }

    std::mt19937_64 rng(0x7e57);
    for (unsigned i = 0; i < 100; ++i) {
        std::vector<std::uint8_t> message(rng() % 300);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng());
        if (unpad10star1(pad10star1(message, 1088), 1088) != message) {
            record_failure("padding round-trip failed");
            break;
        }
    }

    return report;
}

}  // namespace keccak
