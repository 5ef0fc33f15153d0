// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <string_view>

#include "keccak/hex.hpp"
#include "keccak/sha3.hpp"
#include "support/test_support.hpp"

using keccak::domain_mode;
using keccak::variant;

namespace {

std::vector<std::uint8_t> ascii(std::string_view text) {
    return {text.begin(), text.end()};
}

std::string hash_hex(unsigned bits, std::span<const std::uint8_t> message, domain_mode mode) {
    return keccak::to_hex(keccak::keccak_hash(variant::from_output_bits(bits), message, mode));
}

constexpr std::string_view alpha56 = "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";

}  // namespace

TEST_CASE("variant parameter derivation") {
    struct row {
        unsigned n, r, c;
    };
    for (const auto [n, r, c] : {row{224, 1152, 448}, row{256, 1088, 512}, row{384, 832, 768},
                                 row{512, 576, 1024}}) {
        const auto v = variant::from_output_bits(n);
        CHECK(v.rate_bits() == r);
        CHECK(v.capacity_bits() == c);
        CHECK(v.capacity_bits() == 2 * v.output_bits());
        CHECK(v.rate_bits() + v.capacity_bits() == 1600);
        const auto params = keccak::params_for(v);
        CHECK(params.width_bits() == 1600);
        CHECK(params.width().bits() == 64);
        CHECK(params.rounds() == 24);
        CHECK(params.rate_bits() == r);
        CHECK(params.capacity_bits() == c);
    }
    CHECK_THROWS_AS(variant::from_output_bits(386), std::invalid_argument);
    CHECK_THROWS_AS(variant::from_output_bits(0), std::invalid_argument);
    CHECK_THROWS_AS(variant::from_output_bits(520), std::invalid_argument);
}

TEST_CASE("published digests, competition-era padding") {
    CHECK(hash_hex(224, {}, domain_mode::keccak) ==
          "f71837502ba8e10837bdd8d365adb85591895602fc552b48b7390abd");
    CHECK(hash_hex(256, {}, domain_mode::keccak) ==
          "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
    CHECK(hash_hex(384, {}, domain_mode::keccak) ==
          "2c23146a63a29acf99e73b88f8c24eaa7dc60aa771780ccc006afbfa8fe2479b"
          "2dd2b21362337441ac12b515911957ff");
    CHECK(hash_hex(512, {}, domain_mode::keccak) ==
          "0eab42de4c3ceb9235fc91acffe746b29c29a8c366b7c60e4e67c466f36a4304"
          "c00fa9caf9d87976ba469bcbe06713b435f091ef2769fb160cdab33d3670680e");

    CHECK(hash_hex(256, ascii("a"), domain_mode::keccak) ==
          "3ac225168df54212a25c1c01fd35bebfea408fdac2e31ddd6f80a4bbf9a5f1cb");
    CHECK(hash_hex(256, ascii("abc"), domain_mode::keccak) ==
          "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
    CHECK(hash_hex(256, ascii("abcdbcdecdefdefgefghfghighijhijk"), domain_mode::keccak) ==
          "4b50e45e85ca4a0a9c089890faf83098c75b04fe0e0f9c5488effd1643711033");
    CHECK(hash_hex(256, ascii(alpha56), domain_mode::keccak) ==
          "45d3b367a6904e6e8d502ee04999a7c27647f91fa845d456525fd352ae3d7371");
}

TEST_CASE("published digests, FIPS 202 domain padding") {
    CHECK(hash_hex(224, {}, domain_mode::fips202) ==
          "6b4e03423667dbb73b6e15454f0eb1abd4597f9a1b078e3f5b5a6bc7");
    CHECK(hash_hex(256, {}, domain_mode::fips202) ==
          "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
    CHECK(hash_hex(384, {}, domain_mode::fips202) ==
          "0c63a75b845e4f7d01107d852e4c2485c51a50aaaa94fc61995e71bbee983a2a"
          "c3713831264adb47fb6bd1e058d5f004");
    CHECK(hash_hex(512, {}, domain_mode::fips202) ==
          "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
          "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26");

    CHECK(hash_hex(224, ascii("abc"), domain_mode::fips202) ==
          "e642824c3f8cf24ad09234ee7d3c766fc9a3a5168d0c94ad73b46fdf");
    CHECK(hash_hex(256, ascii("abc"), domain_mode::fips202) ==
          "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
    CHECK(hash_hex(384, ascii("abc"), domain_mode::fips202) ==
          "ec01498288516fc926459f58e2c6ad8df9b473cb0fc08c2596da7cf0e49be4b2"
          "98d88cea927ac7f539f1edf228376d25");
    CHECK(hash_hex(512, ascii("abc"), domain_mode::fips202) ==
          "b751850b1a57168a5693cd924b6b096e08f621827444f70d884f5d0240d2712e"
          "10e116e9192af3c91a7ec57647e3934057340b4cf408d5a56592f8274eec53f0");
    CHECK(hash_hex(256, ascii(alpha56), domain_mode::fips202) ==
          "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376");
}

TEST_CASE("a million streamed 'a' bytes") {
    keccak::hash_context ctx(keccak::params_for(variant::from_output_bits(256)),
                             keccak::domain_suffix(domain_mode::fips202));
    const std::vector<std::uint8_t> chunk(4096, 'a');
    std::size_t remaining = 1'000'000;
    while (remaining > 0) {
        const std::size_t take = std::min(remaining, chunk.size());
        ctx.update(std::span(chunk).first(take));
        remaining -= take;
    }
    CHECK(keccak::to_hex(ctx.finalize(256)) ==
          "5c8875ae474a3634ba4fd55ec85bffd661f32aca75c6d699d0cdcb6c115891c1");
}

TEST_CASE("the two padding generations never collide") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto message = test_support::random_bytes(rng, rng() % 300);
        REQUIRE(keccak::keccak_hash(variant::from_output_bits(256), message,
                                    domain_mode::keccak) !=
                keccak::keccak_hash(variant::from_output_bits(256), message,
                                    domain_mode::fips202));
    }
}

TEST_CASE("xof generalizes the fixed-size hash") {
    std::mt19937_64 rng(32);
    SECTION("output of n bits is the digest itself") {
        for (const auto v : variant::all())
            for (int trial = 0; trial < 50; ++trial) {
                const auto message = test_support::random_bytes(rng, rng() % 300);
                REQUIRE(keccak::keccak_xof(v, message, v.output_bits()) ==
                        keccak::keccak_hash(v, message));
            }
    }
    SECTION("one more byte extends the digest") {
        const auto v = variant::from_output_bits(256);
        const auto message = test_support::random_bytes(rng, 100);
        const auto digest = keccak::keccak_hash(v, message);
        const auto wider = keccak::keccak_xof(v, message, v.output_bits() + 8);
        REQUIRE(wider.size() == digest.size() + 1);
        CHECK(std::equal(digest.begin(), digest.end(), wider.begin()));
    }
    SECTION("two rate blocks cost one extra permutation") {
        const auto v = variant::from_output_bits(256);
        keccak::hash_context ctx(keccak::params_for(v), keccak::domain_suffix(domain_mode::keccak));
        ctx.update(test_support::random_bytes(rng, 10));
        auto reader = ctx.finalize_xof();
        reader.read(2 * v.rate_bits() / 8);
        CHECK(reader.permutation_calls() == 1);
    }
    SECTION("matches the independent implementation on multi-block outputs") {
        const auto items =
                test_support::read_key_values(test_support::data_dir() / "xof_vectors.txt");
        REQUIRE_FALSE(items.empty());
        unsigned bits = 0;
        std::vector<std::uint8_t> message;
        std::size_t out_len = 0;
        unsigned checked = 0;
        for (const auto& [key, value] : items) {
            if (key == "Variant") bits = static_cast<unsigned>(std::stoul(value));
            else if (key == "Msg") message = keccak::from_hex(value);
            else if (key == "OutLen") out_len = std::stoull(value);
            else if (key == "Out") {
                const auto out = keccak::keccak_xof(variant::from_output_bits(bits), message,
                                                    out_len * 8);
                REQUIRE(keccak::to_hex(out) == value);
                ++checked;
            }
        }
        CHECK(checked == 24);
    }
}

TEST_CASE("prefix MAC") {
    std::mt19937_64 rng(33);
    const auto v = variant::from_output_bits(256);

    SECTION("definition: tag = hash(key || message)") {
        for (int trial = 0; trial < 100; ++trial) {
            const auto key = test_support::random_bytes(rng, 1 + rng() % 64);
            const auto message = test_support::random_bytes(rng, rng() % 200);
            std::vector<std::uint8_t> joined(key);
            joined.insert(joined.end(), message.begin(), message.end());
            REQUIRE(keccak::prefix_mac(v, key, message) == keccak::keccak_hash(v, joined));
        }
    }
    SECTION("tag length follows the variant") {
        const auto key = ascii("key");
        for (const auto var : variant::all())
            CHECK(keccak::prefix_mac(var, key, ascii("msg")).size() == var.output_bytes());
    }
    SECTION("distinct keys give distinct tags") {
        const auto message = test_support::random_bytes(rng, 64);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto k1 = test_support::random_bytes(rng, 16);
            auto k2 = k1;
            k2[rng() % k2.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
            REQUIRE(keccak::prefix_mac(v, k1, message) != keccak::prefix_mac(v, k2, message));
        }
    }
    SECTION("an empty key is rejected") {
        CHECK_THROWS_AS(keccak::prefix_mac(v, {}, ascii("msg")), std::invalid_argument);
    }
}

TEST_CASE("length-extension attack simulation") {
    SECTION("digest-only attacker never forges; full-state attacker always does") {
        for (const unsigned bits : {256u, 512u}) {
            const auto report = keccak::demonstrate_extension_resistance(
                    variant::from_output_bits(bits), 50);
            CHECK(report.trials == 50);
            CHECK(report.forgeries == 0);
            CHECK(report.positive_control_forged);
        }
    }
    SECTION("zero trials is a usage error") {
        CHECK_THROWS_AS(keccak::demonstrate_extension_resistance(
                                variant::from_output_bits(256), 0),
                        std::invalid_argument);
    }
}
