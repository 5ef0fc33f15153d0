// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "keccak/kat.hpp"
#include "support/test_support.hpp"

using keccak::domain_mode;
using keccak::variant;

namespace {

const char* sample =
        "# comment line\n"
        "[L = 256]\n"
        "\n"
        "Len = 0\n"
        "Msg = 00\n"
        "MD = c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470\n"
        "\n"
        "Len = 24\n"
        "Msg = 616263\n"
        "MD = 4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45\n"
        "\n"
        "Len = 5\n"
        "Msg = 13\n"
        "MD = 0000000000000000000000000000000000000000000000000000000000000000\n";

}  // namespace

TEST_CASE("parsing the Len/Msg/MD record format") {
    std::istringstream in(sample);
    const auto records = keccak::parse_kat_stream(in);
    REQUIRE(records.size() == 3);
    CHECK(records[0].len_bits == 0);
    CHECK(records[0].message.empty());
    CHECK(records[0].digest.size() == 32);
    CHECK(records[1].len_bits == 24);
    CHECK(records[1].message == std::vector<std::uint8_t>{'a', 'b', 'c'});
    CHECK(records[2].len_bits == 5);
    CHECK(records[2].message.size() == 1);
}

TEST_CASE("parser rejects malformed files") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return keccak::parse_kat_stream(in);
    };
    CHECK_THROWS_AS(parse("MD = aabb\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Msg = aabb\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Len = 8\nMsg = aa\n"), keccak::kat_format_error);  // truncated
    CHECK_THROWS_AS(parse("Len = 8\nMD = aa\n"), keccak::kat_format_error);   // no Msg
    CHECK_THROWS_AS(parse("Len = 8\nMsg = aabb\nMD = cc\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Len = 8\nMsg = a\nMD = cc\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Len = x\nMsg = aa\nMD = cc\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Len = 8\nLen = 8\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("Len = 8\nMsg = zz\nMD = cc\n"), keccak::kat_format_error);
    CHECK_THROWS_AS(parse("nonsense\n"), keccak::kat_format_error);
    CHECK(parse("").empty());
    CHECK(parse("# only comments\n\n").empty());
}

TEST_CASE("running records classifies pass, fail and skip") {
    std::istringstream in(sample);
    auto records = keccak::parse_kat_stream(in);
    const auto v = variant::from_output_bits(256);

    auto summary = keccak::run_kat(records, v, domain_mode::keccak);
    CHECK(summary.passed == 2);
    CHECK(summary.failed == 0);
    CHECK(summary.skipped == 1);  // the 5-bit entry

    records[1].digest[0] ^= 0xff;
    summary = keccak::run_kat(records, v, domain_mode::keccak);
    CHECK(summary.passed == 1);
    CHECK(summary.failed == 1);
    CHECK(summary.skipped == 1);

    // same records under the wrong mode fail across the board
    std::istringstream again(sample);
    summary = keccak::run_kat(keccak::parse_kat_stream(again), v, domain_mode::fips202);
    CHECK(summary.passed == 0);
    CHECK(summary.failed == 2);
}

TEST_CASE("shipped vector files verify") {
    const auto dir = test_support::data_dir() / "kat";
    const auto keccak256 = keccak::run_kat_file(dir / "keccak_256.kat",
                                                variant::from_output_bits(256),
                                                domain_mode::keccak);
    CHECK(keccak256.passed > 250);
    CHECK(keccak256.failed == 0);
    CHECK(keccak256.skipped == 0);

    const auto sha3_512 = keccak::run_kat_file(dir / "sha3_512.kat",
                                               variant::from_output_bits(512),
                                               domain_mode::fips202);
    CHECK(sha3_512.passed > 250);
    CHECK(sha3_512.failed == 0);

    const auto mixed = keccak::run_kat_file(dir / "mixed_alignment.kat",
                                            variant::from_output_bits(256),
                                            domain_mode::keccak);
    CHECK(mixed.passed == 2);
    CHECK(mixed.failed == 0);
    CHECK(mixed.skipped == 3);
}

TEST_CASE("file-level errors") {
    CHECK_THROWS_AS(keccak::load_kat_file("/nonexistent/path.kat"), keccak::kat_format_error);

    const auto empty_path = std::filesystem::temp_directory_path() / "keccak_empty_test.kat";
    std::ofstream(empty_path).close();
    const auto records = keccak::load_kat_file(empty_path);
    CHECK(records.empty());
    const auto summary = keccak::run_kat(records, variant::from_output_bits(256),
                                         domain_mode::keccak);
    CHECK(summary.passed + summary.failed + summary.skipped == 0);
    std::filesystem::remove(empty_path);
}
