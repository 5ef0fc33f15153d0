// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "keccak/bench.hpp"

using keccak::variant;

namespace {

// Timing assertions get a few attempts; a single noisy scheduler blip on a
// shared machine should not fail the suite.
template <class Check>
void eventually(int attempts, Check&& check) {
    for (int i = 0; i + 1 < attempts; ++i)
        if (check()) return;
    REQUIRE(check());
}

}  // namespace

TEST_CASE("measure reports a positive, consistent throughput") {
    const auto result = keccak::measure(variant::from_output_bits(256), 1 << 16, 8);
    CHECK(result.message_bytes == 1 << 16);
    CHECK(result.repetitions == 8);
    CHECK(result.elapsed_seconds > 0);
    CHECK(result.bytes_per_second > 0);
    CHECK_FALSE(result.cycles_per_byte.has_value());

    const auto with_hz = keccak::measure(variant::from_output_bits(256), 1 << 16, 8, 3.0e9);
    REQUIRE(with_hz.cycles_per_byte.has_value());
    CHECK(*with_hz.cycles_per_byte ==
          Catch::Approx(3.0e9 / with_hz.bytes_per_second));
}

TEST_CASE("measure validates its workload") {
    CHECK_THROWS_AS(keccak::measure(variant::from_output_bits(256), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(keccak::measure(variant::from_output_bits(256), 16, 0),
                    std::invalid_argument);
    // one hash of one byte finishes far below the clock floor
    CHECK_THROWS_AS(keccak::measure(variant::from_output_bits(256), 1, 1),
                    keccak::measurement_error);
}

TEST_CASE("doubling repetitions leaves throughput roughly unchanged") {
    eventually(3, [] {
        const auto base = keccak::measure(variant::from_output_bits(256), 1 << 20, 4);
        const auto doubled = keccak::measure(variant::from_output_bits(256), 1 << 20, 8);
        const double ratio = doubled.bytes_per_second / base.bytes_per_second;
        return ratio > 0.9 && ratio < 1.1;
    });
}

TEST_CASE("consecutive invocations agree within 15 percent") {
    eventually(3, [] {
        const auto first = keccak::measure(variant::from_output_bits(512), 1 << 20, 4);
        const auto second = keccak::measure(variant::from_output_bits(512), 1 << 20, 4);
        const double ratio = second.bytes_per_second / first.bytes_per_second;
        return ratio > 0.85 && ratio < 1.15;
    });
}

TEST_CASE("rate scaling requires megabyte messages") {
    CHECK_THROWS_AS(keccak::run_rate_scaling(1 << 16, 4), std::invalid_argument);
}

TEST_CASE("output formats") {
    const keccak::bench_result fake{variant::from_output_bits(256), 1 << 20, 16, 5, 2,
                                    0.012, 1.0e9, 3.4};
    SECTION("machine-readable line has six comma-separated fields") {
        std::ostringstream out;
        keccak::print_machine_readable(out, fake);
        const std::string line = out.str();
        CHECK(line.starts_with("256,1048576,16,"));
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
        CHECK(line.back() == '\n');
    }
    SECTION("cycles column is empty without a frequency") {
        auto no_hz = fake;
        no_hz.cycles_per_byte.reset();
        std::ostringstream out;
        keccak::print_machine_readable(out, no_hz);
        CHECK(out.str().ends_with(",\n"));
    }
    SECTION("table documents the methodology") {
        std::ostringstream out;
        keccak::print_table(out, std::span(&fake, 1));
        CHECK(out.str().find("median of 5 timed runs after 2 warm-up runs") !=
              std::string::npos);
        CHECK(out.str().find("SHA3-256") != std::string::npos);
    }
}
