// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "keccak/errors.hpp"
#include "keccak/sha3.hpp"

namespace keccak {

namespace detail {

template <class T>
inline void do_not_optimize(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
    asm volatile("" : : "g"(value) : "memory");
#else
    volatile T sink = value;
    (void)sink;
#endif
}

}  // namespace detail

struct bench_result {
    variant v;
    std::size_t message_bytes;
    std::size_t repetitions;
    unsigned timed_runs;
    unsigned warmup_runs;
    double elapsed_seconds;  // median over the timed runs
    double bytes_per_second;
    std::optional<double> cycles_per_byte;  // only when a CPU frequency was supplied
};

/// Time `repetitions` hashes of one fixed random message per run, after
/// warm-up runs that don't count. The message buffer is allocated once and
/// reused; the digest is sunk through an optimization barrier. Timing is
/// wall clock, so cycles/byte needs the caller to supply the frequency;
/// pass cpu_hz = 0 when it is unknown.
inline bench_result measure(variant v, std::size_t message_bytes, std::size_t repetitions,
                            double cpu_hz = 0.0, unsigned timed_runs = 5,
                            unsigned warmup_runs = 2, std::uint64_t seed = 0xbe9c4ULL) {
    if (message_bytes == 0) throw std::invalid_argument("message size must be at least 1 byte");
    if (repetitions == 0) throw std::invalid_argument("repetition count must be at least 1");
    if (timed_runs == 0) throw std::invalid_argument("need at least one timed run");

    std::vector<std::uint8_t> message(message_bytes);
    std::mt19937_64 rng(seed);
    for (auto& b : message) b = static_cast<std::uint8_t>(rng());

    const auto reference_digest = keccak_hash(v, message);

    auto one_run = [&] {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t rep = 0; rep < repetitions; ++rep) {
            const auto digest = keccak_hash(v, message);
            detail::do_not_optimize(digest.data());
        }
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    for (unsigned i = 0; i < warmup_runs; ++i) one_run();

    constexpr double min_measurable_seconds = 1e-4;
    std::vector<double> elapsed;
    elapsed.reserve(timed_runs);
    for (unsigned i = 0; i < timed_runs; ++i) {
        const double t = one_run();
        if (t < min_measurable_seconds)
            throw measurement_error(
                "timed run finished below the clock resolution floor; increase repetitions "
                "or the message size");
        elapsed.push_back(t);
    }
    std::sort(elapsed.begin(), elapsed.end());
    const double median = elapsed[elapsed.size() / 2];

    if (keccak_hash(v, message) != reference_digest)
        throw std::logic_error("benchmark harness altered the hash result");

    bench_result result{v,          message_bytes,
                        repetitions, timed_runs,
                        warmup_runs, median,
                        static_cast<double>(message_bytes) * static_cast<double>(repetitions) /
                                median,
                        std::nullopt};
    if (cpu_hz > 0) result.cycles_per_byte = cpu_hz / result.bytes_per_second;
    return result;
}

struct rate_scaling_report {
    std::array<bench_result, 4> results;  // output sizes 224, 256, 384, 512
    double ratio_256_vs_512;
    double expected_256_vs_512;  // rate ratio 1088/576
    double ratio_224_vs_256;
    double expected_224_vs_256;  // rate ratio 1152/1088
    bool monotone_by_rate;
};

/// Measure all four variants on the same message size and relate their
/// throughputs to the rate ratios. Needs at least 1 MiB per message for
/// the ratios to settle.
inline rate_scaling_report run_rate_scaling(std::size_t message_bytes, std::size_t repetitions,
                                            double cpu_hz = 0.0) {
    if (message_bytes < (1u << 20))
        throw std::invalid_argument("rate scaling needs messages of at least 1 MiB");
    const auto& variants = variant::all();
    rate_scaling_report report{
            {measure(variants[0], message_bytes, repetitions, cpu_hz),
             measure(variants[1], message_bytes, repetitions, cpu_hz),
             measure(variants[2], message_bytes, repetitions, cpu_hz),
             measure(variants[3], message_bytes, repetitions, cpu_hz)},
            0, 1088.0 / 576.0, 0, 1152.0 / 1088.0, false};
    const auto tp = [&](unsigned i) { return report.results[i].bytes_per_second; };
    report.ratio_256_vs_512 = tp(1) / tp(3);
    report.ratio_224_vs_256 = tp(0) / tp(1);
    report.monotone_by_rate = tp(0) >= tp(1) && tp(1) >= tp(2) && tp(2) >= tp(3);
    return report;
}

inline void print_table(std::ostream& os, std::span<const bench_result> results) {
    if (!results.empty())
        os << "# median of " << results.front().timed_runs << " timed runs after "
           << results.front().warmup_runs
           << " warm-up runs; single-threaded; message buffer reused\n";
    os << std::left << std::setw(10) << "variant" << std::right << std::setw(12) << "msg_bytes"
       << std::setw(7) << "reps" << std::setw(12) << "elapsed_s" << std::setw(10) << "MiB/s"
       << std::setw(14) << "cycles/byte" << '\n';
    for (const auto& r : results) {
        os << std::left << std::setw(10)
           << ("SHA3-" + std::to_string(r.v.output_bits())) << std::right << std::setw(12)
           << r.message_bytes << std::setw(7) << r.repetitions << std::setw(12) << std::fixed
           << std::setprecision(4) << r.elapsed_seconds << std::setw(10) << std::setprecision(1)
           << r.bytes_per_second / (1024.0 * 1024.0);
        if (r.cycles_per_byte)
            os << std::setw(14) << std::setprecision(2) << *r.cycles_per_byte;
        else
            os << std::setw(14) << "-";
        os << '\n';
    }
    os.unsetf(std::ios::floatfield);
}

/// One CSV line: variant,msg_bytes,reps,elapsed_s,bytes_per_s,cycles_per_byte
inline void print_machine_readable(std::ostream& os, const bench_result& r) {
    os << r.v.output_bits() << ',' << r.message_bytes << ',' << r.repetitions << ','
       << std::fixed << std::setprecision(6) << r.elapsed_seconds << ','
       << std::setprecision(1) << r.bytes_per_second << ',';
    if (r.cycles_per_byte) os << std::setprecision(3) << *r.cycles_per_byte;
    os << '\n';
    os.unsetf(std::ios::floatfield);
}

}  // namespace keccak
