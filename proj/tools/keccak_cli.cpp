// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: hashing, arbitrary-length output, prefix MACs,
// known-answer-test verification, throughput benchmarks and a self-test.
// Exit codes: 0 success, 1 I/O or data error, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "keccak/keccak.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_data_error = 1;
constexpr int exit_usage_error = 2;

void stream_into(std::istream& in, keccak::hash_context& ctx) {
    std::vector<std::uint8_t> buffer(64 * 1024);
    while (in) {
        in.read(reinterpret_cast<char*>(buffer.data()),
                static_cast<std::streamsize>(buffer.size()));
        const auto got = static_cast<std::size_t>(in.gcount());
        if (got > 0) ctx.update(std::span(buffer.data(), got));
    }
    if (in.bad()) throw std::runtime_error("read error on input stream");
}

// Message source shared by hash/xof/mac: exactly one of --hex or a file
// path ('-' meaning stdin). Files go through the streaming context in
// fixed-size chunks, so arbitrarily large inputs use bounded memory.
struct input_source {
    std::string hex_text;
    std::string file_path;
    CLI::Option* hex_option = nullptr;
    CLI::Option* file_option = nullptr;

    void attach(CLI::App& cmd) {
        hex_option = cmd.add_option("--hex", hex_text, "message as an even-length hex string");
        file_option = cmd.add_option("input", file_path, "input file path, or '-' for stdin");
    }

    void feed(keccak::hash_context& ctx) const {
        const bool have_hex = hex_option->count() > 0;
        const bool have_file = file_option->count() > 0;
        if (have_hex == have_file)
            throw std::invalid_argument(
                    "provide exactly one input: --hex <str> or a file path ('-' for stdin)");
        if (have_hex) {
            const auto bytes = keccak::from_hex(hex_text);
            ctx.update(bytes);
            return;
        }
        if (file_path == "-") {
            stream_into(std::cin, ctx);
            return;
        }
        std::ifstream in(file_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + file_path);
        stream_into(in, ctx);
    }
};

struct cli_options {
    unsigned variant_bits = 256;
    std::string mode_name = "keccak";
    input_source input;
    std::string key_hex;
    std::size_t out_bytes = 0;
    std::size_t message_bytes = 1 << 20;
    std::size_t repetitions = 16;
    double cpu_hz = 0.0;
    bool machine_readable = false;
    bool scaling = false;
    std::string kat_path;
};

void add_variant_and_mode(CLI::App& cmd, cli_options& opts) {
    cmd.add_option("--variant", opts.variant_bits, "output size: 224, 256, 384 or 512")
            ->required();
    cmd.add_option("--mode", opts.mode_name, "padding generation: keccak (default) or fips202");
}

int run_hash(const cli_options& opts, std::size_t out_bytes_override = 0,
             const std::vector<std::uint8_t>* key = nullptr) {
    const auto v = keccak::variant::from_output_bits(opts.variant_bits);
    const auto mode = keccak::domain_mode_from_string(opts.mode_name);
    keccak::hash_context ctx(keccak::params_for(v), keccak::domain_suffix(mode));
    if (key) {
        if (key->empty()) throw std::invalid_argument("MAC key must be non-empty");
        ctx.update(*key);
    }
    opts.input.feed(ctx);
    const std::size_t out_bytes = out_bytes_override ? out_bytes_override : v.output_bytes();
    std::cout << keccak::to_hex(ctx.finalize(out_bytes * 8)) << '\n';
    return exit_ok;
}

int run_kat(const cli_options& opts) {
    const auto v = keccak::variant::from_output_bits(opts.variant_bits);
    const auto mode = keccak::domain_mode_from_string(opts.mode_name);
    const auto records = keccak::load_kat_file(opts.kat_path);
    const auto summary = keccak::run_kat(records, v, mode);
    if (records.empty())
        std::cerr << "warning: " << opts.kat_path << " contains no records\n";
    std::cout << "passed=" << summary.passed << " failed=" << summary.failed
              << " skipped=" << summary.skipped << '\n';
    return summary.failed == 0 ? exit_ok : exit_data_error;
}

int run_bench(const cli_options& opts) {
    std::vector<keccak::bench_result> results;
    std::optional<keccak::rate_scaling_report> scaling;
    if (opts.scaling) {
        scaling = keccak::run_rate_scaling(opts.message_bytes, opts.repetitions, opts.cpu_hz);
        results.assign(scaling->results.begin(), scaling->results.end());
    } else {
        for (const auto v : keccak::variant::all())
            results.push_back(
                    keccak::measure(v, opts.message_bytes, opts.repetitions, opts.cpu_hz));
    }
    if (opts.machine_readable) {
        for (const auto& r : results) keccak::print_machine_readable(std::cout, r);
    } else {
        keccak::print_table(std::cout, results);
    }
    if (scaling) {
        std::cout << "# throughput ratio 256/512: " << scaling->ratio_256_vs_512
                  << " (rate ratio " << scaling->expected_256_vs_512 << ")\n"
                  << "# throughput ratio 224/256: " << scaling->ratio_224_vs_256
                  << " (rate ratio " << scaling->expected_224_vs_256 << ")\n"
                  << "# throughput monotone in rate: "
                  << (scaling->monotone_by_rate ? "yes" : "no") << '\n';
    }
    return exit_ok;
}

int run_selftest() {
    const auto report = keccak::run_selftest();
    for (const auto& failure : report.failures) std::cout << "FAIL: " << failure << '\n';
    std::cout << (report.ok ? "self-test passed" : "self-test FAILED") << '\n';
    return report.ok ? exit_ok : exit_data_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Keccak sponge / SHA-3 hashing, verification and benchmarking"};
    app.require_subcommand(1);
    cli_options opts;

    auto* hash_cmd = app.add_subcommand("hash", "hash a message to a fixed-size digest");
    add_variant_and_mode(*hash_cmd, opts);
    opts.input.attach(*hash_cmd);

    auto* xof_cmd = app.add_subcommand("xof", "squeeze an arbitrary number of output bytes");
    add_variant_and_mode(*xof_cmd, opts);
    opts.input.attach(*xof_cmd);
    xof_cmd->add_option("--out-bytes", opts.out_bytes, "number of output bytes")->required();

    auto* mac_cmd = app.add_subcommand("mac", "prefix MAC: hash of key || message");
    add_variant_and_mode(*mac_cmd, opts);
    opts.input.attach(*mac_cmd);
    mac_cmd->add_option("--key", opts.key_hex, "key as a hex string")->required();

    auto* kat_cmd = app.add_subcommand("kat", "verify a known-answer-test file");
    add_variant_and_mode(*kat_cmd, opts);
    kat_cmd->add_option("file", opts.kat_path, "KAT file (Len/Msg/MD records)")->required();

    auto* bench_cmd = app.add_subcommand("bench", "measure hashing throughput");
    bench_cmd->add_option("--message-bytes", opts.message_bytes,
                          "message size per hash (default 1 MiB)");
    bench_cmd->add_option("--reps", opts.repetitions, "hashes per timed run (default 16)");
    bench_cmd->add_option("--cpu-hz", opts.cpu_hz,
                          "CPU frequency; enables the cycles/byte column");
    bench_cmd->add_flag("--machine-readable", opts.machine_readable,
                        "CSV lines: variant,msg_bytes,reps,elapsed_s,bytes_per_s,cycles_per_byte");
    bench_cmd->add_flag("--scaling", opts.scaling,
                        "also report throughput ratios against the rate ratios");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in smoke checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (hash_cmd->parsed()) return run_hash(opts);
        if (xof_cmd->parsed()) {
            if (opts.out_bytes == 0)
                throw std::invalid_argument("--out-bytes must be at least 1");
            return run_hash(opts, opts.out_bytes);
        }
        if (mac_cmd->parsed()) {
            const auto key = keccak::from_hex(opts.key_hex);
            return run_hash(opts, 0, &key);
        }
        if (kat_cmd->parsed()) return run_kat(opts);
        if (bench_cmd->parsed()) return run_bench(opts);
        if (selftest_cmd->parsed()) return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data_error;
    }
    return exit_usage_error;
}
