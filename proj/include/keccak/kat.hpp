// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "keccak/errors.hpp"
#include "keccak/hex.hpp"
#include "keccak/sha3.hpp"

namespace keccak {

/// One `Len = / Msg = / MD =` entry of a known-answer-test file.
struct kat_record {
    std::size_t len_bits{0};
    std::vector<std::uint8_t> message;  // ceil(len_bits/8) bytes; ignored when len_bits == 0
    std::vector<std::uint8_t> digest;
};

struct kat_summary {
    std::size_t passed{0};
    std::size_t failed{0};
    std::size_t skipped{0};  // entries whose bit length is not byte-aligned
};

namespace detail {

inline std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

}  // namespace detail

/// Parse the Len/Msg/MD record format. Blank lines separate records;
/// lines starting with '#' or '[' are headers and are ignored.
inline std::vector<kat_record> parse_kat_stream(std::istream& in) {
    std::vector<kat_record> records;
    bool have_len = false, have_msg = false;
    std::size_t len_bits = 0;
    std::vector<std::uint8_t> msg;
    std::string line;
    std::size_t line_no = 0;

    auto fail = [&line_no](const std::string& why) {
        throw kat_format_error("line " + std::to_string(line_no) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = detail::trim(line);
        if (text.empty() || text.front() == '#' || text.front() == '[') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        try {
            if (key == "Len") {
                if (have_len) fail("Len repeated before the record completed");
                len_bits = std::stoull(value);
                have_len = true;
                have_msg = false;
            } else if (key == "Msg") {
                if (!have_len) fail("Msg before Len");
                msg = from_hex(value);
                have_msg = true;
            } else if (key == "MD") {
                if (!have_len) fail("MD before Len");
                kat_record record;
                record.len_bits = len_bits;
                if (len_bits > 0) {
                    if (!have_msg) fail("record has no Msg");
                    if (msg.size() != (len_bits + 7) / 8)
                        fail("Msg length does not match Len");
                    record.message = std::move(msg);
                }
                record.digest = from_hex(value);
                if (record.digest.empty()) fail("empty MD");
                records.push_back(std::move(record));
                have_len = false;
                have_msg = false;
                msg.clear();
            }
            // unknown keys are tolerated; official files carry no others
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        } catch (const std::out_of_range&) {
            fail("numeric value out of range");
        }
    }
    if (have_len) fail("file ends in the middle of a record");
    return records;
}

inline std::vector<kat_record> load_kat_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw kat_format_error("cannot open " + path.string());
    return parse_kat_stream(in);
}

/// Hash every byte-aligned record and compare digests. Entries with a bit
/// length that is not a whole number of bytes are counted as skipped.
inline kat_summary run_kat(const std::vector<kat_record>& records, variant v, domain_mode mode) {
    kat_summary summary;
    for (const auto& record : records) {
        if (record.len_bits % 8 != 0) {
            ++summary.skipped;
            continue;
        }
        const auto digest = keccak_hash(v, record.message, mode);
        if (digest == record.digest)
            ++summary.passed;
        else
            ++summary.failed;
    }
    return summary;
}

inline kat_summary run_kat_file(const std::filesystem::path& path, variant v, domain_mode mode) {
    return run_kat(load_kat_file(path), v, mode);
}

}  // namespace keccak
