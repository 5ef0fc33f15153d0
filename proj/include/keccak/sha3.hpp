// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "keccak/sponge.hpp"

namespace keccak {

/// Padding generation. `keccak` is the competition-era rule (pad10*1 right
/// after the message); `fips202` absorbs the 01 domain bits first, turning
/// the leading pad byte into 0x06.
enum class domain_mode : std::uint8_t { keccak, fips202 };

inline constexpr std::uint8_t domain_suffix(domain_mode mode) {
    return mode == domain_mode::keccak ? 0x01 : 0x06;
}

inline domain_mode domain_mode_from_string(std::string_view name) {
    if (name == "keccak") return domain_mode::keccak;
    if (name == "fips202") return domain_mode::fips202;
    throw std::invalid_argument("unknown mode: " + std::string(name) +
                                " (expected keccak or fips202)");
}

inline std::string_view to_string(domain_mode mode) {
    return mode == domain_mode::keccak ? "keccak" : "fips202";
}

/// One of the four fixed output sizes. The capacity is twice the output
/// size and the rate is what remains of the 1600-bit state.
class variant {
public:
    static variant from_output_bits(unsigned n) {
        for (const unsigned allowed : {224u, 256u, 384u, 512u})
            if (n == allowed) return variant(n);
        throw std::invalid_argument("unsupported output size " + std::to_string(n) +
                                    " (expected 224, 256, 384 or 512)");
    }

    static const std::array<variant, 4>& all() {
        static const std::array<variant, 4> table{variant(224), variant(256), variant(384),
                                                  variant(512)};
        return table;
    }

    unsigned output_bits() const { return n_; }
    unsigned output_bytes() const { return n_ / 8; }
    unsigned capacity_bits() const { return 2 * n_; }
    unsigned rate_bits() const { return 1600 - 2 * n_; }

    bool operator==(const variant&) const = default;

private:
    explicit variant(unsigned n) : n_(n) {}
    unsigned n_;
};

inline sponge_params params_for(variant v) {
    return sponge_params(lane_width(64), v.rate_bits());
}

/// Fixed-size digest of a whole message.
inline std::vector<std::uint8_t> keccak_hash(variant v, std::span<const std::uint8_t> message,
                                             domain_mode mode = domain_mode::keccak) {
    hash_context ctx(params_for(v), domain_suffix(mode));
    ctx.update(message);
    return ctx.finalize(v.output_bits());
}

/// Arbitrary-length output with the variant's sponge geometry.
inline std::vector<std::uint8_t> keccak_xof(variant v, std::span<const std::uint8_t> message,
                                            std::size_t out_bits,
                                            domain_mode mode = domain_mode::keccak) {
    hash_context ctx(params_for(v), domain_suffix(mode));
    ctx.update(message);
    return ctx.finalize(out_bits);
}

/// MAC by key prepending: tag = H(key || message). Sound here because the
/// digest reveals nothing about the capacity half of the state, so a tag
/// cannot be extended the way iterated-compression hashes can.
inline std::vector<std::uint8_t> prefix_mac(variant v, std::span<const std::uint8_t> key,
                                            std::span<const std::uint8_t> message,
                                            domain_mode mode = domain_mode::keccak) {
    if (key.empty()) throw std::invalid_argument("MAC key must be non-empty");
    hash_context ctx(params_for(v), domain_suffix(mode));
    ctx.update(key);
    ctx.update(message);
    return ctx.finalize(v.output_bits());
}

struct extension_attack_report {
    std::size_t trials{0};
    std::size_t forgeries{0};
    /// The control attacker is handed the full internal state instead of
    /// the digest; its forgery must succeed on every trial, proving the
    /// simulation actually performs sponge continuation.
    bool positive_control_forged{true};
};

/// Simulate a length-extension attacker against the prefix MAC. Per trial,
/// the attacker rebuilds a state from the published tag alone (capacity
/// zeroed), absorbs its own suffix, and squeezes a candidate tag for
/// key || message || glue-padding || suffix.
inline extension_attack_report demonstrate_extension_resistance(
        variant v, std::size_t trials, std::uint64_t seed = 0xe47e4d5107ULL) {
    if (trials == 0) throw std::invalid_argument("trial count must be at least 1");

    const sponge_params params = params_for(v);
    const unsigned rate_bytes = params.rate_bytes();
    std::mt19937_64 rng(seed);
    auto random_bytes = [&rng](std::size_t n) {
        std::vector<std::uint8_t> out(n);
        for (auto& b : out) b = static_cast<std::uint8_t>(rng());
        return out;
    };

    // Sponge continuation: absorb a padded suffix on top of an existing
    // state and read a tag from the result.
    auto continue_and_squeeze = [&](state s, std::span<const std::uint8_t> suffix) {
        std::uint64_t calls = 0;
        const auto padded = pad10star1(suffix, params.rate_bits());
        for (std::size_t off = 0; off < padded.size(); off += rate_bytes)
            detail::absorb_block(s, std::span(padded).subspan(off, rate_bytes), params, calls);
        auto block = extract_rate_bytes(s, params.rate_bits());
        block.resize(v.output_bytes());
        return block;
    };

    extension_attack_report report;
    report.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto key = random_bytes(1 + rng() % 32);
        const auto message = random_bytes(rng() % 101);
        const auto suffix = random_bytes(1 + rng() % 64);

        std::vector<std::uint8_t> keyed(key);
        keyed.insert(keyed.end(), message.begin(), message.end());
        const auto tag = prefix_mac(v, key, message);

        // What the extended message really hashes to: the glue is the
        // padding the sponge inserted after key || message.
        const auto glue = detail::padding_tail(keyed.size(), rate_bytes, 0x01);
        std::vector<std::uint8_t> extended(message);
        extended.insert(extended.end(), glue.begin(), glue.end());
        extended.insert(extended.end(), suffix.begin(), suffix.end());
        const auto true_tag = prefix_mac(v, key, extended);

        // Digest-only attacker: tag in the rate, zero everywhere else.
        state guessed(params.width());
        std::vector<std::uint8_t> rate_block(rate_bytes, 0);
        std::copy(tag.begin(), tag.end(), rate_block.begin());
        xor_rate_block(guessed, rate_block, params.rate_bits());
        if (continue_and_squeeze(guessed, suffix) == true_tag) ++report.forgeries;

        // Control attacker: the genuine absorbed state.
        const state internal = absorb(params, keyed);
        if (continue_and_squeeze(internal, suffix) != true_tag)
            report.positive_control_forged = false;
    }
    return report;
}

}  // namespace keccak
