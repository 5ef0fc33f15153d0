// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace keccak {

/// Width of one lane in bits. The permutation is defined for the seven
/// power-of-two widths up to 64; production hashing uses 64, the smaller
/// widths make the permutation cheap enough to verify exhaustively.
class lane_width {
public:
    static constexpr bool is_valid(unsigned bits) {
        return bits != 0 && bits <= 64 && (bits & (bits - 1)) == 0;
    }

    explicit constexpr lane_width(unsigned bits) : bits_(bits) {
        if (!is_valid(bits))
            throw std::invalid_argument("lane width must be a power of two in 1..64");
        log2_ = 0;
        for (unsigned b = bits; b > 1; b >>= 1) ++log2_;
    }

    constexpr unsigned bits() const { return bits_; }
    constexpr unsigned log2() const { return log2_; }
    constexpr unsigned rounds() const { return 12 + 2 * log2_; }

    /// Low `bits()` ones; lane values always stay below 2^w.
    constexpr std::uint64_t mask() const {
        return bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
    }

    constexpr bool operator==(const lane_width&) const = default;

private:
    unsigned bits_;
    unsigned log2_{0};
};

/// The 5x5 grid of lanes. Lane (x, y) sits at linear position 5y+x; state
/// bit i lives in lane i/w at in-lane position i mod w.
struct state {
    std::array<std::uint64_t, 25> lanes{};
    lane_width width;

    explicit state(lane_width w) : width(w) {}

    std::uint64_t& lane(unsigned x, unsigned y) { return lanes[5 * y + x]; }
    const std::uint64_t& lane(unsigned x, unsigned y) const { return lanes[5 * y + x]; }

    unsigned width_bits() const { return 25 * width.bits(); }

    bool bit(std::size_t i) const {
        const unsigned w = width.bits();
        return (lanes[i / w] >> (i % w)) & 1;
    }

    bool operator==(const state&) const = default;
};

/// w/8-byte little-endian words from a byte stream; requires w >= 8.
inline std::vector<std::uint64_t> bytes_to_lane_words(std::span<const std::uint8_t> data,
                                                      lane_width w) {
    if (w.bits() < 8)
        throw std::invalid_argument("byte-level lane conversion requires a lane width of 8+ bits");
    const unsigned lane_bytes = w.bits() / 8;
    if (data.size() % lane_bytes != 0)
        throw std::invalid_argument("input length is not a multiple of the lane size");
    std::vector<std::uint64_t> words(data.size() / lane_bytes);
    for (std::size_t i = 0; i < data.size(); ++i)
        words[i / lane_bytes] |= static_cast<std::uint64_t>(data[i]) << (8 * (i % lane_bytes));
    return words;
}

inline std::vector<std::uint8_t> lane_words_to_bytes(std::span<const std::uint64_t> words,
                                                     lane_width w) {
    if (w.bits() < 8)
        throw std::invalid_argument("byte-level lane conversion requires a lane width of 8+ bits");
    const unsigned lane_bytes = w.bits() / 8;
    std::vector<std::uint8_t> data(words.size() * lane_bytes);
    for (std::size_t i = 0; i < data.size(); ++i)
        data[i] = static_cast<std::uint8_t>(words[i / lane_bytes] >> (8 * (i % lane_bytes)));
    return data;
}

namespace detail {

inline void check_rate(const state& s, unsigned rate_bits) {
    if (rate_bits == 0 || rate_bits % 8 != 0)
        throw std::invalid_argument("rate must be a positive multiple of 8 bits");
    if (rate_bits >= s.width_bits())
        throw std::invalid_argument("rate must leave a non-empty capacity");
}

}  // namespace detail

/// XOR a rate-sized block into the first `rate_bits` bits of the state.
/// The capacity part (bits >= rate_bits) is never touched.
inline void xor_rate_block(state& s, std::span<const std::uint8_t> block, unsigned rate_bits) {
    detail::check_rate(s, rate_bits);
    if (block.size() != rate_bits / 8)
        throw std::invalid_argument("block length does not match the rate");
    const unsigned w = s.width.bits();
    if (w >= 8) {
        const unsigned lane_bytes = w / 8;
        for (std::size_t i = 0; i < block.size(); ++i)
            s.lanes[i / lane_bytes] ^= static_cast<std::uint64_t>(block[i]) << (8 * (i % lane_bytes));
    } else {
        for (unsigned i = 0; i < rate_bits; ++i) {
            const std::uint64_t b = (block[i / 8] >> (i % 8)) & 1;
            s.lanes[i / w] ^= b << (i % w);
        }
    }
}

/// Read the first `rate_bits` bits of the state as rate_bits/8 bytes.
inline std::vector<std::uint8_t> extract_rate_bytes(const state& s, unsigned rate_bits) {
    detail::check_rate(s, rate_bits);
    std::vector<std::uint8_t> out(rate_bits / 8, 0);
    const unsigned w = s.width.bits();
    if (w >= 8) {
        const unsigned lane_bytes = w / 8;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<std::uint8_t>(s.lanes[i / lane_bytes] >> (8 * (i % lane_bytes)));
    } else {
        for (unsigned i = 0; i < rate_bits; ++i)
            out[i / 8] |= static_cast<std::uint8_t>(s.bit(i)) << (i % 8);
    }
    return out;
}

}  // namespace keccak
