// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "keccak/errors.hpp"
#include "keccak/permutation.hpp"
#include "keccak/state.hpp"

namespace keccak {

/// Sponge geometry: a b = 25w bit state split into an r-bit rate and a
/// c = b - r bit capacity.
class sponge_params {
public:
    sponge_params(lane_width w, unsigned rate_bits) : width_(w), rate_bits_(rate_bits) {
        if (rate_bits == 0 || rate_bits % 8 != 0)
            throw std::invalid_argument("rate must be a positive multiple of 8 bits");
        if (rate_bits >= 25 * w.bits())
            throw std::invalid_argument("rate must leave a non-empty capacity");
    }

    lane_width width() const { return width_; }
    unsigned rate_bits() const { return rate_bits_; }
    unsigned rate_bytes() const { return rate_bits_ / 8; }
    unsigned capacity_bits() const { return 25 * width_.bits() - rate_bits_; }
    unsigned width_bits() const { return 25 * width_.bits(); }
    unsigned rounds() const { return width_.rounds(); }

    bool operator==(const sponge_params&) const = default;

private:
    lane_width width_;
    unsigned rate_bits_;
};

namespace detail {

/// Bytes appended to a message of length `message_len`: the domain byte
/// (trailing bits plus the first pad bit), zero filler, and a final bit in
/// the top of the last byte. XORing 0x80 folds the single-byte case.
inline std::vector<std::uint8_t> padding_tail(std::size_t message_len, unsigned rate_bytes,
                                              std::uint8_t domain) {
    std::vector<std::uint8_t> tail(rate_bytes - message_len % rate_bytes, 0);
    tail.front() = domain;
    tail.back() ^= 0x80;
    return tail;
}

inline void absorb_block(state& s, std::span<const std::uint8_t> block,
                         const sponge_params& params, std::uint64_t& permutation_calls) {
    xor_rate_block(s, block, params.rate_bits());
    keccak_f(s);
    ++permutation_calls;
}

}  // namespace detail

/// Append a 1 bit, as few 0 bits as possible, and a final 1 bit so the
/// result fills whole r-bit blocks. At byte granularity: 0x01, zero bytes,
/// 0x80, collapsing to 0x81 when only one byte is free.
inline std::vector<std::uint8_t> pad10star1(std::span<const std::uint8_t> message,
                                            unsigned rate_bits) {
    if (rate_bits == 0 || rate_bits % 8 != 0)
        throw std::invalid_argument("rate must be a positive multiple of 8 bits");
    const auto tail = detail::padding_tail(message.size(), rate_bits / 8, 0x01);
    std::vector<std::uint8_t> padded;
    padded.reserve(message.size() + tail.size());
    padded.insert(padded.end(), message.begin(), message.end());
    padded.insert(padded.end(), tail.begin(), tail.end());
    return padded;
}

/// Inverse of pad10star1; rejects anything that padding could not produce.
inline std::vector<std::uint8_t> unpad10star1(std::span<const std::uint8_t> padded,
                                              unsigned rate_bits) {
    if (rate_bits == 0 || rate_bits % 8 != 0)
        throw std::invalid_argument("rate must be a positive multiple of 8 bits");
    const unsigned rate_bytes = rate_bits / 8;
    if (padded.empty() || padded.size() % rate_bytes != 0)
        throw padding_error("padded length is not a positive multiple of the block size");
    if (!(padded.back() & 0x80))
        throw padding_error("final padding bit is missing");

    const std::uint8_t last = padded.back() ^ 0x80;
    std::size_t marker = padded.size() - 1;  // index of the byte holding the first pad bit
    if (last == 0x00) {
        while (marker > 0 && padded[marker - 1] == 0x00 &&
               padded.size() - marker < rate_bytes)
            --marker;
        if (marker == 0 || padded.size() - (marker - 1) > rate_bytes)
            throw padding_error("padding marker not found within one block");
        --marker;
        if (padded[marker] != 0x01)
            throw padding_error("padding filler contains unexpected bits");
    } else if (last != 0x01) {
        throw padding_error("padding filler contains unexpected bits");
    }
    return {padded.begin(), padded.begin() + static_cast<std::ptrdiff_t>(marker)};
}

/// Absorb a whole message (padded with pad10*1) into a fresh state.
inline state absorb(const sponge_params& params, std::span<const std::uint8_t> message,
                    std::uint64_t* permutation_calls = nullptr) {
    state s(params.width());
    std::uint64_t calls = 0;
    const unsigned rate_bytes = params.rate_bytes();
    std::size_t offset = 0;
    while (message.size() - offset >= rate_bytes) {
        detail::absorb_block(s, message.subspan(offset, rate_bytes), params, calls);
        offset += rate_bytes;
    }
    std::vector<std::uint8_t> final_block(message.begin() + static_cast<std::ptrdiff_t>(offset),
                                          message.end());
    const auto tail = detail::padding_tail(final_block.size(), rate_bytes, 0x01);
    final_block.insert(final_block.end(), tail.begin(), tail.end());
    detail::absorb_block(s, final_block, params, calls);
    if (permutation_calls) *permutation_calls += calls;
    return s;
}

/// Incremental reader over the squeezing phase. Reading n1 then n2 bytes
/// yields the same stream as reading n1+n2 at once; the permutation runs
/// only when a fresh rate block is actually needed.
class xof_reader {
public:
    xof_reader(state after_absorb, const sponge_params& params)
        : params_(params), state_(std::move(after_absorb)),
          block_(extract_rate_bytes(state_, params.rate_bits())) {}

    void read(std::span<std::uint8_t> out) {
        std::size_t produced = 0;
        while (produced < out.size()) {
            if (position_ == block_.size()) {
                keccak_f(state_);
                ++permutation_calls_;
                block_ = extract_rate_bytes(state_, params_.rate_bits());
                position_ = 0;
            }
            const std::size_t take = std::min(out.size() - produced, block_.size() - position_);
            std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(position_), take,
                        out.begin() + static_cast<std::ptrdiff_t>(produced));
            position_ += take;
            produced += take;
        }
    }

    std::vector<std::uint8_t> read(std::size_t n_bytes) {
        std::vector<std::uint8_t> out(n_bytes);
        read(std::span<std::uint8_t>(out));
        return out;
    }

    /// Permutations run while squeezing (the absorb phase is not included).
    std::uint64_t permutation_calls() const { return permutation_calls_; }

private:
    sponge_params params_;
    state state_;
    std::vector<std::uint8_t> block_;
    std::size_t position_ = 0;
    std::uint64_t permutation_calls_ = 0;
};

/// One-shot squeeze of out_bits bits from an absorbed state.
inline std::vector<std::uint8_t> squeeze(const state& after_absorb, const sponge_params& params,
                                         std::size_t out_bits,
                                         std::uint64_t* permutation_calls = nullptr) {
    if (out_bits == 0 || out_bits % 8 != 0)
        throw std::invalid_argument("output length must be a positive multiple of 8 bits");
    xof_reader reader(after_absorb, params);
    auto out = reader.read(out_bits / 8);
    if (permutation_calls) *permutation_calls += reader.permutation_calls();
    return out;
}

/// absorb then squeeze; the counter accumulates both phases.
inline std::vector<std::uint8_t> sponge_hash(const sponge_params& params,
                                             std::span<const std::uint8_t> message,
                                             std::size_t out_bits,
                                             std::uint64_t* permutation_calls = nullptr) {
    const state s = absorb(params, message, permutation_calls);
    return squeeze(s, params, out_bits, permutation_calls);
}

/// Streaming absorb state: whole blocks go straight into the permutation,
/// at most one partial block is buffered. Any chunking of a message yields
/// the digest of the concatenation.
class hash_context {
public:
    explicit hash_context(const sponge_params& params, std::uint8_t domain = 0x01)
        : params_(params), domain_(domain), state_(params.width()) {
        buffer_.reserve(params.rate_bytes());
    }

    void update(std::span<const std::uint8_t> chunk) {
        if (finalized_) throw state_error("update after finalize");
        const unsigned rate_bytes = params_.rate_bytes();
        std::size_t offset = 0;
        if (!buffer_.empty()) {
            const std::size_t take = std::min<std::size_t>(rate_bytes - buffer_.size(),
                                                           chunk.size());
            buffer_.insert(buffer_.end(), chunk.begin(),
                           chunk.begin() + static_cast<std::ptrdiff_t>(take));
            offset = take;
            if (buffer_.size() < rate_bytes) return;
            detail::absorb_block(state_, buffer_, params_, permutation_calls_);
            buffer_.clear();
        }
        while (chunk.size() - offset >= rate_bytes) {
            detail::absorb_block(state_, chunk.subspan(offset, rate_bytes), params_,
                                 permutation_calls_);
            offset += rate_bytes;
        }
        buffer_.insert(buffer_.end(), chunk.begin() + static_cast<std::ptrdiff_t>(offset),
                       chunk.end());
    }

    /// Pad, absorb the final block, and hand the state over for squeezing.
    xof_reader finalize_xof() {
        if (finalized_) throw state_error("finalize called twice");
        finalized_ = true;
        const auto tail = detail::padding_tail(buffer_.size(), params_.rate_bytes(), domain_);
        buffer_.insert(buffer_.end(), tail.begin(), tail.end());
        detail::absorb_block(state_, buffer_, params_, permutation_calls_);
        buffer_.clear();
        return xof_reader(state_, params_);
    }

    std::vector<std::uint8_t> finalize(std::size_t out_bits) {
        if (out_bits == 0 || out_bits % 8 != 0)
            throw std::invalid_argument("output length must be a positive multiple of 8 bits");
        return finalize_xof().read(out_bits / 8);
    }

    const sponge_params& params() const { return params_; }
    bool finalized() const { return finalized_; }

    /// Permutations run by the absorb phase (including the padded block).
    std::uint64_t permutation_calls() const { return permutation_calls_; }

private:
    sponge_params params_;
    std::uint8_t domain_;
    state state_;
    std::vector<std::uint8_t> buffer_;
    bool finalized_ = false;
    std::uint64_t permutation_calls_ = 0;
};

}  // namespace keccak
