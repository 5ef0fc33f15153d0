// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "keccak/state.hpp"

namespace keccak {

/// Rotation amounts for the rho step, indexed [x][y].
using rho_offset_table = std::array<std::array<unsigned, 5>, 5>;

/// One constant per round; entries beyond 12+2*log2(w) stay unused for
/// narrow lanes.
using round_constant_table = std::array<std::uint64_t, 24>;

/// Walk the lane grid starting at (1,0), assigning (t+1)(t+2)/2 mod w and
/// stepping (x,y) -> (y, 2x+3y). Lane (0,0) keeps offset 0.
inline rho_offset_table generate_rho_offsets(lane_width w) {
    rho_offset_table offsets{};
    unsigned x = 1, y = 0;
    for (unsigned t = 0; t < 24; ++t) {
        offsets[x][y] = ((t + 1) * (t + 2) / 2) % w.bits();
        const unsigned nx = y, ny = (2 * x + 3 * y) % 5;
        x = nx;
        y = ny;
    }
    return offsets;
}

/// Round constants from the degree-8 LFSR (x^8 + x^6 + x^5 + x^4 + 1):
/// RC[i] has bit 2^j - 1 set to output bit j + 7i, truncated to w bits.
inline round_constant_table generate_round_constants(lane_width w) {
    round_constant_table rc{};
    std::uint8_t reg = 1;
    auto next_bit = [&reg] {
        const bool out = reg & 1;
        reg = (reg & 0x80) ? static_cast<std::uint8_t>((reg << 1) ^ 0x71)
                           : static_cast<std::uint8_t>(reg << 1);
        return out;
    };
    for (auto& constant : rc)
        for (unsigned j = 0; j <= 6; ++j)
            if (next_bit())
                constant |= std::uint64_t{1} << ((1u << j) - 1);
    for (auto& constant : rc) constant &= w.mask();
    return rc;
}

namespace detail {

inline std::uint64_t rotl_lane(std::uint64_t v, unsigned n, lane_width w) {
    const unsigned bits = w.bits();
    n %= bits;
    if (n == 0) return v & w.mask();
    return ((v << n) | (v >> (bits - n))) & w.mask();
}

inline const rho_offset_table& cached_rho_offsets(lane_width w) {
    static const auto tables = [] {
        std::array<rho_offset_table, 7> t{};
        for (unsigned l = 0; l <= 6; ++l) t[l] = generate_rho_offsets(lane_width(1u << l));
        return t;
    }();
    return tables[w.log2()];
}

inline const round_constant_table& cached_round_constants(lane_width w) {
    static const auto tables = [] {
        std::array<round_constant_table, 7> t{};
        for (unsigned l = 0; l <= 6; ++l) t[l] = generate_round_constants(lane_width(1u << l));
        return t;
    }();
    return tables[w.log2()];
}

}  // namespace detail

/// theta: every lane absorbs the parity of its two neighbour columns,
/// one of them rotated by a single bit.
inline void theta(state& s) {
    std::array<std::uint64_t, 5> c{};
    for (unsigned x = 0; x < 5; ++x)
        c[x] = s.lane(x, 0) ^ s.lane(x, 1) ^ s.lane(x, 2) ^ s.lane(x, 3) ^ s.lane(x, 4);
    for (unsigned x = 0; x < 5; ++x) {
        const std::uint64_t d = c[(x + 4) % 5] ^ detail::rotl_lane(c[(x + 1) % 5], 1, s.width);
        for (unsigned y = 0; y < 5; ++y) s.lane(x, y) ^= d;
    }
}

/// rho: rotate each lane by its fixed offset.
inline void rho(state& s) {
    const auto& offsets = detail::cached_rho_offsets(s.width);
    for (unsigned x = 0; x < 5; ++x)
        for (unsigned y = 0; y < 5; ++y)
            s.lane(x, y) = detail::rotl_lane(s.lane(x, y), offsets[x][y], s.width);
}

/// pi: move lane (x, y) to (y, 2x+3y).
inline void pi(state& s) {
    const auto old = s.lanes;
    for (unsigned x = 0; x < 5; ++x)
        for (unsigned y = 0; y < 5; ++y)
            s.lane(y, (2 * x + 3 * y) % 5) = old[5 * y + x];
}

/// chi: within each row, a(x) ^= ~a(x+1) & a(x+2).
inline void chi(state& s) {
    const std::uint64_t mask = s.width.mask();
    for (unsigned y = 0; y < 5; ++y) {
        std::array<std::uint64_t, 5> row{};
        for (unsigned x = 0; x < 5; ++x) row[x] = s.lane(x, y);
        for (unsigned x = 0; x < 5; ++x)
            s.lane(x, y) = row[x] ^ ((~row[(x + 1) % 5] & mask) & row[(x + 2) % 5]);
    }
}

/// iota: XOR the round constant into lane (0,0).
inline void iota(state& s, unsigned round_index) {
    if (round_index >= s.width.rounds())
        throw std::invalid_argument("round index out of range");
    s.lanes[0] ^= detail::cached_round_constants(s.width)[round_index];
}

namespace detail {

struct rho_pi_chain {
    std::array<unsigned, 24> position{};
    std::array<unsigned, 24> rotation{};
};

// The pi orbit of lane (1,0) visits all 24 moving lanes, so rho and pi
// collapse into a single pass with one carried temporary.
inline const rho_pi_chain& f1600_rho_pi_chain() {
    static const rho_pi_chain chain = [] {
        rho_pi_chain c{};
        unsigned x = 1, y = 0;
        for (unsigned t = 0; t < 24; ++t) {
            c.rotation[t] = ((t + 1) * (t + 2) / 2) % 64;
            const unsigned nx = y, ny = (2 * x + 3 * y) % 5;
            c.position[t] = 5 * ny + nx;
            x = nx;
            y = ny;
        }
        return c;
    }();
    return chain;
}

inline void permute_f1600(std::array<std::uint64_t, 25>& a) {
    static const round_constant_table rc = generate_round_constants(lane_width(64));
    const auto& chain = f1600_rho_pi_chain();
    for (unsigned round = 0; round < 24; ++round) {
        std::uint64_t c[5];
        for (unsigned x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (unsigned x = 0; x < 5; ++x) {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            a[x] ^= d;
            a[x + 5] ^= d;
            a[x + 10] ^= d;
            a[x + 15] ^= d;
            a[x + 20] ^= d;
        }
        std::uint64_t carried = a[1];
        for (unsigned i = 0; i < 24; ++i) {
            const unsigned j = chain.position[i];
            const std::uint64_t saved = a[j];
            a[j] = std::rotl(carried, static_cast<int>(chain.rotation[i]));
            carried = saved;
        }
        for (unsigned y = 0; y < 25; y += 5) {
            const std::uint64_t r0 = a[y], r1 = a[y + 1], r2 = a[y + 2], r3 = a[y + 3],
                                r4 = a[y + 4];
            a[y] = r0 ^ (~r1 & r2);
            a[y + 1] = r1 ^ (~r2 & r3);
            a[y + 2] = r2 ^ (~r3 & r4);
            a[y + 3] = r3 ^ (~r4 & r0);
            a[y + 4] = r4 ^ (~r0 & r1);
        }
        a[0] ^= rc[round];
    }
}

}  // namespace detail

/// The full permutation: 12+2*log2(w) rounds of theta-rho-pi-chi-iota.
inline void keccak_f(state& s) {
    if (s.width.bits() == 64) {
        detail::permute_f1600(s.lanes);
        return;
    }
    const unsigned rounds = s.width.rounds();
    for (unsigned i = 0; i < rounds; ++i) {
        theta(s);
        rho(s);
        pi(s);
        chi(s);
        iota(s, i);
    }
}

struct bijectivity_result {
    bool bijective{true};
    bool exhaustive{false};
    std::uint64_t inputs_tested{0};
    /// Distinct inputs with equal permutation outputs, when found.
    std::optional<std::pair<state, state>> collision;
};

namespace detail {

inline std::uint64_t pack_state(const state& s) {
    const unsigned w = s.width.bits();
    std::uint64_t v = 0;
    for (unsigned i = 0; i < 25; ++i) v |= s.lanes[i] << (i * w);
    return v;
}

inline state unpack_state(std::uint64_t v, lane_width w) {
    state s(w);
    for (unsigned i = 0; i < 25; ++i) s.lanes[i] = (v >> (i * w.bits())) & w.mask();
    return s;
}

inline state random_state(std::mt19937_64& rng, lane_width w) {
    state s(w);
    for (auto& lane : s.lanes) lane = rng() & w.mask();
    return s;
}

inline std::uint64_t fnv1a(const std::array<std::uint64_t, 25>& lanes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto lane : lanes)
        for (unsigned b = 0; b < 8; ++b) {
            h ^= (lane >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    return h;
}

}  // namespace detail

/// Collision search over the permutation: exhaustive over all 2^25 states
/// at w=1, sampled otherwise. A permutation must never collide; a found
/// collision is reported with the offending input pair.
inline bijectivity_result check_bijectivity(lane_width w, std::uint64_t samples = 1'000'000,
                                            std::uint64_t seed = 0x5b17ec7ed) {
    bijectivity_result result;
    if (w.bits() == 1) {
        result.exhaustive = true;
        const std::uint32_t total = 1u << 25;
        std::vector<bool> seen(total, false);
        for (std::uint32_t v = 0; v < total; ++v) {
            state s = detail::unpack_state(v, w);
            keccak_f(s);
            const auto out = static_cast<std::uint32_t>(detail::pack_state(s));
            ++result.inputs_tested;
            if (seen[out]) {
                // rescan for the earlier preimage to report the pair
                for (std::uint32_t u = 0; u < v; ++u) {
                    state t = detail::unpack_state(u, w);
                    keccak_f(t);
                    if (static_cast<std::uint32_t>(detail::pack_state(t)) == out) {
                        result.collision = {detail::unpack_state(u, w),
                                            detail::unpack_state(v, w)};
                        break;
                    }
                }
                result.bijective = false;
                return result;
            }
            seen[out] = true;
        }
        return result;
    }

    std::mt19937_64 rng(seed);
    if (25 * w.bits() <= 64) {
        std::unordered_set<std::uint64_t> inputs;
        std::unordered_map<std::uint64_t, std::uint64_t> outputs;  // out -> in
        inputs.reserve(samples * 2);
        outputs.reserve(samples * 2);
        while (result.inputs_tested < samples) {
            const state input = detail::random_state(rng, w);
            if (!inputs.insert(detail::pack_state(input)).second) continue;
            state out = input;
            keccak_f(out);
            ++result.inputs_tested;
            const auto [it, fresh] = outputs.emplace(detail::pack_state(out),
                                                     detail::pack_state(input));
            if (!fresh) {
                result.bijective = false;
                result.collision = {detail::unpack_state(it->second, w), input};
                return result;
            }
        }
        return result;
    }

    // Wide states: track 64-bit digests of inputs and outputs; a digest hit
    // is resolved by regenerating the stored sample from the seed.
    std::unordered_set<std::uint64_t> input_digests;
    std::unordered_map<std::uint64_t, std::uint64_t> output_digests;  // digest -> sample index
    input_digests.reserve(samples * 2);
    output_digests.reserve(samples * 2);
    auto regenerate = [&](std::uint64_t index) {
        std::mt19937_64 replay(seed);
        replay.discard(25 * index);
        return detail::random_state(replay, w);
    };
    std::uint64_t draws = 0;
    while (result.inputs_tested < samples) {
        const std::uint64_t index = draws;
        const state input = detail::random_state(rng, w);
        ++draws;
        if (!input_digests.insert(detail::fnv1a(input.lanes)).second) continue;
        state out = input;
        keccak_f(out);
        ++result.inputs_tested;
        const auto [it, fresh] = output_digests.emplace(detail::fnv1a(out.lanes), index);
        if (!fresh) {
            state earlier = regenerate(it->second);
            state earlier_out = earlier;
            keccak_f(earlier_out);
            if (earlier_out == out && !(earlier == input)) {
                result.bijective = false;
                result.collision = {earlier, input};
                return result;
            }
        }
    }
    return result;
}

}  // namespace keccak
