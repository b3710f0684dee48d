// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hamspace/errors.hpp"

namespace hamspace {

// Fixed-width packed hash code, up to 128 bits. Bit j lives in
// words[j / 64] at position j % 64; storage words beyond bit width-1 are
// kept zero (canonical padding). Bit value 1 stands for +1 and bit value 0
// for -1 in the signed algebra used by the projected Hamming dissimilarity.
struct HashCode {
    static constexpr uint32_t kMaxBits = 128;

    uint32_t width = 0;
    std::array<uint64_t, 2> words{0, 0};

    // Widths accepted for stored full codes; substring values may be narrower.
    static bool valid_code_width(uint32_t bits) {
        return bits == 8 || bits == 16 || bits == 32 || bits == 64 || bits == 128;
    }

    static HashCode zeros(uint32_t bits) {
        if (bits == 0 || bits > kMaxBits) {
            throw UsageError("unsupported hash code width " + std::to_string(bits));
        }
        HashCode c;
        c.width = bits;
        return c;
    }

    bool get(uint32_t j) const { return (words[j >> 6] >> (j & 63)) & 1u; }

    void set(uint32_t j, bool v) {
        uint64_t mask = uint64_t{1} << (j & 63);
        if (v) {
            words[j >> 6] |= mask;
        } else {
            words[j >> 6] &= ~mask;
        }
    }

    uint32_t popcount() const {
        return static_cast<uint32_t>(std::popcount(words[0]) + std::popcount(words[1]));
    }

    // Bit string in bit-index order: character k is bit k.
    static HashCode from_bit_string(std::string_view s);
    std::string to_bit_string() const;

    bool operator==(const HashCode&) const = default;
};

inline void require_same_width(const HashCode& a, const HashCode& b) {
    if (a.width != b.width) {
        throw UsageError("hash code width mismatch: " + std::to_string(a.width) + " vs " +
                         std::to_string(b.width));
    }
}

// Number of differing bit positions.
inline uint32_t hamming_distance(const HashCode& a, const HashCode& b) {
    require_same_width(a, b);
    return static_cast<uint32_t>(std::popcount(a.words[0] ^ b.words[0]) +
                                 std::popcount(a.words[1] ^ b.words[1]));
}

// |{j : u_j = 1 and i_j = 0}| = popcount(u AND NOT i). Under the 1 <-> +1,
// 0 <-> -1 convention this is the Hamming distance restricted to the
// dimensions where u is +1; dimensions where u is -1 are ignored. Canonical
// zero padding in u masks the complemented padding of i, so no extra
// masking is needed.
inline uint32_t projected_hamming_dissimilarity(const HashCode& u, const HashCode& i) {
    require_same_width(u, i);
    return static_cast<uint32_t>(std::popcount(u.words[0] & ~i.words[0]) +
                                 std::popcount(u.words[1] & ~i.words[1]));
}

// One of the m disjoint slices of a hash code. Slice `index` covers bit
// positions [index * (B/m), (index + 1) * (B/m)).
struct Substring {
    HashCode value;
    uint32_t index = 0;
};

// Extracts len bits starting at bit position start (len <= 64).
inline uint64_t extract_bits(const HashCode& c, uint32_t start, uint32_t len) {
    uint64_t lo = c.words[start >> 6] >> (start & 63);
    uint32_t taken = 64 - (start & 63);
    if (taken < len && (start >> 6) == 0) {
        lo |= c.words[1] << taken;
    }
    if (len == 64) return lo;
    return lo & ((uint64_t{1} << len) - 1);
}

std::vector<Substring> split_substrings(const HashCode& c, uint32_t m);

// Inverse of split_substrings: substrings in index order.
HashCode concat_substrings(const std::vector<Substring>& subs);

// Per-substring search radius floor(r / m). If hamming_distance(a, b) <= r
// then at least one of the m substrings matches within this threshold.
inline uint32_t pigeonhole_threshold(uint32_t r, uint32_t m) { return r / m; }

// All codes within Hamming distance t of `value`, in ascending flip count,
// ties in ascending flipped-position tuple order.
std::vector<HashCode> enumerate_perturbations(const HashCode& value, uint32_t t);
inline std::vector<HashCode> enumerate_perturbations(const Substring& s, uint32_t t) {
    return enumerate_perturbations(s.value, t);
}

// Sum_{d=0..t} C(width, d), saturating at UINT64_MAX.
uint64_t perturbation_count(uint32_t width, uint32_t t);

// Visits every position tuple (p_0 < p_1 < ... < p_{d-1}) over [0, width) in
// lexicographically ascending order. Fn is called with a const
// std::vector<uint32_t>& of the d positions. d == 0 visits the empty tuple.
template <typename Fn>
void for_each_position_tuple(uint32_t width, uint32_t d, Fn&& fn) {
    std::vector<uint32_t> pos(d);
    if (d == 0) {
        fn(pos);
        return;
    }
    if (d > width) return;
    for (uint32_t i = 0; i < d; ++i) pos[i] = i;
    while (true) {
        fn(pos);
        // Advance rightmost position that can still move.
        uint32_t i = d;
        while (i > 0) {
            --i;
            if (pos[i] != width - d + i) {
                ++pos[i];
                for (uint32_t j = i + 1; j < d; ++j) pos[j] = pos[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace hamspace
