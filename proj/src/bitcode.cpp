// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "hamspace/bitcode.hpp"

namespace hamspace {

HashCode HashCode::from_bit_string(std::string_view s) {
    HashCode c = HashCode::zeros(static_cast<uint32_t>(s.size()));
    for (uint32_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1') {
            c.set(j, true);
        } else if (s[j] != '0') {
            throw UsageError("bit string may contain only '0' and '1'");
        }
    }
    return c;
}

std::string HashCode::to_bit_string() const {
    std::string s(width, '0');
    for (uint32_t j = 0; j < width; ++j) {
        if (get(j)) s[j] = '1';
    }
    return s;
}

std::vector<Substring> split_substrings(const HashCode& c, uint32_t m) {
    if (m == 0 || c.width % m != 0) {
        throw UsageError("substring count " + std::to_string(m) + " does not divide width " +
                         std::to_string(c.width));
    }
    uint32_t sub_bits = c.width / m;
    std::vector<Substring> subs(m);
    for (uint32_t j = 0; j < m; ++j) {
        subs[j].index = j;
        HashCode& v = subs[j].value;
        v.width = sub_bits;
        for (uint32_t b = 0; b < sub_bits; ++b) {
            if (c.get(j * sub_bits + b)) v.set(b, true);
        }
    }
    return subs;
}

HashCode concat_substrings(const std::vector<Substring>& subs) {
    if (subs.empty()) throw UsageError("cannot concatenate zero substrings");
    uint32_t sub_bits = subs[0].value.width;
    HashCode c;
    c.width = sub_bits * static_cast<uint32_t>(subs.size());
    for (const Substring& s : subs) {
        if (s.value.width != sub_bits) throw UsageError("substring width mismatch");
        for (uint32_t b = 0; b < sub_bits; ++b) {
            if (s.value.get(b)) c.set(s.index * sub_bits + b, true);
        }
    }
    return c;
}

std::vector<HashCode> enumerate_perturbations(const HashCode& value, uint32_t t) {
    std::vector<HashCode> out;
    uint64_t n = perturbation_count(value.width, t);
    if (n != UINT64_MAX) out.reserve(n);
    for (uint32_t d = 0; d <= t; ++d) {
        for_each_position_tuple(value.width, d, [&](const std::vector<uint32_t>& pos) {
            HashCode c = value;
            for (uint32_t p : pos) c.set(p, !c.get(p));
            out.push_back(c);
        });
    }
    return out;
}

uint64_t perturbation_count(uint32_t width, uint32_t t) {
    uint64_t total = 0;
    uint64_t binom = 1;  // C(width, 0)
    for (uint32_t d = 0; d <= t && d <= width; ++d) {
        if (total > UINT64_MAX - binom) return UINT64_MAX;
        total += binom;
        // C(width, d+1) = C(width, d) * (width - d) / (d + 1)
        uint64_t num = width - d;
        if (binom > UINT64_MAX / (num ? num : 1)) return UINT64_MAX;
        binom = binom * num / (d + 1);
    }
    return total;
}

}  // namespace hamspace
