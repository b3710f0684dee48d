// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamspace/bitcode.hpp"

namespace hamspace {

struct SearchHit {
    uint32_t id = 0;
    uint32_t distance = 0;
    bool operator==(const SearchHit&) const = default;
};

// Hits sorted ascending by (distance, id). radius_used is the final search
// radius for kNN queries (the radius the incremental search stopped at).
struct SearchResult {
    std::vector<SearchHit> hits;
    uint32_t radius_used = 0;
    bool k_clamped = false;  // k exceeded the collection size; all codes returned
};

// Instrumentation for one search. `lookups` counts substring-table key
// probes; on the key-scan route (taken when enumerating perturbations would
// probe more keys than the table holds) it counts examined keys instead.
// Both routes produce identical candidate sets and identical raw counts.
struct CandidateStats {
    uint64_t lookups = 0;
    uint64_t raw_candidates = 0;
    uint64_t unique_candidates = 0;
    uint64_t verified = 0;
};

// Multi-index hash table over m disjoint substrings of every code, plus the
// dense code array for full-distance verification. Immutable after build;
// concurrent read-only searches are safe.
class MihIndex {
public:
    MihIndex() = default;

    // Codes must share one width B with m | B and B/m <= 64. Deterministic
    // given input order.
    static MihIndex build(std::vector<HashCode> codes, uint32_t m);

    uint32_t bits() const { return bits_; }
    uint32_t substring_count() const { return m_; }
    size_t size() const { return codes_.size(); }
    const std::vector<HashCode>& codes() const { return codes_; }

    // Exactly the ids within Hamming distance r of q, with their distances.
    // Probes each substring table within the pigeonhole threshold floor(r/m),
    // then verifies every unique candidate against the full code.
    SearchResult radius_search(const HashCode& q, uint32_t r, CandidateStats* stats = nullptr,
                               std::vector<uint32_t>* candidate_ids = nullptr) const;

    // Exact k nearest under the (distance, id) tie-break. Grows the radius
    // from 0, probing only newly reachable perturbation levels, until at
    // least k verified hits lie within the radius.
    SearchResult knn_search(const HashCode& q, uint32_t k, CandidateStats* stats = nullptr,
                            std::vector<uint32_t>* candidate_ids = nullptr) const;

    // Persists as the shared code file plus a JSON sidecar carrying m; the
    // substring tables are rebuilt deterministically on load.
    void save(const std::string& dir) const;
    static MihIndex load(const std::string& dir);

private:
    struct Table {
        uint32_t sub_bits = 0;
        bool direct = false;
        // direct layout: offsets has 2^sub_bits + 1 entries indexing ids.
        std::vector<uint32_t> offsets;
        // hash layout: sorted distinct keys, CSR offsets per key, and a
        // probe map from key to its position in `keys`.
        std::vector<uint64_t> keys;
        std::vector<uint32_t> key_offsets;
        std::unordered_map<uint64_t, uint32_t> probe_map;
        std::vector<uint32_t> ids;

        size_t distinct_keys() const {
            return direct ? offsets.size() - 1 : keys.size();
        }
        std::span<const uint32_t> bucket_direct(uint64_t key) const {
            return {ids.data() + offsets[key], ids.data() + offsets[key + 1]};
        }
    };

    struct SearchState;
    void probe_exact_level(SearchState& st, uint32_t level) const;
    void probe_up_to(SearchState& st, uint32_t threshold) const;

    uint32_t bits_ = 0;
    uint32_t m_ = 0;
    uint32_t sub_bits_ = 0;
    std::vector<HashCode> codes_;
    std::vector<Table> tables_;
};

// Exhaustive oracles with the same sort and tie-break contract as the index
// searches.
SearchResult linear_scan_radius(std::span<const HashCode> codes, const HashCode& q, uint32_t r);
SearchResult linear_scan_knn(std::span<const HashCode> codes, const HashCode& q, uint32_t k);

}  // namespace hamspace
