// Tanner-graph-side enumeration: simple-cycle instance search and the
// dot/path/lollipop instance expansions, orchestrated per characterization
// table (dpl mode) or as the plain dot-closure benchmark (dot mode).
#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "trapscan/characterization.hpp"
#include "trapscan/tanner.hpp"

namespace trapscan {

struct LetsInstance {
    std::vector<uint16_t> vars;  // sorted ascending
    ClassId cls;
    int origin = 0;  // prime cycle length that reached it
};

// Sorted variable sets packed into four words (a <= 14, n < 65535); unused
// slots are 0xffff so sets of different sizes never collide.
struct InstKey {
    std::array<uint64_t, 4> w{};
    bool operator==(const InstKey&) const = default;
};

struct InstKeyHash {
    size_t operator()(const InstKey& k) const {
        uint64_t h = 0x2545f4914f6cdd1dull;
        for (uint64_t x : k.w) {
            h ^= x;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return size_t(h);
    }
};

InstKey pack_vars(const uint16_t* vars, int count);
std::vector<uint16_t> unpack_vars(const InstKey& key);

using FoundSet = std::unordered_set<InstKey, InstKeyHash>;

// Routine-style building blocks. Each returns candidates not present in
// `found` (which is left untouched), deduplicated, in deterministic order.
std::vector<LetsInstance> enumerate_simple_cycles(const TannerGraph& g, int k);
std::vector<LetsInstance> dot_search_step(const TannerGraph& g,
                                          const std::vector<LetsInstance>& instances,
                                          const FoundSet& found);
std::vector<LetsInstance> path_search_step(const TannerGraph& g,
                                           const std::vector<LetsInstance>& instances,
                                           const FoundSet& found, int m);
std::vector<LetsInstance> lollipop_search_step(const TannerGraph& g,
                                               const std::vector<LetsInstance>& instances,
                                               const std::vector<LetsInstance>& cycle_instances,
                                               const FoundSet& found, int m, int c);

struct SearchOptions {
    int a_max = 0;
    int b_max = 0;
    int threads = 1;
    bool keep_overflow = false;  // report classes with b_max < b <= bprime_max
};

struct SearchStats {
    double seconds = 0;
    size_t instances_stored = 0;
    size_t approx_bytes = 0;
};

struct SearchResult {
    std::vector<LetsInstance> instances;  // deduplicated; includes overflow classes
    SearchStats stats;
};

// Cycle-seeded search driven by the table's expansion sets; exhaustive for
// every class with a <= a_max, b <= b_max. Deterministic for any thread count.
SearchResult dpl_search(const TannerGraph& g, const CharacterizationTable& table,
                        const SearchOptions& opts);

// Benchmark mode: iterated dot expansion from the given simple-cycle seeds,
// no class ceiling. Exhaustive only for classes covered by cycle primes
// under dot expansion alone.
SearchResult dot_search(const TannerGraph& g, const std::vector<int>& seed_cycles,
                        const SearchOptions& opts);

}  // namespace trapscan
