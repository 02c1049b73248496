// Structure-space representation of leafless elementary trapping sets:
// small simple graphs on the variable nodes, with degree-2 check nodes
// contracted to edges. Everything here is by-value and immutable in use.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace trapscan {

// Structure generation and the characterization tables stop at 14 nodes.
constexpr int kMaxStructNodes = 14;

struct NormalGraph {
    uint8_t n = 0;
    std::array<uint16_t, kMaxStructNodes> adj{};  // adjacency rows as bitmasks

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= uint16_t(1u << v);
        adj[v] |= uint16_t(1u << u);
    }
    void remove_edge(int u, int v) {
        adj[u] &= uint16_t(~(1u << v));
        adj[v] &= uint16_t(~(1u << u));
    }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const;
    int min_degree() const;
    int max_degree() const;
    bool connected() const;
    bool has_triangle() const;
    bool is_simple_cycle() const;     // connected and 2-regular
    bool has_hamiltonian_cycle() const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const NormalGraph& o) const { return n == o.n && adj == o.adj; }
};

// k-node chordless cycle s_k, nodes 0..k-1 in ring order.
NormalGraph cycle_graph(int k);

// Standard graph6 text encoding (n <= 62 is plenty here).
std::string to_graph6(const NormalGraph& g);
NormalGraph from_graph6(const std::string& text);

struct ClassId {
    int a = 0;
    int b = 0;
    auto operator<=>(const ClassId&) const = default;
};

// (a, b) of a structure in a variable-regular graph with degree d_v:
// b = a*d_v - 2e. Throws if some node degree exceeds d_v.
ClassId class_of(const NormalGraph& s, int d_v);

// Canonical form: upper-triangle adjacency bits of the canonically labeled
// graph, column-major (same bit order as graph6). Equal codes <=> isomorphic.
struct CanonicalCode {
    uint8_t n = 0;
    std::array<uint64_t, 2> bits{};

    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
};

struct CanonicalCodeHash {
    size_t operator()(const CanonicalCode& c) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ c.n;
        for (uint64_t w : c.bits) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return size_t(h);
    }
};

using Permutation = std::array<uint8_t, kMaxStructNodes>;

struct CanonicalResult {
    CanonicalCode code;
    Permutation order{};                      // order[i] = original node at canonical slot i
    std::vector<Permutation> automorphisms;   // full automorphism group (as node maps)
};

CanonicalCode canonical_form(const NormalGraph& s);
CanonicalResult canonical_labeling(const NormalGraph& s, bool want_automorphisms);

// Rebuild the graph in canonical node order (used for stable serialization).
NormalGraph canonicalize(const NormalGraph& s);

// Admission test for LETS structure space: connected, simple, min degree >= 2,
// max degree <= d_v, and triangle-free when girth >= 8.
bool is_valid_structure(const NormalGraph& s, int d_v, int girth);

NormalGraph relabel(const NormalGraph& s, const Permutation& order);

}  // namespace trapscan
