#include "trapscan/structure_gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace trapscan {

namespace {

// Lower bound on edges still required to reach min-degree 2 and connectivity.
// One edge can fix two degree deficits, or merge two components, or both at
// once, so max(ceil(deficit/2), components-1) is a valid bound and it is
// monotone under edge removal (the canonical-augmentation path stays inside
// the pruned space).
int completion_lower_bound(const NormalGraph& g) {
    int deficit = 0;
    for (int v = 0; v < g.n; ++v) deficit += std::max(0, 2 - g.degree(v));
    int comps = 0;
    uint16_t unseen = uint16_t((1u << g.n) - 1);
    while (unseen) {
        ++comps;
        uint16_t frontier = uint16_t(1u << std::countr_zero(unseen));
        uint16_t seen = frontier;
        while (frontier) {
            uint16_t next = 0;
            uint16_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= uint16_t(f - 1);
                next |= g.adj[v];
            }
            frontier = uint16_t(next & ~seen);
            seen |= next;
        }
        unseen &= uint16_t(~seen);
    }
    return std::max((deficit + 1) / 2, comps - 1);
}

struct PairIndex {
    // unordered node pairs (u < v) -> dense index
    static int of(int u, int v) {
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }
};

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Orbits of unordered node pairs under a set of node permutations.
DisjointSet pair_orbits(int n, const std::vector<Permutation>& auts) {
    DisjointSet ds(n * (n - 1) / 2);
    for (const Permutation& p : auts) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) ds.unite(PairIndex::of(u, v), PairIndex::of(p[u], p[v]));
    }
    return ds;
}

struct Generator {
    int a;
    int d_v;
    bool triangle_free;
    int e_max;
    // outputs bucketed by edge count; only connected min-degree-2 graphs kept
    std::vector<std::vector<NormalGraph>> by_edges;

    void run() {
        by_edges.assign(size_t(e_max) + 1, {});
        NormalGraph seed;
        seed.n = uint8_t(a);
        recurse(seed, 0);
        for (auto& bucket : by_edges) {
            std::sort(bucket.begin(), bucket.end(), [](const NormalGraph& x, const NormalGraph& y) {
                return canonical_form(x) < canonical_form(y);
            });
        }
    }

    void recurse(const NormalGraph& g, int e) {
        if (e > 0 && g.min_degree() >= 2 && g.connected()) {
            by_edges[size_t(e)].push_back(canonicalize(g));
        }
        if (e == e_max) return;

        CanonicalResult parent = canonical_labeling(g, true);
        DisjointSet orbits = pair_orbits(a, parent.automorphisms);

        std::vector<int> seen_reps;
        for (int v = 1; v < a; ++v) {
            for (int u = 0; u < v; ++u) {
                if (g.has_edge(u, v)) continue;
                if (g.degree(u) >= d_v || g.degree(v) >= d_v) continue;
                if (triangle_free && (g.adj[u] & g.adj[v])) continue;
                int rep = orbits.find(PairIndex::of(u, v));
                if (std::find(seen_reps.begin(), seen_reps.end(), rep) != seen_reps.end()) continue;
                seen_reps.push_back(rep);

                NormalGraph child = g;
                child.add_edge(u, v);
                if (completion_lower_bound(child) > e_max - (e + 1)) continue;
                if (accept_augmentation(child, u, v)) recurse(child, e + 1);
            }
        }
    }

    // Canonical construction path: accept the child only if the added edge is
    // in the same automorphism orbit as the child's canonical "last" edge.
    bool accept_augmentation(const NormalGraph& child, int u, int v) {
        CanonicalResult canon = canonical_labeling(child, true);
        std::array<uint8_t, kMaxStructNodes> slot{};
        for (int i = 0; i < a; ++i) slot[canon.order[i]] = uint8_t(i);

        int best_pair = -1;
        std::pair<int, int> best_img{-1, -1};
        for (auto [x, y] : child.edges()) {
            int sx = slot[x], sy = slot[y];
            if (sx > sy) std::swap(sx, sy);
            std::pair<int, int> img{sy, sx};  // compare outer slot first
            if (img > best_img) {
                best_img = img;
                best_pair = PairIndex::of(x, y);
            }
        }
        DisjointSet orbits = pair_orbits(a, canon.automorphisms);
        return orbits.find(best_pair) == orbits.find(PairIndex::of(u, v));
    }
};

struct CacheKey {
    int a;
    int d_v;
    bool triangle_free;
    auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, std::vector<std::vector<NormalGraph>>>& cache() {
    static std::map<CacheKey, std::vector<std::vector<NormalGraph>>> c;
    return c;
}

std::mutex cache_mutex;

const std::vector<std::vector<NormalGraph>>& generate_all(int a, int d_v, bool triangle_free) {
    CacheKey key{a, d_v, triangle_free};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    Generator gen;
    gen.a = a;
    gen.d_v = d_v;
    gen.triangle_free = triangle_free;
    gen.e_max = std::min(a * (a - 1) / 2, a * d_v / 2);
    gen.run();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache().emplace(key, std::move(gen.by_edges)).first->second;
}

}  // namespace

bool class_possible(int a, int b, int d_v, int girth) {
    if (a < 2 || b < 0 || d_v < 3) return false;
    if (a < girth / 2) return false;  // any leafless graph contains a cycle
    if ((a * d_v - b) % 2 != 0) return false;
    int e = (a * d_v - b) / 2;
    if (e < a) return false;  // min degree 2
    if (e > a * (a - 1) / 2) return false;
    if (girth >= 8 && 4 * e > a * a) return false;  // Mantel bound, triangle-free
    return true;
}

ClassGenResult generate_class(int a, int b, int d_v, int girth) {
    if (a < 1 || a > kMaxStructNodes) throw std::invalid_argument("generate_class: a out of range");
    ClassGenResult result;
    if (!class_possible(a, b, d_v, girth)) {
        result.impossible = true;
        return result;
    }
    int e = (a * d_v - b) / 2;
    const auto& all = generate_all(a, d_v, girth >= 8);
    result.structures = all[size_t(e)];
    return result;
}

size_t class_count(int a, int b, int d_v, int girth) {
    if (!class_possible(a, b, d_v, girth)) return 0;
    return generate_class(a, b, d_v, girth).structures.size();
}

}  // namespace trapscan
