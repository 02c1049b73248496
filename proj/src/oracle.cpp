#include "trapscan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace trapscan {
namespace oracle {

namespace {

// sorted subsets packed 10 bits per variable, so a_max <= 6 words... a_max
// <= 12 and n < 1024 cover every oracle use here (two 64-bit words).
struct PackedKey {
    uint64_t lo = 0, hi = 0;
    bool operator==(const PackedKey&) const = default;
};

struct PackedKeyHash {
    size_t operator()(const PackedKey& k) const {
        uint64_t h = k.lo * 0x9e3779b97f4a7c15ull;
        h ^= (k.hi + 0x165667b19e3779f9ull) + (h << 13) + (h >> 7);
        return size_t(h);
    }
};

PackedKey pack(const std::vector<int>& vars) {
    PackedKey key;
    for (size_t i = 0; i < vars.size(); ++i) {
        uint64_t chunk = uint64_t(vars[i]) + 1;  // +1 keeps empty slots distinct
        if (i < 6) key.lo |= chunk << (10 * i);
        else key.hi |= chunk << (10 * (i - 6));
    }
    return key;
}

struct LetsSearch {
    const TannerGraph& g;
    int a_max;
    int b_max;
    std::unordered_set<PackedKey, PackedKeyHash> visited;
    std::vector<BruteInstance> out;
    std::vector<int> check_deg;  // induced degree per check, kept incrementally

    // All visited subsets are connected (grown through shared checks) and
    // elementary (the degree-3 prune below), so only b and leaflessness need
    // a direct test.
    void emit_if_lets(const std::vector<int>& vars) {
        int b = 0;
        for (int v : vars)
            for (int c : g.var_checks(v))
                if (check_deg[size_t(c)] == 1) ++b;
        if (b > b_max) return;
        for (int v : vars) {
            int deg2 = 0;
            for (int c : g.var_checks(v))
                if (check_deg[size_t(c)] == 2) ++deg2;
            if (deg2 < 2) return;  // leaf
        }
        out.push_back({vars, ClassId{int(vars.size()), b}});
    }

    void grow(std::vector<int>& vars) {
        emit_if_lets(vars);
        if (int(vars.size()) == a_max) return;

        std::vector<int> cands;
        for (int v : vars)
            for (int c : g.var_checks(v))
                for (int w : g.check_vars(c))
                    if (w > vars[0] && !std::binary_search(vars.begin(), vars.end(), w))
                        cands.push_back(w);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        for (int w : cands) {
            bool ok = true;
            for (int c : g.var_checks(w)) {
                if (check_deg[size_t(c)] >= 2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;  // would create a degree-3 check
            std::vector<int> next(vars);
            next.insert(std::lower_bound(next.begin(), next.end(), w), w);
            if (!visited.insert(pack(next)).second) continue;
            for (int c : g.var_checks(w)) ++check_deg[size_t(c)];
            grow(next);
            for (int c : g.var_checks(w)) --check_deg[size_t(c)];
        }
    }
};

// Minimum adjacency code over vertex orderings that sort degrees ascending.
// Any isomorphism preserves degrees, so this is exhaustive over candidate
// bijections; branch-and-bound on the column bits keeps it fast.
struct MinCodeSearch {
    const NormalGraph& g;
    int n;
    std::vector<std::vector<int>> classes;  // degree classes, ascending degree
    std::array<uint8_t, kMaxStructNodes> order{};
    std::array<uint32_t, kMaxStructNodes> col{};       // column bits per position
    std::array<uint32_t, kMaxStructNodes> best_col{};
    bool have_best = false;

    explicit MinCodeSearch(const NormalGraph& graph) : g(graph), n(graph.n) {
        std::vector<std::pair<int, int>> by_deg;
        for (int v = 0; v < n; ++v) by_deg.emplace_back(g.degree(v), v);
        std::sort(by_deg.begin(), by_deg.end());
        for (size_t i = 0; i < by_deg.size(); ++i) {
            if (i == 0 || by_deg[i].first != by_deg[i - 1].first) classes.emplace_back();
            classes.back().push_back(by_deg[i].second);
        }
    }

    // prefix_eq: columns 0..pos-1 equal the current best's. Only then is
    // column pruning sound; leaves always do a full lexicographic compare.
    void descend(size_t class_idx, uint16_t used, int pos, bool prefix_eq) {
        if (pos == n) {
            bool better = !have_best;
            if (have_best) {
                for (int j = 0; j < n; ++j) {
                    if (col[size_t(j)] != best_col[size_t(j)]) {
                        better = col[size_t(j)] < best_col[size_t(j)];
                        break;
                    }
                }
            }
            if (better) {
                for (int j = 0; j < n; ++j) best_col[size_t(j)] = col[size_t(j)];
                have_best = true;
            }
            return;
        }
        if (class_idx >= classes.size()) return;
        const std::vector<int>& cls = classes[class_idx];
        bool class_done = true;
        for (int v : cls)
            if (!((used >> v) & 1)) class_done = false;
        if (class_done) {
            descend(class_idx + 1, used, pos, prefix_eq);
            return;
        }
        for (int v : cls) {
            if ((used >> v) & 1) continue;
            uint32_t bits = 0;
            for (int i = 0; i < pos; ++i)
                bits = (bits << 1) | (g.has_edge(order[size_t(i)], v) ? 1u : 0u);
            bool eq = prefix_eq;
            if (have_best && eq) {
                if (bits > best_col[size_t(pos)]) continue;  // whole subtree is greater
                if (bits < best_col[size_t(pos)]) eq = false;
            }
            order[size_t(pos)] = uint8_t(v);
            col[size_t(pos)] = bits;
            descend(class_idx, uint16_t(used | (1u << v)), pos + 1, eq);
        }
    }

    uint64_t run() {
        descend(0, 0, 0, true);
        uint64_t bits = 0;
        int pos = 0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < j; ++i, ++pos)
                if ((best_col[size_t(j)] >> (j - 1 - i)) & 1) bits |= 1ull << pos;
        return bits;
    }
};

}  // namespace

std::vector<BruteInstance> brute_force_lets(const TannerGraph& g, int a_max, int b_max) {
    if (a_max < 1) return {};
    if (a_max > 12 || g.n() >= 1023)
        throw std::invalid_argument("brute_force_lets: graph too large for the oracle");
    LetsSearch search{g, a_max, b_max};
    search.check_deg.assign(size_t(g.m_checks()), 0);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> vars{v};
        for (int c : g.var_checks(v)) ++search.check_deg[size_t(c)];
        search.grow(vars);
        for (int c : g.var_checks(v)) --search.check_deg[size_t(c)];
    }
    std::sort(search.out.begin(), search.out.end(),
              [](const BruteInstance& x, const BruteInstance& y) { return x.vars < y.vars; });
    return search.out;
}

CanonicalCode brute_force_min_code(const NormalGraph& g) {
    int n = g.n;
    if (n > 8) throw std::invalid_argument("brute_force_min_code: limited to 8 nodes");
    MinCodeSearch search(g);
    CanonicalCode code;
    code.n = uint8_t(n);
    code.bits[0] = search.run();
    return code;
}

std::vector<NormalGraph> brute_force_structures(int a, int b, int d_v, int girth) {
    if (a < 2 || a > 8) throw std::invalid_argument("brute_force_structures: a must be in [2,8]");
    if ((a * d_v - b) % 2 != 0 || b < 0) return {};
    int e = (a * d_v - b) / 2;
    int max_e = a * (a - 1) / 2;
    if (e < a || e > max_e) return {};

    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < a; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

    std::vector<std::pair<CanonicalCode, NormalGraph>> found;
    std::unordered_set<uint64_t> seen;
    uint32_t mask = (uint32_t(1) << e) - 1;
    uint32_t limit = (max_e >= 32) ? 0xffffffffu : (uint32_t(1) << max_e);
    while (mask < limit) {
        NormalGraph g;
        g.n = uint8_t(a);
        uint32_t bits = mask;
        while (bits) {
            int i = std::countr_zero(bits);
            bits &= bits - 1;
            g.add_edge(pairs[size_t(i)].first, pairs[size_t(i)].second);
        }
        if (g.min_degree() >= 2 && g.max_degree() <= d_v && g.connected() &&
            (girth < 8 || !g.has_triangle())) {
            CanonicalCode code = brute_force_min_code(g);
            if (seen.insert(code.bits[0]).second) found.emplace_back(code, g);
        }
        uint32_t c = mask & (0u - mask);
        uint32_t r = mask + c;
        if (r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<NormalGraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(g);
    return out;
}

}  // namespace oracle
}  // namespace trapscan
