#include "trapscan/random_graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace trapscan {

namespace {

// BFS distance between two checks in the partial graph, stopping early once
// the distance is known to be >= bound.
int check_distance(const std::vector<std::vector<int>>& var_adj,
                   const std::vector<std::vector<int>>& chk_adj, int from, int to, int bound) {
    if (from == to) return 0;
    std::vector<int> dist_c(chk_adj.size(), -1), dist_v(var_adj.size(), -1);
    dist_c[size_t(from)] = 0;
    std::deque<int> checks{from};
    std::deque<int> vars;
    int depth = 0;
    while (depth < bound && (!checks.empty() || !vars.empty())) {
        if (depth % 2 == 0) {
            while (!checks.empty()) {
                int c = checks.front();
                checks.pop_front();
                for (int v : chk_adj[size_t(c)]) {
                    if (dist_v[size_t(v)] >= 0) continue;
                    dist_v[size_t(v)] = depth + 1;
                    vars.push_back(v);
                }
            }
        } else {
            while (!vars.empty()) {
                int v = vars.front();
                vars.pop_front();
                for (int c : var_adj[size_t(v)]) {
                    if (dist_c[size_t(c)] >= 0) continue;
                    if (c == to) return depth + 1;
                    dist_c[size_t(c)] = depth + 1;
                    checks.push_back(c);
                }
            }
        }
        ++depth;
    }
    return bound;  // at least bound
}

}  // namespace

TannerGraph random_regular_tanner(int n, int d_v, int d_c, int min_girth, uint64_t seed) {
    if (d_v < 3 || d_c < 2 || n < d_c) throw std::invalid_argument("random_regular_tanner: bad degrees");
    if ((n * d_v) % d_c != 0)
        throw std::invalid_argument("random_regular_tanner: n*d_v must be divisible by d_c");
    int m = n * d_v / d_c;
    int need_dist = min_girth - 2;  // adding a variable closes cycles of dist+2

    for (int attempt = 0; attempt < 400; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + uint64_t(attempt));
        std::vector<std::vector<int>> var_adj(static_cast<size_t>(n)), chk_adj(static_cast<size_t>(m));
        std::vector<int> capacity(static_cast<size_t>(m), d_c);
        bool failed = false;
        for (int v = 0; v < n && !failed; ++v) {
            for (int pick = 0; pick < d_v; ++pick) {
                std::vector<int> cands;
                for (int c = 0; c < m; ++c) {
                    if (capacity[size_t(c)] == 0) continue;
                    bool ok = true;
                    for (int prev : var_adj[size_t(v)]) {
                        if (prev == c ||
                            check_distance(var_adj, chk_adj, prev, c, need_dist) < need_dist) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) cands.push_back(c);
                }
                if (cands.empty()) {
                    failed = true;
                    break;
                }
                int c = cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)];
                var_adj[size_t(v)].push_back(c);
                chk_adj[size_t(c)].push_back(v);
                --capacity[size_t(c)];
            }
        }
        if (failed) continue;
        return TannerGraph(n, m, std::move(var_adj));
    }
    throw std::runtime_error("random_regular_tanner: could not satisfy girth constraint");
}

}  // namespace trapscan
