// Independent brute-force references. These share only the graph types with
// the main search; no expansion or generation logic is reused, so they can
// serve as ground truth for it.
#pragma once

#include <vector>

#include "trapscan/normal_graph.hpp"
#include "trapscan/tanner.hpp"

namespace trapscan {
namespace oracle {

struct BruteInstance {
    std::vector<int> vars;  // sorted
    ClassId cls;
};

// Exhaustive LETS enumeration: DFS over connected variable subsets, growing
// one adjacent variable at a time, pruning once a check reaches degree 3.
// Keeps elementary + leafless subsets with b <= b_max, sorted by vars.
std::vector<BruteInstance> brute_force_lets(const TannerGraph& g, int a_max, int b_max);

// Exhaustive non-isomorphic structure enumeration: all edge subsets of K_a
// of the right size, validity-filtered, deduped by min-over-all-permutations
// adjacency code (no reliance on canonical_form). a <= 8.
std::vector<NormalGraph> brute_force_structures(int a, int b, int d_v, int girth);

// min-over-all-permutations code, used by tests as an independent
// isomorphism decision for small graphs
CanonicalCode brute_force_min_code(const NormalGraph& g);

}  // namespace oracle
}  // namespace trapscan
