// Structure-space growth operators: depth-one tree (dot), open/closed path,
// and lollipop expansions, plus the recursive dot closure.
#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "trapscan/normal_graph.hpp"

namespace trapscan {

struct ExpansionSpec {
    enum class Kind { Dot, Path, Lollipop };
    Kind kind = Kind::Dot;
    int m = 0;  // nodes added (path/lollipop)
    int c = 0;  // lollipop cycle length

    auto operator<=>(const ExpansionSpec&) const = default;
};

// Text grammar: "dot", "pa<m>", "lo<c>_<m>" (e.g. "lo3_4" is c=3, m=4).
std::string to_string(const ExpansionSpec& spec);
ExpansionSpec parse_expansion(const std::string& text);

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

// All dot_m expansions, m in [2, min(d_v, b)]: a new node joined to every
// m-subset of nodes with free sockets. Results validity-filtered, deduped by
// canonical code, sorted. Input must be a valid structure.
std::vector<NormalGraph> dot_expand(const NormalGraph& s, int d_v, int girth);

// pa_m: append a path of length m+1 between two distinct free-socket nodes
// (open) or through one node with two free sockets (closed). m >= 2.
std::vector<NormalGraph> path_expand(const NormalGraph& s, int m, int d_v, int girth);

// lo^c_m: append a stem of length m+1-c ending in a cycle of length c to one
// free-socket node. m >= 3, 3 <= c <= m.
std::vector<NormalGraph> lollipop_expand(const NormalGraph& s, int m, int c, int d_v, int girth);

// Apply one spec (path or lollipop); dot takes no parameters.
std::vector<NormalGraph> apply_expansion(const NormalGraph& s, const ExpansionSpec& spec, int d_v,
                                         int girth);

// Recursive dot expansion of `seeds` up to size a_max, dropping anything in
// `excluded`, optionally capping the unsatisfied-check count of kept results.
// Returns structures keyed by size (seeds included at their own size).
std::map<int, std::vector<NormalGraph>> dot_closure(const std::vector<NormalGraph>& seeds,
                                                    const CodeSet& excluded, int a_max, int d_v,
                                                    int girth, int b_cap = -1);

}  // namespace trapscan
