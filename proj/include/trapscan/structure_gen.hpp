// Generation of all non-isomorphic LETS structures of an (a, b) class:
// connected simple graphs with a nodes, (a*d_v - b)/2 edges, degrees in
// [2, d_v], triangle-free when girth >= 8. Replaces nauty's geng role.
#pragma once

#include <vector>

#include "trapscan/normal_graph.hpp"

namespace trapscan {

struct ClassGenResult {
    std::vector<NormalGraph> structures;  // sorted by canonical code
    bool impossible = false;              // parity/bounds rule the class out ("-")
};

// Structural feasibility short-circuit (the "-" entries of the tables).
bool class_possible(int a, int b, int d_v, int girth);

// Complete, duplicate-free, deterministic. Results cached per (a, d_v, girth
// regime), so repeated class queries during characterization are cheap.
ClassGenResult generate_class(int a, int b, int d_v, int girth);

// Count shortcut used by completeness checks.
size_t class_count(int a, int b, int d_v, int girth);

}  // namespace trapscan
