#include <algorithm>

#include "doctest.h"
#include "trapscan/expansion.hpp"
#include "trapscan/structure_gen.hpp"

using namespace trapscan;

namespace {

bool contains_class(const std::vector<NormalGraph>& graphs, int d_v, ClassId cls, size_t count) {
    size_t got = 0;
    for (const NormalGraph& g : graphs)
        if (class_of(g, d_v) == cls) ++got;
    return got == count;
}

CodeSet codes_of(const std::vector<NormalGraph>& graphs) {
    CodeSet set;
    for (const NormalGraph& g : graphs) set.insert(canonical_form(g));
    return set;
}

NormalGraph induced_sub(const NormalGraph& big, uint16_t dropped_mask) {
    std::vector<uint8_t> keep;
    for (int v = 0; v < big.n; ++v)
        if (!((dropped_mask >> v) & 1)) keep.push_back(uint8_t(v));
    NormalGraph sub;
    sub.n = uint8_t(keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (big.has_edge(keep[i], keep[j])) sub.add_edge(int(i), int(j));
    return sub;
}

}  // namespace

TEST_CASE("expansion spec text grammar") {
    CHECK(to_string(ExpansionSpec{ExpansionSpec::Kind::Dot, 0, 0}) == "dot");
    CHECK(to_string(ExpansionSpec{ExpansionSpec::Kind::Path, 2, 0}) == "pa2");
    CHECK(to_string(ExpansionSpec{ExpansionSpec::Kind::Lollipop, 4, 3}) == "lo3_4");
    CHECK(parse_expansion("dot").kind == ExpansionSpec::Kind::Dot);
    CHECK(parse_expansion("pa3").m == 3);
    ExpansionSpec lo = parse_expansion("lo3_4");
    CHECK(lo.c == 3);
    CHECK(lo.m == 4);
    CHECK_THROWS(parse_expansion("lo2_4"));  // c >= 3
    CHECK_THROWS(parse_expansion("pa1"));    // pa_1 is dot_2
    CHECK_THROWS(parse_expansion("lo4_3"));  // c <= m
    CHECK_THROWS(parse_expansion("banana"));
}

TEST_CASE("dot expansion of the 4-cycle at d_v = 4 splits by class") {
    auto kids = dot_expand(cycle_graph(4), 4, 6);
    CHECK(contains_class(kids, 4, ClassId{5, 8}, 2));  // two non-isomorphic results
    CHECK(contains_class(kids, 4, ClassId{5, 6}, 1));
    CHECK(contains_class(kids, 4, ClassId{5, 4}, 1));
    CHECK(kids.size() == 4);
}

TEST_CASE("dot expansion of the triangle at d_v = 3") {
    auto kids = dot_expand(cycle_graph(3), 3, 6);
    CHECK(kids.size() == 2);
    CHECK(contains_class(kids, 3, ClassId{4, 2}, 1));
    CHECK(contains_class(kids, 3, ClassId{4, 0}, 1));
    // triangle is not a valid structure under girth 8
    CHECK_THROWS(dot_expand(cycle_graph(3), 3, 8));
}

TEST_CASE("path expansion lands in the predicted class") {
    // pa_2 on the (4,2) structure (d_v = 3) gives (6,2) structures
    NormalGraph diamond;
    for (const NormalGraph& g : dot_expand(cycle_graph(3), 3, 6))
        if (class_of(g, 3) == ClassId{4, 2}) diamond = g;
    auto paths = path_expand(diamond, 2, 3, 6);
    CHECK(!paths.empty());
    for (const NormalGraph& g : paths) CHECK(class_of(g, 3) == ClassId{6, 2});

    // pa_3 on s_3 gives (6,4)
    for (const NormalGraph& g : path_expand(cycle_graph(3), 3, 3, 6))
        CHECK(class_of(g, 3) == ClassId{6, 4});
    CHECK_THROWS(path_expand(cycle_graph(3), 1, 3, 6));
}

TEST_CASE("closed paths need a node with two free sockets") {
    // d_v = 3 leafless graphs have no node of degree < 2, so closed paths
    // can only show up for d_v >= 4
    for (const NormalGraph& g : path_expand(cycle_graph(3), 2, 3, 6)) CHECK(g.n == 5);
    auto closed = path_expand(cycle_graph(4), 2, 4, 6);
    bool has_triangle_result = false;
    for (const NormalGraph& g : closed) has_triangle_result |= g.has_triangle();
    CHECK(has_triangle_result);  // closed pa_2 appends a triangle
    for (const NormalGraph& g : path_expand(cycle_graph(4), 2, 4, 8)) CHECK(!g.has_triangle());
}

TEST_CASE("lollipop expansion class arithmetic and girth rules") {
    for (const NormalGraph& g : lollipop_expand(cycle_graph(3), 3, 3, 3, 6))
        CHECK(class_of(g, 3) == ClassId{6, 4});
    CHECK_THROWS(lollipop_expand(cycle_graph(3), 2, 3, 3, 6));
    CHECK_THROWS(lollipop_expand(cycle_graph(3), 4, 2, 3, 6));
    CHECK(lollipop_expand(cycle_graph(4), 3, 3, 3, 8).empty());   // triangle forbidden
    CHECK(!lollipop_expand(cycle_graph(4), 4, 4, 3, 8).empty());  // square allowed
}

TEST_CASE("expansions add exactly m nodes") {
    NormalGraph s = cycle_graph(5);
    for (int m = 2; m <= 4; ++m)
        for (const NormalGraph& out : path_expand(s, m, 3, 6)) CHECK(out.n == s.n + m);
    for (int m = 3; m <= 4; ++m)
        for (int c = 3; c <= m; ++c)
            for (const NormalGraph& out : lollipop_expand(s, m, c, 3, 6)) CHECK(out.n == s.n + m);
}

TEST_CASE("dot closure of the triangle reproduces the size-4 classes") {
    auto levels = dot_closure({cycle_graph(3)}, CodeSet{}, 4, 3, 6);
    REQUIRE(levels.count(3) == 1);
    REQUIRE(levels.count(4) == 1);
    CHECK(levels[3].size() == 1);
    CHECK(levels[4].size() == 2);
    CHECK(contains_class(levels[4], 3, ClassId{4, 2}, 1));
    CHECK(contains_class(levels[4], 3, ClassId{4, 0}, 1));
}

TEST_CASE("dot closure respects the excluded set") {
    auto base = dot_closure({cycle_graph(3)}, CodeSet{}, 5, 3, 6);
    CodeSet excluded = codes_of(base[4]);
    auto filtered = dot_closure({cycle_graph(3)}, excluded, 5, 3, 6);
    CHECK(filtered[4].empty());
    CHECK(filtered.count(5) == 0);  // size-5 children only reachable through size 4
}

TEST_CASE("dot closure from the triangle misses exactly the primes") {
    auto levels = dot_closure({cycle_graph(3)}, CodeSet{}, 6, 3, 6);
    CodeSet seen;
    for (auto& [size, graphs] : levels)
        for (const NormalGraph& g : graphs) seen.insert(canonical_form(g));
    CHECK(seen.count(canonical_form(cycle_graph(4))) == 0);
    CHECK(seen.count(canonical_form(cycle_graph(5))) == 0);
    CHECK(seen.count(canonical_form(cycle_graph(6))) == 0);
    for (const NormalGraph& g : levels[5]) CHECK(class_of(g, 3) == ClassId{5, 1});
}

TEST_CASE("minimal one-step jumps are exactly one of the three operators") {
    // For valid pairs sub < big with nothing valid strictly between, the jump
    // must be a dot (1 node), or exactly one of path/lollipop (2-3 nodes).
    for (int a = 5; a <= 7; ++a) {
        for (int b = 0; b <= a; ++b) {
            if (!class_possible(a, b, 3, 6)) continue;
            for (const NormalGraph& big : generate_class(a, b, 3, 6).structures) {
                CanonicalCode target = canonical_form(big);
                for (uint16_t drop = 1; drop < (1u << big.n); ++drop) {
                    int dropped = __builtin_popcount(drop);
                    if (dropped < 1 || dropped > 3) continue;
                    NormalGraph sub = induced_sub(big, drop);
                    if (!is_valid_structure(sub, 3, 6)) continue;
                    bool has_middle = false;
                    for (uint16_t mid = 1; mid < (1u << big.n) && !has_middle; ++mid) {
                        if ((mid & drop) != mid || mid == drop || mid == 0) continue;
                        if (is_valid_structure(induced_sub(big, mid), 3, 6)) has_middle = true;
                    }
                    if (has_middle) continue;
                    int kinds = 0;
                    if (dropped == 1) {
                        if (codes_of(dot_expand(sub, 3, 6)).count(target)) ++kinds;
                    } else {
                        if (codes_of(path_expand(sub, dropped, 3, 6)).count(target)) ++kinds;
                        bool lolli = false;
                        for (int c = 3; c <= dropped; ++c)
                            if (codes_of(lollipop_expand(sub, dropped, c, 3, 6)).count(target))
                                lolli = true;
                        if (lolli) ++kinds;
                    }
                    CHECK(kinds == 1);
                }
            }
        }
    }
}
