#include <algorithm>
#include <random>

#include "doctest.h"
#include "trapscan/normal_graph.hpp"
#include "trapscan/oracle.hpp"

using namespace trapscan;

namespace {

NormalGraph random_graph(std::mt19937_64& rng, int n, double p) {
    NormalGraph g;
    g.n = uint8_t(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Permutation random_perm(std::mt19937_64& rng, int n) {
    Permutation p{};
    for (int i = 0; i < n; ++i) p[size_t(i)] = uint8_t(i);
    std::shuffle(p.begin(), p.begin() + n, rng);
    return p;
}

}  // namespace

TEST_CASE("triangle relabeling gives identical codes") {
    NormalGraph t1;
    t1.n = 3;
    t1.add_edge(0, 1);
    t1.add_edge(1, 2);
    t1.add_edge(2, 0);
    NormalGraph t2 = relabel(t1, Permutation{2, 0, 1});
    CHECK(canonical_form(t1) == canonical_form(t2));
}

TEST_CASE("class_of implements b = a*d_v - 2e") {
    CHECK(class_of(cycle_graph(3), 3) == ClassId{3, 3});
    CHECK(class_of(cycle_graph(4), 4) == ClassId{4, 8});
    for (int k = 3; k <= 10; ++k)
        for (int dv = 3; dv <= 5; ++dv)
            CHECK(class_of(cycle_graph(k), dv) == ClassId{k, k * (dv - 2)});
    NormalGraph too_hot = cycle_graph(4);
    too_hot.add_edge(0, 2);
    too_hot.add_edge(1, 3);
    CHECK_THROWS(class_of(too_hot, 2));
}

TEST_CASE("canonical code equality matches brute-force isomorphism for n <= 7") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + int(rng() % 4);  // 4..7
        NormalGraph a = random_graph(rng, n, 0.4);
        NormalGraph b = random_graph(rng, n, 0.4);
        bool same_code = canonical_form(a) == canonical_form(b);
        bool iso = oracle::brute_force_min_code(a) == oracle::brute_force_min_code(b);
        CHECK(same_code == iso);
    }
}

TEST_CASE("canonical code is invariant under 1000 random relabelings, a <= 10") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + int(rng() % 8);  // 3..10
        NormalGraph g = random_graph(rng, n, 0.35);
        CanonicalCode base = canonical_form(g);
        NormalGraph h = relabel(g, random_perm(rng, n));
        CHECK(canonical_form(h) == base);
    }
}

TEST_CASE("canonical form handles disconnected graphs with identical pieces") {
    NormalGraph a;  // two labelings of a 3-matching
    a.n = 6;
    a.add_edge(0, 1);
    a.add_edge(2, 3);
    a.add_edge(4, 5);
    NormalGraph b;
    b.n = 6;
    b.add_edge(0, 5);
    b.add_edge(1, 3);
    b.add_edge(2, 4);
    CHECK(canonical_form(a) == canonical_form(b));
    NormalGraph c;  // 3-path plus an edge plus an isolated node: different
    c.n = 6;
    c.add_edge(0, 1);
    c.add_edge(1, 2);
    c.add_edge(3, 4);
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("two distinct (5,8) structures get distinct codes") {
    // d_v = 4: 4-cycle plus a node joined to two adjacent vs two opposite
    // cycle nodes; same class, non-isomorphic
    NormalGraph adj = cycle_graph(4);
    adj.n = 5;
    adj.add_edge(0, 4);
    adj.add_edge(1, 4);
    NormalGraph opp = cycle_graph(4);
    opp.n = 5;
    opp.add_edge(0, 4);
    opp.add_edge(2, 4);
    CHECK(class_of(adj, 4) == ClassId{5, 8});
    CHECK(class_of(opp, 4) == ClassId{5, 8});
    CHECK(canonical_form(adj) != canonical_form(opp));
}

TEST_CASE("is_valid_structure admission rules") {
    CHECK(is_valid_structure(cycle_graph(3), 3, 6));
    CHECK_FALSE(is_valid_structure(cycle_graph(3), 3, 8));  // triangle-free regime
    CHECK(is_valid_structure(cycle_graph(4), 3, 8));
    NormalGraph leafy = cycle_graph(3);  // triangle plus a pendant node
    leafy.n = 4;
    leafy.add_edge(0, 3);
    CHECK_FALSE(is_valid_structure(leafy, 3, 6));
    NormalGraph split;  // two disjoint triangles
    split.n = 6;
    for (int i = 0; i < 3; ++i) split.add_edge(i, (i + 1) % 3);
    split.add_edge(3, 4);
    split.add_edge(4, 5);
    split.add_edge(5, 3);
    CHECK_FALSE(is_valid_structure(split, 3, 6));
    // a path still canonicalizes even though admission rejects it
    NormalGraph path;
    path.n = 3;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(canonical_form(path).n == 3);
    CHECK_FALSE(is_valid_structure(path, 3, 6));
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng() % 12);
        NormalGraph g = random_graph(rng, n, 0.4);
        NormalGraph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    CHECK(to_graph6(cycle_graph(3)) == "Bw");  // standard encoding of K3
}

TEST_CASE("automorphism generators map the graph to itself") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + int(rng() % 8);
        NormalGraph g = random_graph(rng, n, 0.4);
        CanonicalResult res = canonical_labeling(g, true);
        CHECK(!res.automorphisms.empty());
        for (const Permutation& aut : res.automorphisms)
            for (auto [u, v] : g.edges()) CHECK(g.has_edge(aut[size_t(u)], aut[size_t(v)]));
    }
}
