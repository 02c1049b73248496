#include "doctest.h"
#include "trapscan/oracle.hpp"
#include "trapscan/random_graph.hpp"

using namespace trapscan;

TEST_CASE("brute-force structure counts on known classes") {
    CHECK(oracle::brute_force_structures(7, 5, 3, 6).size() == 6);
    CHECK(oracle::brute_force_structures(4, 4, 3, 6).size() == 1);
    CHECK(oracle::brute_force_structures(3, 3, 3, 8).empty());  // triangle-free
    CHECK(oracle::brute_force_structures(8, 2, 3, 6).size() == 19);
}

TEST_CASE("brute-force LETS enumeration on the small array code") {
    TannerGraph g = build_array_code(5, 3);
    auto all = oracle::brute_force_lets(g, 3, 3);
    // (3,3) instances of the p=5 array code: p^2 * (p-1) = 100
    size_t triangles = 0;
    for (const auto& inst : all)
        if (inst.cls == ClassId{3, 3}) ++triangles;
    CHECK(triangles == 100);
    // below the girth bound nothing exists
    CHECK(oracle::brute_force_lets(g, 2, 10).empty());
}

TEST_CASE("brute-force results are sound and deduplicated") {
    TannerGraph g = random_regular_tanner(24, 3, 6, 6, 7);
    auto all = oracle::brute_force_lets(g, 6, 6);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].vars < all[i].vars);
    for (const auto& inst : all) {
        InducedProfile p = induced_profile(g, inst.vars);
        CHECK(p.is_elementary);
        CHECK(p.is_connected);
        CHECK(p.is_leafless);
        CHECK(ClassId{p.a, p.b} == inst.cls);
    }
}

TEST_CASE("random regular tanner generator honors constraints") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        TannerGraph g = random_regular_tanner(30, 3, 6, 6, seed);
        CHECK(g.n() == 30);
        CHECK(g.m_checks() == 15);
        CHECK(g.girth() >= 6);
    }
    TannerGraph g8 = random_regular_tanner(48, 3, 6, 8, 11);
    CHECK(g8.girth() >= 8);
}
