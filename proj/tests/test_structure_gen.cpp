#include "doctest.h"
#include "trapscan/oracle.hpp"
#include "trapscan/structure_gen.hpp"

using namespace trapscan;

TEST_CASE("small classes match known counts, d_v = 3, girth 6") {
    // non-isomorphic leafless structure counts per (a, b) class
    CHECK(generate_class(3, 3, 3, 6).structures.size() == 1);  // s_3
    CHECK(generate_class(4, 4, 3, 6).structures.size() == 1);  // s_4
    CHECK(generate_class(4, 2, 3, 6).structures.size() == 1);
    CHECK(generate_class(4, 0, 3, 6).structures.size() == 1);  // K_4
    CHECK(generate_class(5, 3, 3, 6).structures.size() == 2);
    CHECK(generate_class(6, 2, 3, 6).structures.size() == 4);
    CHECK(generate_class(6, 4, 3, 6).structures.size() == 4);
    CHECK(generate_class(7, 5, 3, 6).structures.size() == 6);
    CHECK(generate_class(8, 2, 3, 6).structures.size() == 19);
    CHECK(generate_class(9, 3, 3, 6).structures.size() == 63);
    CHECK(generate_class(9, 1, 3, 6).structures.size() == 19);
}

TEST_CASE("triangle-free regime, d_v = 3, girth 8") {
    CHECK(generate_class(3, 3, 3, 8).impossible);
    CHECK(generate_class(4, 4, 3, 8).structures.size() == 1);  // s_4 only
    CHECK(generate_class(5, 3, 3, 8).structures.size() == 1);
    CHECK(generate_class(6, 4, 3, 8).structures.size() == 2);
}

TEST_CASE("impossible classes are flagged") {
    CHECK(generate_class(3, 4, 3, 6).impossible);   // parity
    CHECK(generate_class(5, 0, 3, 6).impossible);   // parity
    CHECK(generate_class(3, 1, 3, 6).structures.size() == 0);  // e = 4 > C(3,2)
    CHECK(generate_class(2, 0, 3, 6).impossible);   // below girth floor
    CHECK_FALSE(generate_class(4, 2, 3, 6).impossible);
}

TEST_CASE("exactly one structure has the largest b per size and it is the cycle") {
    for (int dv = 3; dv <= 5; ++dv) {
        for (int a = 3; a <= 8; ++a) {
            auto top = generate_class(a, a * (dv - 2), dv, 6);
            REQUIRE(top.structures.size() == 1);
            CHECK(top.structures[0].is_simple_cycle());
            // and every feasible class strictly above is impossible
            CHECK(generate_class(a, a * (dv - 2) + 2, dv, 6).structures.empty());
        }
    }
}

TEST_CASE("generate_class equals the brute-force oracle for a <= 7") {
    for (int dv : {3, 4, 5}) {
        for (int girth : {6, 8}) {
            for (int a = 3; a <= 7; ++a) {
                for (int b = 0; b <= a * (dv - 2); ++b) {
                    auto fast = generate_class(a, b, dv, girth);
                    auto slow = oracle::brute_force_structures(a, b, dv, girth);
                    CHECK(fast.structures.size() == slow.size());
                    if (fast.structures.size() == slow.size()) {
                        // same isomorphism classes, not just counts
                        std::vector<CanonicalCode> lhs, rhs;
                        for (const auto& s : fast.structures) lhs.push_back(canonical_form(s));
                        for (const auto& s : slow) rhs.push_back(canonical_form(s));
                        std::sort(lhs.begin(), lhs.end());
                        std::sort(rhs.begin(), rhs.end());
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("dv = 4 spot checks against published table rows") {
    CHECK(generate_class(5, 8, 4, 6).structures.size() == 3);   // 2 + s_4
    CHECK(generate_class(6, 8, 4, 6).structures.size() == 10);  // 7 + 2 + s_5
    CHECK(generate_class(8, 8, 4, 8).structures.size() == 14);
    CHECK(generate_class(10, 10, 4, 6).structures.size() == 9244);
}

TEST_CASE("larger d_v = 3 classes used by the deep tables") {
    CHECK(generate_class(10, 0, 3, 6).structures.size() == 19);
    CHECK(generate_class(11, 1, 3, 6).structures.size() == 114);
    CHECK(generate_class(12, 2, 3, 6).structures.size() == 835);
    CHECK(generate_class(12, 4, 3, 6).structures.size() == 1892);
    CHECK(generate_class(12, 0, 3, 6).structures.size() == 85);
    CHECK(generate_class(11, 5, 3, 6).structures.size() == 536);
    CHECK(generate_class(10, 4, 3, 6).structures.size() == 198);
    CHECK(generate_class(11, 3, 3, 6).structures.size() == 482);
    CHECK(generate_class(10, 2, 3, 6).structures.size() == 113);
}
