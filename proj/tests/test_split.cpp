#include <catch2/catch_amalgamated.hpp>

#include "mbp/split.hpp"
#include "mbp/verify.hpp"

using namespace mbp;

TEST_CASE("split conditions") {
    Matroid u24 = uniform(2, 4);
    Matroid m211 = rank2_from_composition(Composition{2, 1, 1});
    SECTION("condition (i)") {
        CHECK(check_condition_i(u24, {ElementSet::of({1, 2}), 1}));
        CHECK_FALSE(check_condition_i(m211, {ElementSet::of({1, 2}), 1}));
        CHECK_FALSE(check_condition_i(u24, {ElementSet::of({1}), 1}));
    }
    SECTION("condition (ii) and its dual") {
        CHECK(check_condition_ii(u24, {ElementSet::of({1, 2}), 1}));
        CHECK(check_condition_ii(uniform(2, 5), {ElementSet::of({1, 2}), 1}));
        CHECK(check_condition_ii_dual(u24, {ElementSet::of({1, 2}), 1}));
    }
    SECTION("spec validation") {
        CHECK_THROWS_AS(check_condition_i(u24, {ElementSet(), 1}), Error);
        CHECK_THROWS_AS(check_condition_i(u24, {ElementSet::full(4), 1}), Error);
        CHECK_THROWS_AS(check_condition_i(u24, {ElementSet::of({1, 2}), 0}), Error);
        CHECK_THROWS_AS(check_condition_i(u24, {ElementSet::of({1, 2}), 2}), Error);
    }
}

TEST_CASE("hyperplane splits") {
    SECTION("the octahedron splits into two square pyramids") {
        SplitResult res = hyperplane_split(uniform(2, 4), {ElementSet::of({1, 2}), 1});
        REQUIRE(res.is_split);
        CHECK(res.m_minus->bases() == rank2_from_composition(Composition{2, 1, 1}).bases());
        CHECK(res.m_hat->bases() ==
              std::vector<ElementSet>{ElementSet::of({1, 3}), ElementSet::of({2, 3}),
                                      ElementSet::of({1, 4}), ElementSet::of({2, 4})});
        CHECK(polytope_dimension(*res.m_hat) == polytope_dimension(uniform(2, 4)) - 1);
    }
    SECTION("the square pyramid does not split at its degenerate direction") {
        SplitResult res = hyperplane_split(rank2_from_composition(Composition{2, 1, 1}),
                                           {ElementSet::of({1, 2}), 1});
        CHECK_FALSE(res.is_split);
        CHECK(res.reason == "condition_i");
    }
    SECTION("three singleton classes against two split the rank-2 matroid on [5]") {
        SplitResult res = hyperplane_split(uniform(2, 5), {ElementSet::of({1, 2, 3}), 1});
        REQUIRE(res.is_split);
        CHECK(res.m_plus->bases().size() + res.m_minus->bases().size() ==
              10 + res.m_hat->bases().size());
    }
    SECTION("frozen pieces for the [5] split at {1,2}") {
        SplitResult res = hyperplane_split(uniform(2, 5), {ElementSet::of({1, 2}), 1});
        REQUIRE(res.is_split);
        CHECK(res.m_plus->bases().size() == 7);
        CHECK(res.m_minus->bases().size() == 9);
        CHECK(res.m_hat->bases().size() == 6);
    }
}

TEST_CASE("brute-force split oracle") {
    CHECK(brute_force_split_oracle(uniform(2, 4), {ElementSet::of({1, 2}), 1}));
    CHECK_FALSE(brute_force_split_oracle(uniform(2, 4), {ElementSet::of({1, 2, 3}), 1}));
    SECTION("agrees with the two-condition test on a small sweep") {
        for (const Matroid& m : full_corpus(5)) {
            if (m.rank() < 2) continue;
            int n = m.ground_size();
            for (std::uint32_t s = 1; s + 1 < (1u << n); ++s)
                for (int k = 1; k <= m.rank() - 1; ++k) {
                    SplitSpec spec{ElementSet(s), k};
                    CHECK(hyperplane_split(m, spec).is_split == brute_force_split_oracle(m, spec));
                }
        }
    }
}

TEST_CASE("split identity") {
    SECTION("octahedron: both sides are the octahedron index") {
        SplitIdentityReport rep = verify_split_identity(uniform(2, 4), {ElementSet::of({1, 2}), 1});
        CHECK(rep.equal);
        CHECK(rep.lhs.to_text() == "c^3 + 6cd + 4dc");
        CHECK(rep.crossing_faces == 0);
    }
    SECTION("a rank-3 case") {
        SplitIdentityReport rep = verify_split_identity(uniform(3, 6), {ElementSet::of({1, 2, 3}), 1});
        CHECK(rep.equal);
        CHECK(rep.lhs.to_text() ==
              "c^5 + 10c^3d + 48c^2dc + 70cdc^2 + 100cd^2 + 18dc^3 + 60dcd + 84d^2c");
    }
    SECTION("identity holds across all splits of the [6] rank-2 corpus") {
        for (const Matroid& m : rank2_corpus(6)) {
            int n = m.ground_size();
            std::optional<FaceLattice> lattice;
            for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
                SplitSpec spec{ElementSet(s), 1};
                if (!hyperplane_split(m, spec).is_split) continue;
                if (!lattice) lattice = face_lattice(m);
                CHECK(verify_split_identity(m, spec, *lattice).equal);
            }
        }
    }
    SECTION("rejects non-splits") {
        CHECK_THROWS_AS(verify_split_identity(uniform(2, 4), {ElementSet::of({1}), 1}), Error);
    }
}
