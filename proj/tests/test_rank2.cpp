#include <catch2/catch_amalgamated.hpp>

#include "mbp/rank2.hpp"
#include "mbp/split.hpp"
#include "mbp/verify.hpp"

using namespace mbp;

TEST_CASE("composition aggregations") {
    Composition alpha{2, 4, 0, 6, 7};
    CHECK(lambda_comp(alpha, 4) == Composition{6, 6, 7});
    CHECK(mu_comp(alpha, 4) == Composition{12, 7});
    CHECK(mu_comp(Composition{3, 5}, 1) == Composition{3, 5});
    CHECK_THROWS_AS(lambda_comp(alpha, 1), Error);
    CHECK_THROWS_AS(lambda_comp(alpha, 5), Error);
    CHECK_THROWS_AS(mu_comp(alpha, 5), Error);
}

TEST_CASE("zero deletion") {
    CHECK(zero_deletion(Composition{1, 3, 0, 6, 3}) == Composition{1, 3, 6, 3});
    CHECK(zero_deletion(Composition{0, 0, 5}) == Composition{5});
    CHECK(zero_deletion(Composition{2, 1, 1}) == Composition{2, 1, 1});
    CHECK_THROWS_AS(zero_deletion(Composition{1, -1}), Error);
}

TEST_CASE("rank-2 split pieces") {
    SECTION("the octahedron composition") {
        auto [m1, m2] = rank2_split(Composition{1, 1, 1, 1}, 2);
        CHECK(m1 == rank2_from_composition(Composition{2, 1, 1}));
        CHECK(m2 == rank2_from_composition(Composition{1, 1, 2}));
    }
    SECTION("a longer composition") {
        auto [m1, m2] = rank2_split(Composition{2, 1, 1, 1}, 2);
        CHECK(m1 == rank2_from_composition(Composition{3, 1, 1}));
        CHECK(m2 == rank2_from_composition(Composition{2, 1, 2}));
    }
    SECTION("pieces match the filtered split of the base matroid") {
        Composition alpha{1, 2, 1, 1};
        auto [m1, m2] = rank2_split(alpha, 2);
        ElementSet s = composition_blocks(alpha)[0] | composition_blocks(alpha)[1];
        SplitResult res = hyperplane_split(rank2_from_composition(alpha), {s, 1});
        REQUIRE(res.is_split);
        CHECK(res.m_minus->bases() == m1.bases());
        CHECK(res.m_plus->bases() == m2.bases());
    }
    SECTION("both sides need two classes") {
        CHECK_THROWS_AS(rank2_split(Composition{1, 1, 1, 1}, 1), Error);
        CHECK_THROWS_AS(rank2_split(Composition{1, 1, 1}, 2), Error);
        try {
            rank2_split(Composition{1, 1, 1, 1}, 3);
            FAIL("expected BadM");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::BadM);
        }
    }
}

TEST_CASE("rank-2 cd-indices") {
    CHECK(cd_index_rank2(Composition{1, 1, 1}).to_text() == "c^2 + d");
    CHECK(cd_index_rank2(Composition{2, 2, 1}).to_text() ==
          "c^4 + 5c^2d + 10cdc + 6dc^2 + 10d^2");
    CHECK(cd_index_rank2(Composition{4, 1, 1}).to_text() ==
          "c^5 + 5c^3d + 13c^2dc + 15cdc^2 + 20cd^2 + 7dc^3 + 18dcd + 22d^2c");
    SECTION("two classes give products of simplices") {
        CHECK(cd_index_rank2(Composition{1, 1}) == NCPolynomial::one(Alphabet::cd));
        CHECK(cd_index_rank2(Composition{2, 2}).to_text() == "c^2 + 2d");
        CHECK(cd_index_rank2(Composition{2, 3}).to_text() == "c^3 + 3cd + 4dc");
    }
    SECTION("recursion equals the direct route up to sum 6") {
        for (int n = 2; n <= 6; ++n)
            for (const Composition& alpha : strict_compositions(n)) {
                if (alpha.length() < 2) continue;
                CHECK(cd_index_rank2(alpha) == cd_index_rank2_direct(alpha));
            }
    }
    SECTION("order of the classes does not matter") {
        CHECK(cd_index_rank2(Composition{1, 2, 3}) == cd_index_rank2(Composition{3, 2, 1}));
        CHECK(cd_index_rank2_direct(Composition{1, 2, 1}) ==
              cd_index_rank2_direct(Composition{1, 1, 2}));
    }
}

TEST_CASE("published table of three-class indices") {
    auto rows = table1();
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().first == Composition{1, 1, 1});
    CHECK(rows.back().first == Composition{3, 2, 2});
    SECTION("spot values") {
        for (const auto& [alpha, psi] : rows) {
            if (alpha == Composition{3, 1, 1})
                CHECK(psi.to_text() == "c^4 + 4c^2d + 8cdc + 5dc^2 + 7d^2");
            if (alpha == Composition{2, 2, 2})
                CHECK(psi.to_text() ==
                      "c^5 + 7c^3d + 21c^2dc + 24cdc^2 + 36cd^2 + 10dc^3 + 34dcd + 42d^2c");
            if (alpha == Composition{3, 2, 2})
                CHECK(psi.to_text() ==
                      "c^6 + 8c^4d + 30c^3dc + 51c^2dc^2 + 69c^2d^2 + 42cdc^3 + 116cdcd + "
                      "142cd^2c + 14dc^4 + 64dc^2d + 136dcdc + 98d^2c^2 + 142d^3");
        }
    }
    SECTION("every row equals both computations") {
        for (const auto& [alpha, psi] : rows) {
            CHECK(cd_index_rank2_direct(alpha) == psi);
            CHECK(cd_index_rank2(alpha) == psi);
        }
    }
}

TEST_CASE("crossing subsets match crossing faces on rank-2 polytopes") {
    // the faces of Q(M_alpha) meeting both open halfspaces of the split at
    // S = first m blocks are exactly the deletion faces M|_T for proper T
    // with >= 4 classes split two against two by S
    for (int n = 4; n <= 7; ++n) {
        for (const Composition& alpha : strict_compositions(n)) {
            if (alpha.length() < 4) continue;
            Matroid m = rank2_from_composition(alpha);
            auto blocks = composition_blocks(alpha);
            for (int cut = 2; cut <= alpha.length() - 2; ++cut) {
                ElementSet s;
                for (int i = 0; i < cut; ++i) s = s | blocks[i];
                REQUIRE(hyperplane_split(m, {s, 1}).is_split);
                FaceLattice fl = face_lattice(m);
                std::set<std::vector<ElementSet>> crossing;
                for (int i = 0; i < fl.poset.size(); ++i) {
                    if (i == fl.poset.bottom() || i == fl.poset.top()) continue;
                    bool up = false, down = false;
                    for (ElementSet b : fl.faces[i].vertex_bases) {
                        if ((b & s).size() > 1) up = true;
                        if ((b & s).empty()) down = true;
                    }
                    if (up && down) crossing.insert(fl.faces[i].vertex_bases);
                }
                std::set<std::vector<ElementSet>> from_subsets;
                for (std::uint32_t t = 1; t + 1 < (1u << n); ++t) {
                    ElementSet T(t);
                    if (m.rank(T) < 2) continue;
                    Matroid mt = m.restriction(T);
                    auto classes = parallelism_classes(mt);
                    if (classes.size() < 4) continue;
                    int inside = 0, outside = 0;
                    for (ElementSet cls : classes)
                        (cls.subset_of(s) ? inside : outside)++;
                    if (inside < 2 || outside < 2) continue;
                    std::vector<ElementSet> fam;
                    for (ElementSet b : m.bases())
                        if (b.subset_of(T)) fam.push_back(b);
                    from_subsets.insert(fam);
                }
                CHECK(crossing == from_subsets);
            }
        }
    }
}

TEST_CASE("subset multiplicities follow the binomial product") {
    for (int n = 2; n <= 7; ++n) {
        for (const Composition& alpha : strict_compositions(n)) {
            if (alpha.length() < 2) continue;
            auto blocks = composition_blocks(alpha);
            std::map<std::vector<int>, long long> counts;
            for (std::uint32_t t = 0; t < (1u << n); ++t) {
                std::vector<int> beta;
                for (ElementSet blk : blocks) beta.push_back((ElementSet(t) & blk).size());
                counts[beta]++;
            }
            for (const auto& [beta, count] : counts) {
                long long expect = 1;
                for (int j = 0; j < alpha.length(); ++j) {
                    long long binom = 1;
                    for (int i = 1; i <= beta[j]; ++i)
                        binom = binom * (alpha.parts[j] - beta[j] + i) / i;
                    expect *= binom;
                }
                CHECK(count == expect);
            }
        }
    }
}

TEST_CASE("class-union criterion decides rank-2 splits (n <= 8)") {
    // a hyperplane at level 1 splits a rank-2 base polytope exactly when S
    // and its complement are each unions of at least two parallelism classes
    for (int n = 3; n <= 8; ++n) {
        for (const Composition& alpha : strict_compositions(n)) {
            if (alpha.length() < 2) continue;
            Matroid m = rank2_from_composition(alpha);
            auto blocks = composition_blocks(alpha);
            for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
                ElementSet S(s);
                int inside = 0, outside = 0;
                bool clean = true;
                for (ElementSet blk : blocks) {
                    if (blk.subset_of(S))
                        inside++;
                    else if (!blk.intersects(S))
                        outside++;
                    else
                        clean = false;
                }
                bool class_union_split = clean && inside >= 2 && outside >= 2;
                CHECK(hyperplane_split(m, {S, 1}).is_split == class_union_split);
            }
        }
    }
}
