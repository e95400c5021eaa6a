#include <catch2/catch_amalgamated.hpp>

#include "mbp/matroid.hpp"
#include "mbp/verify.hpp"

using namespace mbp;

namespace {

Matroid square() { return direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4}))); }

}  // namespace

TEST_CASE("element sets") {
    ElementSet s = ElementSet::of({1, 3, 4});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK((s & ElementSet::of({3, 4, 5})) == ElementSet::of({3, 4}));
    CHECK((s - ElementSet::of({1})) == ElementSet::of({3, 4}));
    CHECK(s.complement_in(ElementSet::full(5)) == ElementSet::of({2, 5}));
    CHECK(ElementSet::parse("1,3,4") == s);
    CHECK(s.to_string() == "1,3,4");
    CHECK(ElementSet().to_string() == "{}");
    CHECK_THROWS_AS(ElementSet::parse("0"), Error);
}

TEST_CASE("matroid construction and validation") {
    SECTION("all 2-subsets of [3] form the uniform matroid") {
        Matroid m = Matroid::from_bases(
            3, {ElementSet::of({1, 2}), ElementSet::of({1, 3}), ElementSet::of({2, 3})});
        CHECK(m.rank() == 2);
        CHECK(m == uniform(2, 3));
    }
    SECTION("the five pairs meeting {1,2} at most once on [4]") {
        Matroid m = Matroid::from_bases(4, {ElementSet::of({1, 3}), ElementSet::of({1, 4}),
                                            ElementSet::of({2, 3}), ElementSet::of({2, 4}),
                                            ElementSet::of({3, 4})});
        CHECK(m == rank2_from_composition(Composition{2, 1, 1}));
    }
    SECTION("unequal sizes rejected") {
        try {
            Matroid::from_bases(3, {ElementSet::of({1, 2}), ElementSet::of({3})});
            FAIL("expected UnequalSizes");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnequalSizes);
        }
    }
    SECTION("empty family rejected") {
        try {
            Matroid::from_bases(3, {});
            FAIL("expected EmptyFamily");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyFamily);
        }
    }
    SECTION("exchange violation reports a witness") {
        try {
            Matroid::from_bases(4, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
            FAIL("expected ExchangeAxiomViolated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ExchangeAxiomViolated);
            CHECK(std::string(e.what()).find("1,2") != std::string::npos);
        }
    }
    SECTION("ground set cap") {
        CHECK_THROWS_AS(uniform(2, 13), Error);
    }
}

TEST_CASE("is_basis_family") {
    CHECK(is_basis_family(4, {ElementSet::of({1, 3}), ElementSet::of({1, 4}), ElementSet::of({2, 3}),
                              ElementSet::of({2, 4}), ElementSet::of({3, 4})}));
    CHECK_FALSE(is_basis_family(4, {ElementSet::of({1, 2}), ElementSet::of({3, 4})}));
    CHECK_FALSE(is_basis_family(4, {}));
    CHECK_FALSE(is_basis_family(4, {ElementSet::of({1, 2}), ElementSet::of({3})}));
}

TEST_CASE("rank function") {
    Matroid m211 = rank2_from_composition(Composition{2, 1, 1});
    CHECK(uniform(2, 3).rank(ElementSet::of({1, 2})) == 2);
    CHECK(m211.rank(ElementSet::of({1, 2})) == 1);
    CHECK(m211.rank(ElementSet()) == 0);

    SECTION("monotone and submodular, exhaustively on small matroids") {
        for (const Matroid& m :
             {uniform(2, 4), m211, k4_graphic(), rank2_from_composition(Composition{2, 2, 1})}) {
            int n = m.ground_size();
            for (std::uint32_t s = 0; s < (1u << n); ++s)
                for (std::uint32_t t = 0; t < (1u << n); ++t) {
                    ElementSet S(s), T(t);
                    if (S.subset_of(T)) CHECK(m.rank(S) <= m.rank(T));
                    CHECK(m.rank(S | T) + m.rank(S & T) <= m.rank(S) + m.rank(T));
                }
        }
    }
}

TEST_CASE("minors") {
    SECTION("restriction of the free pair") {
        Matroid r = uniform(2, 4).restriction(ElementSet::of({1, 2}));
        CHECK(r.ground() == ElementSet::of({1, 2}));
        CHECK(r.bases() == std::vector<ElementSet>{ElementSet::of({1, 2})});
    }
    SECTION("contraction of a uniform matroid is uniform on the rest") {
        Matroid c = uniform(2, 4).contraction(ElementSet::of({1}));
        CHECK(c == uniform_on(1, ElementSet::of({2, 3, 4})));
    }
    SECTION("contracting the parallel class leaves the two coloops") {
        Matroid c = rank2_from_composition(Composition{2, 1, 1}).contraction(ElementSet::of({1, 2}));
        CHECK(c.ground() == ElementSet::of({3, 4}));
        CHECK(c.bases() == std::vector<ElementSet>{ElementSet::of({3}), ElementSet::of({4})});
    }
    SECTION("deletion is restriction to the complement") {
        Matroid m = k4_graphic();
        CHECK(m.deletion(ElementSet::of({6})) == m.restriction(ElementSet::of({1, 2, 3, 4, 5})));
    }
    SECTION("restrict-then-contract agrees with contract-then-restrict") {
        for (const Matroid& m : {uniform(2, 5), k4_graphic(), rank2_from_composition(Composition{3, 2, 1})}) {
            int n = m.ground_size();
            for (std::uint32_t s2 = 1; s2 < (1u << n); ++s2)
                for (std::uint32_t s1 = (s2 - 1) & s2;; s1 = (s1 - 1) & s2) {
                    ElementSet S1(s1), S2(s2);
                    CHECK(m.restriction(S2).contraction(S1) ==
                          m.contraction(S1).restriction(S2 - S1));
                    if (s1 == 0) break;
                }
        }
    }
}

TEST_CASE("direct sums") {
    Matroid sq = square();
    CHECK(sq.bases().size() == 4);
    CHECK(direct_sum(uniform(1, 1), uniform_on(1, ElementSet::of({2}))).bases() ==
          std::vector<ElementSet>{ElementSet::of({1, 2})});
    CHECK(direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4, 5}))).bases().size() == 6);
    try {
        direct_sum(uniform(1, 2), uniform(1, 3));
        FAIL("expected LabelCollision");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LabelCollision);
    }
}

TEST_CASE("connected components") {
    SECTION("direct sum splits into its summands") {
        Matroid m = direct_sum(uniform(1, 2), uniform_on(1, ElementSet::of({3, 4, 5})));
        CHECK(m.components() == std::vector<ElementSet>{ElementSet::of({1, 2}), ElementSet::of({3, 4, 5})});
    }
    SECTION("the edge between e_{14} and e_{24} of the square pyramid") {
        Matroid ms = Matroid::unchecked(ElementSet::full(4),
                                        {ElementSet::of({1, 4}), ElementSet::of({2, 4})});
        CHECK(ms.components() ==
              std::vector<ElementSet>{ElementSet::of({1, 2}), ElementSet::of({3}), ElementSet::of({4})});
    }
    CHECK(uniform(2, 4).components() == std::vector<ElementSet>{ElementSet::full(4)});
    SECTION("components of a direct sum are the disjoint union of components") {
        Matroid a = rank2_from_composition(Composition{2, 1});
        Matroid b = uniform_on(2, ElementSet::of({4, 5, 6}));
        auto combined = direct_sum(a, b).components();
        auto left = a.components();
        auto right = b.components();
        left.insert(left.end(), right.begin(), right.end());
        std::sort(left.begin(), left.end(),
                  [](ElementSet x, ElementSet y) { return x.min_element() < y.min_element(); });
        CHECK(combined == left);
    }
}

TEST_CASE("rank-2 builders") {
    CHECK(rank2_from_composition(Composition{1, 1, 1}) == uniform(2, 3));
    CHECK(uniform(2, 4).bases().size() == 6);
    SECTION("class structure controls connectivity") {
        for (int n = 2; n <= 7; ++n)
            for (const Composition& alpha : strict_compositions(n)) {
                if (alpha.length() < 2) continue;
                Matroid m = rank2_from_composition(alpha);
                if (alpha.length() == 2)
                    CHECK(m.components().size() == 2);
                else
                    CHECK(m.is_connected());
                CHECK(composition_blocks(alpha) == parallelism_classes(m));
            }
    }
    SECTION("bad parameters") {
        CHECK_THROWS_AS(rank2_from_composition(Composition{3}), Error);
        CHECK_THROWS_AS(rank2_from_composition(Composition{2, 0, 1}), Error);
        CHECK_THROWS_AS(uniform(3, 2), Error);
    }
}

TEST_CASE("minors of corpus matroids stay valid") {
    for (const Matroid& m : full_corpus(5)) {
        int n = m.ground_size();
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            ElementSet S = ElementSet(s) & m.ground();
            CHECK(is_basis_family(m.ground(), m.restriction(S).bases()));
            CHECK(is_basis_family(m.ground(), m.contraction(S).bases()));
        }
    }
}
