#include <catch2/catch_amalgamated.hpp>

#include "mbp/json_io.hpp"
#include "mbp/rank2.hpp"
#include "mbp/verify.hpp"

using namespace mbp;

TEST_CASE("matroid JSON") {
    SECTION("canonical form") {
        Matroid m = rank2_from_composition(Composition{2, 1, 1});
        json j = matroid_to_json(m);
        CHECK(j["n"] == 4);
        CHECK(j.dump() == R"({"bases":[[1,3],[1,4],[2,3],[2,4],[3,4]],"n":4})");
    }
    SECTION("round trip over the corpus") {
        for (const Matroid& m : {uniform(2, 4), rank2_from_composition(Composition{3, 2}),
                                 k4_graphic()}) {
            Matroid back = matroid_from_json(matroid_to_json(m));
            CHECK(back == m);
        }
    }
    SECTION("minors are re-indexed at the boundary") {
        Matroid c = uniform(2, 4).contraction(ElementSet::of({1}));  // ground {2,3,4}
        json j = matroid_to_json(c);
        CHECK(j["n"] == 3);
        CHECK(matroid_from_json(j) == uniform(1, 3));
    }
    SECTION("parse errors") {
        CHECK_THROWS_AS(matroid_from_json_text("not json"), Error);
        CHECK_THROWS_AS(matroid_from_json_text(R"({"n":2})"), Error);
        CHECK_THROWS_AS(matroid_from_json_text(R"({"n":2,"bases":[[0]]})"), Error);
        CHECK_THROWS_AS(matroid_from_json_text(R"({"n":2,"bases":[[3]]})"), Error);
        try {
            matroid_from_json_text(R"({"n":"two","bases":[]})");
            FAIL("expected InputParse");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InputParse);
        }
    }
}

TEST_CASE("polynomial JSON and text") {
    NCPolynomial p(Alphabet::cd);
    p.add_term("ccc", 1);
    p.add_term("cd", 3);
    p.add_term("dc", 3);
    SECTION("JSON keys are plain words") {
        json j = poly_to_json(p);
        CHECK(j.dump() == R"({"ccc":1,"cd":3,"dc":3})");
        CHECK(poly_from_json(j, Alphabet::cd) == p);
    }
    SECTION("text form collapses runs") {
        CHECK(p.to_text() == "c^3 + 3cd + 3dc");
        CHECK(NCPolynomial::one(Alphabet::cd).to_text() == "1");
        CHECK(NCPolynomial(Alphabet::cd).to_text() == "0");
        NCPolynomial q(Alphabet::ab);
        q.add_term("a", 1);
        q.add_term("b", -1);
        CHECK(q.to_text() == "a - b");
    }
    SECTION("graded-lex ordering of terms") {
        NCPolynomial t(Alphabet::cd);
        t.add_term("dc", 1);
        t.add_term("ccc", 1);
        t.add_term("cd", 1);
        CHECK(t.to_text() == "c^3 + cd + dc");
        NCPolynomial mixed(Alphabet::cd);
        mixed.add_term("d", 2);
        mixed.add_term("", 5);
        CHECK(mixed.to_text() == "5 + 2d");
    }
    SECTION("bad words rejected") {
        CHECK_THROWS_AS(poly_from_json(json{{"cx", 1}}, Alphabet::cd), Error);
        CHECK_THROWS_AS(NCPolynomial::monomial(Alphabet::ab, "cd"), Error);
    }
}

TEST_CASE("flag vector JSON") {
    FlagVector f = flag_f_vector(face_lattice(uniform(2, 3)).poset);
    json j = flag_vector_to_json(f);
    CHECK(j[""] == 1);
    CHECK(j["1"] == 3);
    CHECK(j["2"] == 3);
    CHECK(j["1,2"] == 6);
}

TEST_CASE("poset JSON") {
    LabeledPoset p = P_B(uniform(2, 3), ElementSet::of({1, 2}));
    json j = labeled_poset_to_json(p);
    CHECK(j["elements"].size() == 3);
    CHECK(j["cover_relations"].dump() == "[[0,2],[1,2]]");
    CHECK(labeled_poset_to_text(p).find("1 < 3") != std::string::npos);
}

TEST_CASE("face lattice JSON") {
    FaceLattice fl = face_lattice(uniform(2, 3));
    json j = face_lattice_to_json(fl);
    CHECK(j["dim"] == 2);
    CHECK(j["faces"].size() == 8);
    // covers: 3 vertex-over-empty + 6 edge-over-vertex + 3 top-over-edge
    CHECK(j["cover_relations"].size() == 12);
}

TEST_CASE("weight parsing") {
    CHECK(parse_weights("0,1,2", 3) == std::vector<long long>{0, 1, 2});
    CHECK(parse_weights("0,1/2,-3", 3) == std::vector<long long>{0, 1, -6});
    CHECK(parse_weights("1/3,1/6", 2) == std::vector<long long>{2, 1});
    CHECK_THROWS_AS(parse_weights("1,2", 3), Error);
    CHECK_THROWS_AS(parse_weights("1,x", 2), Error);
    CHECK_THROWS_AS(parse_weights("1,1/0", 2), Error);
}

TEST_CASE("composition parsing") {
    CHECK(Composition::parse("2,1,1") == Composition{2, 1, 1});
    CHECK(Composition::parse("7") == Composition{7});
    CHECK(Composition{2, 1, 1}.to_string() == "2,1,1");
    CHECK_THROWS_AS(Composition::parse("2,,1"), Error);
    CHECK_THROWS_AS(Composition::parse("a"), Error);
}
