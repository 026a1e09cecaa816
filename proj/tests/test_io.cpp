#include <doctest.h>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/io.hpp"

using namespace topo;

TEST_CASE("complex round trip") {
    for (const auto& [name, k] : standard_corpus()) {
        CAPTURE(name);
        const auto loaded = complex_from_json(complex_to_json(k));
        CHECK(loaded.complex == k);
    }
}

TEST_CASE("sparse ids are renumbered and kept as labels") {
    const auto doc = parse_document(
        R"({"type":"complex","facets":[[10,20],[20,35]],"coloring":{"10":1,"20":2,"35":1}})");
    REQUIRE(doc.complex);
    const auto& k = doc.complex->complex;
    CHECK(k.vertices() == std::vector<VertexId>{0, 1, 2});
    CHECK(k.label(2) == "35");
    CHECK(doc.complex->vertex(20) == 1);
    CHECK(k.color(2) == 1);
    CHECK_THROWS_AS(doc.complex->vertex(11), InvalidArgument);

    const auto labelled = parse_document(R"({"type":"complex","facets":[[0,1]],"labels":{"0":"a"}})");
    CHECK(labelled.complex->complex.label(0) == "a");
    CHECK(labelled.complex->complex.label(1) == "1");
}

TEST_CASE("malformed complexes") {
    CHECK_THROWS_AS(parse_document("{bad"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"facets":[[0,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex"})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex","facets":[[0,"x"]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex","facets":[[0,1],[0,1]]})"), InvalidComplexError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex","facets":[[1,0]]})"), InvalidComplexError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex","facets":[[0,1]],"coloring":{"7":1}})"),
                    InvalidComplexError);
    CHECK_THROWS_AS(parse_document(R"({"type":"complex","facets":[[0,1]],"coloring":{"x":1}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"type":"shape"})"), ParseError);
}

TEST_CASE("poset round trip and rank cross-check") {
    const auto p = double_circle();
    const auto back = poset_from_json(poset_to_json(p));
    CHECK(back.elements().size() == 4);
    CHECK(back.covers() == p.covers());
    CHECK(back.coloring() == p.coloring());

    const auto doc = parse_document(R"({"type":"poset","elements":[{"id":0,"rank":1},{"id":1,"rank":1},
        {"id":2,"rank":2,"label":"e"}],"covers":[[0,2],[1,2]]})");
    REQUIRE(doc.poset);
    CHECK(doc.poset->element(2).label == "e");

    CHECK_THROWS_AS(parse_document(R"({"type":"poset","elements":[{"id":0,"rank":1},{"id":1,"rank":3}],
        "covers":[[0,1]]})"), InvalidPosetError);
    CHECK_THROWS_AS(parse_document(R"({"type":"poset","elements":[{"id":0,"rank":1}],"covers":[[0,5]]})"),
                    InvalidPosetError);
    CHECK_THROWS_AS(parse_document(R"({"type":"poset","elements":[{"id":0,"rank":2},{"id":1,"rank":2}],
        "covers":[[0,1],[1,0]]})"), InvalidPosetError);
    CHECK_THROWS_AS(parse_document(R"({"type":"poset","elements":[{"id":0,"rank":1},{"id":1,"rank":2}],
        "covers":[[0,1]]})"), InvalidPosetError);
    CHECK_THROWS_AS(parse_document(R"({"type":"poset","elements":[{"id":0}],"covers":[]})"), ParseError);
}

TEST_CASE("certificate round trip") {
    EquivalenceCertificate c{{PathMove{MoveKind::Expand, 1, 4, {0, 2, 4}},
                              PathMove{MoveKind::Contract, 0, 2, {0, 2}}}};
    const auto json = certificate_to_json(c);
    CHECK(json[0]["kind"] == "expand");
    CHECK(json[1]["witness"] == Json::array({0, 2}));
    CHECK(certificate_from_json(json).moves == c.moves);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"([{"kind":"twist","position":0,"vertex":0,"witness":[]}])")),
                    ParseError);
}
