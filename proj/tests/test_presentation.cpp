#include <doctest.h>

#include <random>

#include "topo/error.hpp"
#include "topo/presentation.hpp"

using namespace topo;

namespace {

GroupPresentation on(std::size_t generators, std::vector<Word> relators) {
    GroupPresentation p;
    for (std::size_t i = 0; i < generators; ++i) {
        Generator g;
        g.u = static_cast<VertexId>(i);
        g.v = static_cast<VertexId>(i + 1);
        p.generators.push_back(g);
    }
    p.relators = std::move(relators);
    return p;
}

} // namespace

TEST_CASE("word operations") {
    CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
    CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(free_reduce({1, -1}).empty());
    CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
    CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
    CHECK(letter(0) == 1);
    CHECK(letter(2, true) == -3);
    CHECK(letter_generator(-3) == 2);
}

TEST_CASE("text output") {
    auto p = on(2, {{1, 2, -1}});
    CHECK(word_to_text({1, 2, -3}) == "g1 g2 g3^-1");
    CHECK(to_text(p) == "g1 := edge(0,1)\ng2 := edge(1,2)\ng1 g2 g1^-1\n");
    p.generators[0].element = 7;
    CHECK(p.generators[0].describe() == "edge(0,1)[e7]");
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(on(1, {{2}}).validate(), InvalidArgument);
    CHECK_NOTHROW(on(2, {{2, -1}}).validate());
}

TEST_CASE("tietze examples") {
    CHECK(tietze_simplify(on(1, {{1}})).generators.empty());

    // Solid triangle: edges 01, 02, 12; tree 01, 02; relator g01 g12 g02^-1.
    const auto solid = tietze_simplify(on(3, {{1}, {2}, {1, 3, -2}}));
    CHECK(solid.generators.empty());
    CHECK(solid.relators.empty());

    const auto free1 = tietze_simplify(on(4, {{1}, {2}, {3}}));
    CHECK(free1.generators.size() == 1);
    CHECK(free1.relators.empty());

    // <a, b | a b a^-1 b^-1> is left alone.
    const auto torus = tietze_simplify(on(2, {{1, 2, -1, -2}}));
    CHECK(torus.generators.size() == 2);
    CHECK(torus.relators.size() == 1);

    // Duplicates modulo rotation and inversion collapse.
    const auto dup = tietze_simplify(on(2, {{1, 1, 2, 2}, {2, 2, 1, 1}, {-1, -1, -2, -2}}));
    CHECK(dup.relators.size() <= 1);

    CHECK(tietze_simplify(on(2, {{1, 2}}), 0).generators.size() == 2);
}

TEST_CASE("tietze never increases counts and keeps the abelianization") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> gens(1, 5), rels(0, 5), len(1, 6), sign(0, 1);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gens(rng));
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<Word> relators(static_cast<std::size_t>(rels(rng)));
        for (Word& w : relators) {
            const int l = len(rng);
            for (int i = 0; i < l; ++i)
                w.push_back(letter(pick(rng), sign(rng) == 1));
        }
        const auto p = on(n, relators);
        const auto before = abelianization(p);
        GroupPresentation current = p;
        for (int round = 0; round < 4; ++round) {
            const auto next = tietze_simplify(current, 1);
            CHECK(next.generators.size() <= current.generators.size());
            current = next;
        }
        const auto simplified = tietze_simplify(p);
        CHECK(simplified.generators.size() <= p.generators.size());
        CHECK(abelianization(simplified) == before);
        CHECK(abelianization(current) == before);
    }
}

TEST_CASE("abelianization") {
    CHECK(abelianization(on(1, {{1, 1}})) == HomologySummary{0, {2}});
    CHECK(abelianization(on(2, {{1, 2, -1, -2}})) == HomologySummary{2, {}});
    CHECK(abelianization(on(1, {})) == HomologySummary{1, {}});
    CHECK(abelianization(on(2, {{1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}})) == HomologySummary{0, {2, 12}});
}
