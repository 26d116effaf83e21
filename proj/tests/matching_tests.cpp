#include "doctest.h"

#include "critind/errors.hpp"
#include "critind/fixtures.hpp"
#include "critind/matching.hpp"
#include "critind/oracle.hpp"
#include "critind/random_graph.hpp"

using namespace critind;

TEST_CASE("hopcroft-karp on a perfect-matching bipartite graph") {
    BipartiteGraph b(3, 3);
    b.addEdge(0, 0);
    b.addEdge(0, 1);
    b.addEdge(1, 1);
    b.addEdge(2, 2);
    BipartiteMatching m = maxBipartiteMatching(b);
    CHECK(m.size == 3);
    for (uint32_t l = 0; l < 3; ++l) CHECK(m.leftMate[l] >= 0);
}

TEST_CASE("hopcroft-karp with deficiency and koenig cover") {
    // K_{1,3} oriented left singleton cannot saturate the right side.
    BipartiteGraph b(3, 1);
    b.addEdge(0, 0);
    b.addEdge(1, 0);
    b.addEdge(2, 0);
    BipartiteMatching m = maxBipartiteMatching(b);
    CHECK(m.size == 1);
    auto [rawL, rawR] = m.minimumVertexCover();
    VertexSet coverL(rawL), coverR(rawR);
    CHECK(coverL.size() + coverR.size() == m.size);
    // every edge covered
    for (uint32_t l = 0; l < 3; ++l)
        for (uint32_t r : b.rightNeighbors(l))
            CHECK((coverL.contains(l) || coverR.contains(r)));
}

TEST_CASE("koenig cover is valid on random bipartite graphs") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 rng(900 + seed);
        uint32_t nl = 2 + rng.nextBelow(6), nr = 2 + rng.nextBelow(6);
        BipartiteGraph b(nl, nr);
        for (uint32_t l = 0; l < nl; ++l)
            for (uint32_t r = 0; r < nr; ++r)
                if (rng.nextDouble() < 0.3) b.addEdge(l, r);
        BipartiteMatching m = maxBipartiteMatching(b);
        auto [rawL, rawR] = m.minimumVertexCover();
        VertexSet coverL(rawL), coverR(rawR);
        CHECK(coverL.size() + coverR.size() == m.size);
        for (uint32_t l = 0; l < nl; ++l)
            for (uint32_t r : b.rightNeighbors(l))
                CHECK((coverL.contains(l) || coverR.contains(r)));
    }
}

TEST_CASE("blossom handles odd cycles") {
    Graph c5 = fixtureGraph("C5");
    Matching m = maxMatchingGeneral(c5);
    CHECK(m.size == 2);
    CHECK(isValidMatching(c5, m));

    // Petersen graph has a perfect matching.
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, 5 + (i + 2) % 5});
    }
    Graph petersen(labels, edges);
    Matching pm = maxMatching(petersen);
    CHECK(pm.size == 5);
    CHECK(isValidMatching(petersen, pm));
}

TEST_CASE("general matching agrees with the oracle on small graphs") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = randomGnp(8, 0.3, 3000 + seed);
        Matching m = maxMatching(g);
        CHECK(isValidMatching(g, m));
        CHECK(m.size == oracleMu(g, OracleBudget{}));
    }
}

TEST_CASE("bipartite routing agrees with blossom") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph t = randomTree(12, 500 + seed);
        REQUIRE(isBipartite(t));
        Matching viaRouter = maxMatching(t);
        Matching viaBlossom = maxMatchingGeneral(t);
        CHECK(viaRouter.size == viaBlossom.size);
        CHECK(isValidMatching(t, viaRouter));
    }
}

TEST_CASE("blossom guard throws") {
    Graph g = randomGnp(30, 0.2, 1);
    CHECK_THROWS_AS(maxMatchingGeneral(g, 10), BudgetError);
}

TEST_CASE("match into a target set") {
    Graph g = fixtureGraph("K23");
    auto id = [&](const char* l) { return static_cast<uint32_t>(g.findLabel(l)); };
    VertexSet right{id("r1"), id("r2"), id("r3")};
    VertexSet left{id("l1"), id("l2")};
    auto m = matchInto(g, left, right);
    REQUIRE(m.has_value());
    CHECK(m->size == 2);
    CHECK(isValidMatching(g, *m));
    // the 3-element side cannot be matched into the 2-element side
    CHECK_FALSE(matchInto(g, right, left).has_value());
    CHECK_THROWS_AS(matchInto(g, right, setUnion(left, VertexSet{id("r1")})),
                    InvalidArgument);
}
