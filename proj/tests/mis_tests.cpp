#include "doctest.h"

#include "critind/critical.hpp"
#include "critind/errors.hpp"
#include "critind/fixtures.hpp"
#include "critind/mis.hpp"
#include "critind/oracle.hpp"
#include "critind/random_graph.hpp"

using namespace critind;

namespace {
VertexSet byLabels(const Graph& g, std::initializer_list<const char*> names) {
    std::vector<uint32_t> ids;
    for (const char* n : names) ids.push_back(static_cast<uint32_t>(g.findLabel(n)));
    return VertexSet{std::move(ids)};
}
} // namespace

TEST_CASE("exact alpha on fixtures") {
    SearchBudget b;
    CHECK(exactAlpha(fixtureGraph("G1"), b).exact == 3);
    CHECK(exactAlpha(fixtureGraph("G2"), b).exact == 4);
    CHECK(exactAlpha(fixtureGraph("G3"), b).exact == 6);
    CHECK(exactAlpha(fixtureGraph("Gfig3"), b).exact == 8);
    CHECK(exactAlpha(fixtureGraph("K2"), b).exact == 1);
    CHECK(exactAlpha(fixtureGraph("C5"), b).exact == 2);
    CHECK(exactAlpha(Graph({}, {}), b).exact == 0);
}

TEST_CASE("alpha agrees with the oracle on random graphs") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = randomGnp(10, 0.3, 4000 + seed);
        CHECK(*exactAlpha(g, SearchBudget{}).exact == oracleAlpha(g, OracleBudget{}));
    }
}

TEST_CASE("alpha bounds bracket the truth") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = randomGnp(11, 0.25, 4100 + seed);
        auto [lo, hi] = alphaBounds(g);
        uint32_t a = oracleAlpha(g, OracleBudget{});
        CHECK(lo <= a);
        CHECK(a <= hi);
    }
}

TEST_CASE("alpha budget guards") {
    SearchBudget tiny;
    tiny.maxVertices = 3;
    CHECK_THROWS_AS(exactAlpha(fixtureGraph("C5"), tiny), BudgetError);
    SearchBudget starved;
    starved.maxNodes = 1;
    AlphaResult r = exactAlpha(fixtureGraph("Gfig3"), starved);
    CHECK_FALSE(r.exact.has_value());
    CHECK(r.lower <= r.upper);
}

TEST_CASE("maximum independent set enumeration") {
    Graph g1 = fixtureGraph("G1");
    auto om = enumerateMaximumIndependentSets(g1, SearchBudget{});
    REQUIRE(om.has_value());
    CHECK(om->alpha == 3);
    REQUIRE(om->sets.size() == 2);
    CHECK(om->core == byLabels(g1, {"a", "b"}));
    CHECK(om->corona == byLabels(g1, {"a", "b", "w", "z"}));
    CHECK(om->xi() == 2);
    CHECK(om->zeta() == 4);

    auto empty = enumerateMaximumIndependentSets(Graph({}, {}), SearchBudget{});
    REQUIRE(empty.has_value());
    CHECK(empty->alpha == 0);
    REQUIRE(empty->sets.size() == 1);
    CHECK(empty->sets[0].empty());
}

TEST_CASE("enumeration agrees with the oracle") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = randomGnp(9, 0.35, 4200 + seed);
        auto om = enumerateMaximumIndependentSets(g, SearchBudget{});
        REQUIRE(om.has_value());
        auto sets = oracleOmega(g, OracleBudget{});
        REQUIRE(om->sets.size() == sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) CHECK(om->sets[i] == sets[i]);
    }
}

TEST_CASE("core and corona by membership tests") {
    Graph g2 = fixtureGraph("G2");
    auto cc = computeCoreCorona(g2, SearchBudget{});
    REQUIRE(cc.has_value());
    CHECK(cc->alpha == 4);
    CHECK(cc->core == byLabels(g2, {"x", "y", "z"}));
    CHECK(cc->corona == byLabels(g2, {"x", "y", "z", "p", "q"}));

    Graph g3 = fixtureGraph("G3");
    auto cc3 = computeCoreCorona(g3, SearchBudget{});
    REQUIRE(cc3.has_value());
    CHECK(cc3->core == byLabels(g3, {"t", "u", "v", "w"}));
    // the core need not be a critical set
    CHECK(difference(g3, cc3->core) != criticalDifference(g3));

    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = randomGnp(9, 0.3, 4300 + seed);
        auto viaMembership = computeCoreCorona(g, SearchBudget{});
        auto viaOmega = enumerateMaximumIndependentSets(g, SearchBudget{});
        REQUIRE(viaMembership.has_value());
        REQUIRE(viaOmega.has_value());
        CHECK(viaMembership->core == viaOmega->core);
        CHECK(viaMembership->corona == viaOmega->corona);
    }
}

TEST_CASE("local maximum independent set predicate") {
    Graph p3 = fixtureGraph("P3");
    auto id = [&](const char* l) { return static_cast<uint32_t>(p3.findLabel(l)); };
    CHECK(isLocalMaxIndependentSet(p3, byLabels(p3, {"a", "c"}), SearchBudget{}));
    CHECK(isLocalMaxIndependentSet(p3, byLabels(p3, {"a"}), SearchBudget{}));
    // N[{b}] is the whole path, where alpha is 2 > 1
    CHECK_FALSE(isLocalMaxIndependentSet(p3, byLabels(p3, {"b"}), SearchBudget{}));
    CHECK_THROWS_AS(
        isLocalMaxIndependentSet(p3, VertexSet{id("a"), id("b")}, SearchBudget{}),
        InvalidArgument);
}
