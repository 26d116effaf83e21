#include "doctest.h"

#include "critind/analysis.hpp"
#include "critind/fixtures.hpp"
#include "critind/parse.hpp"

using namespace critind;

namespace {
std::vector<std::string> labels(const nlohmann::ordered_json& a) {
    return a.get<std::vector<std::string>>();
}
} // namespace

TEST_CASE("fixture golden values") {
    AnalysisReport g1 = analyze(fixtureGraph("G1"), AnalysisOptions{});
    CHECK(g1.dc == 1);
    CHECK(g1.epsilon == 2);
    CHECK(g1.core->size() == 2);
    CHECK(*g1.alpha == 3);
    CHECK(*g1.mu == 2);
    CHECK(*g1.koenigEgervary);

    AnalysisReport g2 = analyze(fixtureGraph("G2"), AnalysisOptions{});
    CHECK(g2.dc == 1);
    CHECK(g2.idc == 1);
    CHECK(g2.epsilon == 2);
    CHECK(g2.core->size() == 3);
    CHECK(g2.corona->size() == 5);
    CHECK_FALSE(g2.quasiRegularizable);

    AnalysisReport gf = analyze(fixtureGraph("Gfig3"), AnalysisOptions{});
    CHECK(gf.dc == 2);
    CHECK(gf.epsilon == 3);
    CHECK(gf.core->size() == 4);
    CHECK(*gf.alphaC == 4);

    AnalysisReport k2 = analyze(fixtureGraph("K2"), AnalysisOptions{});
    CHECK(k2.dc == 0);
    CHECK(k2.ker.empty());
    CHECK(k2.quasiRegularizable);
    CHECK(*k2.alphaC == 1);
}

TEST_CASE("analysis json golden shape") {
    Graph g2 = fixtureGraph("G2");
    auto j = analysisToJson(analyze(g2, AnalysisOptions{}), g2);
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 7);
    CHECK(j["m"] == 7);
    CHECK(j["alpha"] == 4);
    CHECK(j["mu"] == 3);
    CHECK(j["dc"] == 1);
    CHECK(j["idc"] == 1);
    CHECK(labels(j["ker"]) == std::vector<std::string>{"x", "y"});
    CHECK(labels(j["core"]) == std::vector<std::string>{"x", "y", "z"});
    CHECK(labels(j["corona"]) == std::vector<std::string>{"p", "q", "x", "y", "z"});
    CHECK(j["epsilon"] == 2);
    CHECK(j["xi"] == 3);
    CHECK(j["zeta"] == 5);
    CHECK(j["koenig_egervary"] == true);
    CHECK(j["quasi_regularizable"] == false);
    // key order is fixed
    auto it = j.begin();
    CHECK(it.key() == "schema");
    ++it;
    CHECK(it.key() == "n");
    // identical input, identical bytes
    auto again = analysisToJson(analyze(g2, AnalysisOptions{}), g2);
    CHECK(j.dump(2) == again.dump(2));
}

TEST_CASE("core corona can be disabled") {
    AnalysisOptions opts;
    opts.withCoreCorona = false;
    Graph g = fixtureGraph("G3");
    AnalysisReport r = analyze(g, opts);
    CHECK_FALSE(r.core.has_value());
    CHECK_FALSE(r.corona.has_value());
    CHECK(r.dc == 1); // the polynomial side still runs
    auto j = analysisToJson(r, g);
    CHECK(j["core"] == "unavailable");
    CHECK(j["xi"].is_null());
}

TEST_CASE("alpha degrades to bounds under a tiny guard") {
    AnalysisOptions opts;
    opts.alphaBudget.maxVertices = 4;
    opts.coreBudget.maxVertices = 4;
    opts.alphaCGuard = 4;
    Graph g = fixtureGraph("G3");
    AnalysisReport r = analyze(g, opts);
    CHECK_FALSE(r.alpha.has_value());
    CHECK(r.alphaLower <= 6);
    CHECK(6 <= r.alphaUpper);
    CHECK_FALSE(r.alphaC.has_value());
    auto j = analysisToJson(r, g);
    CHECK(j["alpha"].is_null());
    REQUIRE(j.contains("alpha_bounds"));
    CHECK(j["alpha_bounds"][0] == r.alphaLower);
    CHECK(j["alpha_bounds"][1] == r.alphaUpper);
}

TEST_CASE("kernel cross check is quiet when consistent") {
    AnalysisOptions opts;
    opts.crossCheckKer = true;
    for (const auto& name : fixtureNames())
        CHECK_NOTHROW(analyze(fixtureGraph(name), opts));
}

TEST_CASE("oracle cross check on the small fixtures") {
    AnalysisOptions opts;
    opts.withOracle = true;
    for (const char* name : {"G1", "G2", "G3", "K2", "P3", "K23", "C5"})
        CHECK_NOTHROW(analyze(fixtureGraph(name), opts));
}

TEST_CASE("isolated vertices flagged") {
    Graph g = parseEdgeList("a\nb c\n");
    AnalysisReport r = analyze(g, AnalysisOptions{});
    CHECK(r.isolated);
    CHECK(r.dc == 1); // the isolated vertex alone; the edge contributes zero
    CHECK_FALSE(r.quasiRegularizable);
    auto j = analysisToJson(r, g);
    CHECK(j["isolated_vertices"] == true);
}

TEST_CASE("text output carries the chain line") {
    Graph g = fixtureGraph("G2");
    std::string text = analysisToText(analyze(g, AnalysisOptions{}), g);
    CHECK(text.find("chain: n(7) >= zeta(5) >= alpha(4) >= xi(3) >= eps(2) >= "
                    "dc(1) >= alpha-mu(1)") != std::string::npos);
    CHECK(text.find("ker = {x, y}") != std::string::npos);
}
