#include "doctest.h"

#include "critind/errors.hpp"
#include "critind/parse.hpp"

using namespace critind;

TEST_CASE("edge list basics") {
    Graph g = parseEdgeList("a b\nb c\n\n# comment\nc d # trailing\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    // labels are interned in order of first appearance
    CHECK(g.label(0) == "a");
    CHECK(g.label(3) == "d");
}

TEST_CASE("single token declares an isolated vertex") {
    Graph g = parseEdgeList("lonely\na b\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 1);
    CHECK(g.degree(static_cast<uint32_t>(g.findLabel("lonely"))) == 0);
    // redeclaring an endpoint is harmless
    Graph h = parseEdgeList("a\nb\na b\n");
    CHECK(h.order() == 2);
    CHECK(h.size() == 1);
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parseEdgeList("a b\nc c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parseEdgeList("a b\nb a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2); // duplicate regardless of orientation
    }
    CHECK_THROWS_AS(parseEdgeList("a b c\n"), ParseError);
}

TEST_CASE("empty input gives the empty graph") {
    Graph g = parseEdgeList("");
    CHECK(g.order() == 0);
    CHECK(g.size() == 0);
}

TEST_CASE("dimacs basics") {
    Graph g = parseDimacs("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.label(0) == "1");
    CHECK(g.label(3) == "4");
    CHECK(g.hasEdge(0, 1));
}

TEST_CASE("dimacs errors") {
    CHECK_THROWS_AS(parseDimacs("e 1 2\n"), ParseError);          // edge before p
    CHECK_THROWS_AS(parseDimacs("p edge 2 1\ne 1 3\n"), ParseError); // out of range
    CHECK_THROWS_AS(parseDimacs("p edge 2 1\ne 1 1\n"), ParseError); // self loop
    CHECK_THROWS_AS(parseDimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p edge 2 2\ne 1 2\n"), ParseError); // count off
    CHECK_THROWS_AS(parseDimacs("p edge 2 0\np edge 2 0\n"), ParseError);
    CHECK_THROWS_AS(parseDimacs("p foo 2 0\n"), ParseError);
}

TEST_CASE("dimacs isolated vertices come from the order") {
    Graph g = parseDimacs("p edge 5 1\ne 1 2\n");
    CHECK(g.order() == 5);
    CHECK(g.size() == 1);
    CHECK(g.degree(4) == 0);
}
