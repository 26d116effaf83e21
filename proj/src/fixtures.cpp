#include "critind/fixtures.hpp"

#include "critind/errors.hpp"
#include "critind/parse.hpp"

namespace critind {

namespace {

struct Fixture {
    const char* name;
    const char* edges;
};

const Fixture kFixtures[] = {
    {"G1",
     "a u\n"
     "u w\n"
     "u b\n"
     "u z\n"
     "w z\n"},
    {"G2",
     "x a\n"
     "a z\n"
     "z b\n"
     "a y\n"
     "b p\n"
     "b q\n"
     "p q\n"},
    {"G3",
     "v A\n"
     "u A\n"
     "t A\n"
     "t B\n"
     "B D\n"
     "D w\n"
     "w G\n"
     "B C\n"
     "B E\n"
     "C D\n"
     "C E\n"
     "D E\n"
     "F G\n"
     "F H\n"
     "G H\n"},
    {"Gfig3",
     "a b4\n"
     "b4 b5\n"
     "b5 b6\n"
     "b6 b7\n"
     "b7 u\n"
     "u b9\n"
     "b9 b10\n"
     "b10 b11\n"
     "b4 c\n"
     "b b4\n"
     "b5 t5\n"
     "t5 t6\n"
     "t6 b7\n"
     "b9 t9\n"
     "t9 b10\n"
     "b11 v\n"},
    {"K2", "a b\n"},
    {"P3",
     "a b\n"
     "b c\n"},
    {"K23",
     "l1 r1\n"
     "l1 r2\n"
     "l1 r3\n"
     "l2 r1\n"
     "l2 r2\n"
     "l2 r3\n"},
    {"C5",
     "c1 c2\n"
     "c2 c3\n"
     "c3 c4\n"
     "c4 c5\n"
     "c5 c1\n"},
};

} // namespace

const std::vector<std::string>& fixtureNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& f : kFixtures) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

bool isFixtureName(const std::string& name) {
    for (const auto& f : kFixtures)
        if (name == f.name) return true;
    return false;
}

std::string fixtureEdgeList(const std::string& name) {
    for (const auto& f : kFixtures)
        if (name == f.name) return f.edges;
    throw InvalidArgument("unknown fixture '" + name + "'");
}

Graph fixtureGraph(const std::string& name) {
    return parseEdgeList(fixtureEdgeList(name));
}

} // namespace critind
