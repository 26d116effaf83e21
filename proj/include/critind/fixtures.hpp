#pragma once

#include <string>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

// Built-in reference graphs used throughout the test suites:
// G1, G2, G3, Gfig3, K2, P3, K23, C5.
const std::vector<std::string>& fixtureNames();
bool isFixtureName(const std::string& name);
// Throws InvalidArgument for unknown names.
std::string fixtureEdgeList(const std::string& name);
Graph fixtureGraph(const std::string& name);

} // namespace critind
