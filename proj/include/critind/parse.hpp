#pragma once

#include <string>

#include "critind/graph.hpp"

namespace critind {

// Edge-list text: one edge "U V" per line, or a single token to declare
// an isolated vertex. '#' starts a comment; blank lines are skipped.
// Vertices are numbered in order of first appearance.
Graph parseEdgeList(const std::string& text);

// DIMACS: "p edge N M" then "e u v" lines with 1-based vertex numbers.
// Labels become "1".."N". 'c' lines are comments.
Graph parseDimacs(const std::string& text);

} // namespace critind
