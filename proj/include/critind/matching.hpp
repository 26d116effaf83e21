#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

// Bipartite graph with separately numbered sides L = 0..nLeft-1 and
// R = 0..nRight-1.
class BipartiteGraph {
public:
    BipartiteGraph(uint32_t nLeft, uint32_t nRight)
        : adj_(nLeft), nRight_(nRight) {}

    uint32_t leftCount() const { return static_cast<uint32_t>(adj_.size()); }
    uint32_t rightCount() const { return nRight_; }

    void addEdge(uint32_t l, uint32_t r) { adj_[l].push_back(r); }
    const std::vector<uint32_t>& rightNeighbors(uint32_t l) const { return adj_[l]; }

private:
    std::vector<std::vector<uint32_t>> adj_;
    uint32_t nRight_;
};

struct BipartiteMatching {
    std::vector<int32_t> leftMate;  // -1 = exposed
    std::vector<int32_t> rightMate;
    std::size_t size = 0;
    // Vertices reachable by alternating paths from exposed left vertices
    // (left side entered via non-matching edges, right via matching edges).
    std::vector<bool> leftReachable;
    std::vector<bool> rightReachable;

    // Koenig cover: (L not reachable) union (R reachable). Size equals
    // the matching size; returned as (left ids, right ids).
    std::pair<std::vector<uint32_t>, std::vector<uint32_t>> minimumVertexCover() const;
};

// Hopcroft-Karp.
BipartiteMatching maxBipartiteMatching(const BipartiteGraph& g);

struct Matching {
    std::vector<int32_t> mate; // -1 = exposed
    std::size_t size = 0;
};

// Blossom algorithm; guard throws BudgetError above maxVertices.
Matching maxMatchingGeneral(const Graph& g, uint32_t maxVertices = 2000);

// Routes bipartite inputs to the Hopcroft-Karp engine (any size) and
// everything else to the blossom engine under its guard.
Matching maxMatching(const Graph& g, uint32_t blossomGuard = 2000);

// A matching of G saturating `from` with edges into `into`, if one exists.
// The sides must be disjoint; used for Hall-type saturation checks.
std::optional<Matching> matchInto(const Graph& g, const VertexSet& from,
                                  const VertexSet& into);

bool isValidMatching(const Graph& g, const Matching& m);

} // namespace critind
