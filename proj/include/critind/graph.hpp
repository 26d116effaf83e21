#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critind/vertex_set.hpp"

namespace critind {

// Finite simple undirected graph with string labels. Vertex ids are
// 0..n-1 in label insertion order; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels,
          const std::vector<std::pair<uint32_t, uint32_t>>& edges);

    uint32_t order() const { return static_cast<uint32_t>(labels_.size()); }
    std::size_t size() const { return edgeCount_; }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }
    bool hasEdge(uint32_t u, uint32_t v) const;

    const std::string& label(uint32_t v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // -1 if no vertex carries the label.
    int64_t findLabel(const std::string& label) const;

    bool hasIsolatedVertex() const;
    // Each edge once, lower id first, lexicographic by (u, v).
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<uint32_t>> adj_;
    std::size_t edgeCount_ = 0;
};

// N(S): all neighbors of members of S. May intersect S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);
// |S| - |N(S)|.
int64_t difference(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    // originalIds[new id] = id in the parent graph.
    std::vector<uint32_t> originalIds;
};

InducedSubgraph inducedSubgraph(const Graph& g, const VertexSet& keep);
// G - N[S]: drop S and every neighbor of S.
InducedSubgraph deleteClosedNeighborhood(const Graph& g, const VertexSet& s);

bool isIndependent(const Graph& g, const VertexSet& s);
VertexSet pendantVertices(const Graph& g); // vertices of degree exactly 1
bool isConnected(const Graph& g);          // vacuously true for n = 0
bool isBipartite(const Graph& g);
bool isAcyclic(const Graph& g);
VertexSet allVertices(const Graph& g);
Graph complement(const Graph& g);

std::string toEdgeListText(const Graph& g);
std::vector<std::string> sortedLabels(const Graph& g, const VertexSet& s);

} // namespace critind
