#include "critind/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "critind/errors.hpp"

namespace critind {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<uint32_t, uint32_t>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
    const uint32_t n = order();
    {
        std::vector<std::string> seen = labels_;
        std::sort(seen.begin(), seen.end());
        auto dup = std::adjacent_find(seen.begin(), seen.end());
        if (dup != seen.end())
            throw InvalidArgument("duplicate vertex label '" + *dup + "'");
    }
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidArgument("edge endpoint out of range");
        if (u == v)
            throw InvalidArgument("self-loop at vertex '" + labels_[u] + "'");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (uint32_t v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InvalidArgument("duplicate edge at vertex '" + labels_[v] + "'");
    }
    edgeCount_ = edges.size();
}

bool Graph::hasEdge(uint32_t u, uint32_t v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int64_t Graph::findLabel(const std::string& label) const {
    for (uint32_t v = 0; v < order(); ++v)
        if (labels_[v] == label) return v;
    return -1;
}

bool Graph::hasIsolatedVertex() const {
    for (const auto& a : adj_)
        if (a.empty()) return true;
    return false;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(edgeCount_);
    for (uint32_t u = 0; u < order(); ++u)
        for (uint32_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<bool> seen(g.order(), false);
    std::vector<uint32_t> out;
    for (uint32_t u : s)
        for (uint32_t v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = true;
                out.push_back(v);
            }
    return VertexSet(std::move(out));
}

int64_t difference(const Graph& g, const VertexSet& s) {
    return static_cast<int64_t>(s.size()) -
           static_cast<int64_t>(neighborhood(g, s).size());
}

InducedSubgraph inducedSubgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int64_t> newId(g.order(), -1);
    std::vector<uint32_t> originals;
    std::vector<std::string> labels;
    originals.reserve(keep.size());
    for (uint32_t v : keep) {
        newId[v] = static_cast<int64_t>(originals.size());
        originals.push_back(v);
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v : keep)
        for (uint32_t w : g.neighbors(v))
            if (v < w && newId[w] >= 0)
                edges.emplace_back(static_cast<uint32_t>(newId[v]),
                                   static_cast<uint32_t>(newId[w]));
    return {Graph(std::move(labels), edges), std::move(originals)};
}

InducedSubgraph deleteClosedNeighborhood(const Graph& g, const VertexSet& s) {
    std::vector<bool> drop(g.order(), false);
    for (uint32_t v : s) {
        drop[v] = true;
        for (uint32_t w : g.neighbors(v)) drop[w] = true;
    }
    std::vector<uint32_t> keep;
    for (uint32_t v = 0; v < g.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    return inducedSubgraph(g, VertexSet(std::move(keep)));
}

bool isIndependent(const Graph& g, const VertexSet& s) {
    for (uint32_t v : s)
        for (uint32_t w : g.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

VertexSet pendantVertices(const Graph& g) {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return VertexSet(std::move(out));
}

bool isConnected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::queue<uint32_t> q;
    q.push(0);
    seen[0] = true;
    uint32_t visited = 1;
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        for (uint32_t w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                q.push(w);
            }
    }
    return visited == g.order();
}

bool isBipartite(const Graph& g) {
    std::vector<int8_t> color(g.order(), -1);
    for (uint32_t s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            for (uint32_t w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = static_cast<int8_t>(1 - color[v]);
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool isAcyclic(const Graph& g) {
    // A forest has exactly n - (#components) edges.
    std::vector<bool> seen(g.order(), false);
    uint32_t components = 0;
    for (uint32_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::queue<uint32_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            for (uint32_t w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return g.size() + components == g.order();
}

VertexSet allVertices(const Graph& g) {
    std::vector<uint32_t> ids(g.order());
    for (uint32_t v = 0; v < g.order(); ++v) ids[v] = v;
    return VertexSet(std::move(ids));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < g.order(); ++u)
        for (uint32_t v = u + 1; v < g.order(); ++v)
            if (!g.hasEdge(u, v)) edges.emplace_back(u, v);
    return Graph(g.labels(), edges);
}

std::string toEdgeListText(const Graph& g) {
    // Every vertex appears as its own line first, so the re-parsed graph
    // keeps the same label -> id mapping and isolated vertices survive.
    std::ostringstream out;
    for (uint32_t v = 0; v < g.order(); ++v) out << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
    return out.str();
}

std::vector<std::string> sortedLabels(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (uint32_t v : s) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet setUnion(const VertexSet& a, const VertexSet& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet setIntersection(const VertexSet& a, const VertexSet& b) {
    std::vector<uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet setDifference(const VertexSet& a, const VertexSet& b) {
    std::vector<uint32_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return VertexSet(std::move(out));
}

} // namespace critind
