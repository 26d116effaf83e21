#include "critind/critical.hpp"

#include <algorithm>

#include "critind/errors.hpp"

namespace critind {

BipartiteGraph doubleCover(const Graph& g) {
    BipartiteGraph h(g.order(), g.order());
    for (uint32_t u = 0; u < g.order(); ++u)
        for (uint32_t v : g.neighbors(u)) h.addEdge(u, v);
    return h;
}

// max over X of |X| - |N(X)| equals the left-side deficiency of the
// double cover, n - mu(H): N_H of any left set is exactly the right
// copy of its neighborhood in G.
int64_t criticalDifference(const Graph& g) {
    if (g.order() == 0) return 0;
    BipartiteMatching m = maxBipartiteMatching(doubleCover(g));
    return static_cast<int64_t>(g.order()) - static_cast<int64_t>(m.size);
}

VertexSet kerFast(const Graph& g) {
    if (g.order() == 0) return {};
    BipartiteMatching m = maxBipartiteMatching(doubleCover(g));
    // Left vertices alternating-reachable from the exposed ones form
    // the unique minimal deficiency maximizer, i.e. the kernel.
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < g.order(); ++v)
        if (m.leftReachable[v]) out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet kerSlow(const Graph& g) {
    const uint32_t n = g.order();
    if (n == 0) return {};
    std::size_t mu = maxBipartiteMatching(doubleCover(g)).size;
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < n; ++v) {
        BipartiteGraph h(n, n);
        for (uint32_t u = 0; u < n; ++u) {
            if (u == v) continue; // drop the left copy of v
            for (uint32_t w : g.neighbors(u)) h.addEdge(u, w);
        }
        if (maxBipartiteMatching(h).size == mu) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

VertexSet findCriticalSet(const Graph& g) { return kerFast(g); }

VertexSet independentPart(const Graph& g, const VertexSet& x) {
    std::vector<uint32_t> out;
    for (uint32_t v : x) {
        bool inner = false;
        for (uint32_t w : g.neighbors(v))
            if (x.contains(w)) {
                inner = true;
                break;
            }
        if (!inner) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

int64_t criticalIndependenceDifference(const Graph& g) {
    return difference(g, independentPart(g, findCriticalSet(g)));
}

VertexSet maxCriticalIndependentSet(const Graph& g) {
    // v lies in some critical independent set of the residual G' iff
    //   d_c(G' - N[v]) = d_c(G') + deg(v) - 1,
    // and every such vertex lies in some *maximum* critical independent
    // set, so committing to it never costs cardinality. Vertices that
    // fail the test keep failing in later residuals.
    std::vector<uint32_t> picked;
    Graph cur = g;
    std::vector<uint32_t> toOriginal(g.order());
    for (uint32_t v = 0; v < g.order(); ++v) toOriginal[v] = v;
    int64_t dcCur = criticalDifference(cur);

    uint32_t nextOriginal = 0;
    while (cur.order() > 0) {
        // First remaining vertex in original id order is current id 0's
        // original... not necessarily: find the remaining vertex with the
        // smallest original id not yet tested.
        int64_t pick = -1;
        for (uint32_t v = 0; v < cur.order(); ++v)
            if (toOriginal[v] >= nextOriginal &&
                (pick < 0 || toOriginal[v] < toOriginal[pick]))
                pick = v;
        if (pick < 0) break;
        uint32_t v = static_cast<uint32_t>(pick);
        nextOriginal = toOriginal[v] + 1;

        InducedSubgraph sub = deleteClosedNeighborhood(cur, VertexSet{v});
        int64_t dcSub = criticalDifference(sub.graph);
        if (dcSub == dcCur + static_cast<int64_t>(cur.degree(v)) - 1) {
            picked.push_back(toOriginal[v]);
            std::vector<uint32_t> remap(sub.graph.order());
            for (uint32_t i = 0; i < sub.graph.order(); ++i)
                remap[i] = toOriginal[sub.originalIds[i]];
            toOriginal = std::move(remap);
            cur = std::move(sub.graph);
            dcCur = dcSub;
        }
    }
    return VertexSet(std::move(picked));
}

QuasiRegularizability isQuasiRegularizable(const Graph& g) {
    return {criticalDifference(g) == 0, g.hasIsolatedVertex()};
}

CriticalProfile criticalProfile(const Graph& g) {
    CriticalProfile p;
    p.dc = criticalDifference(g);
    p.ker = kerFast(g);
    p.epsilon = p.ker.size();
    p.witness = independentPart(g, p.ker); // kernel is independent already
    p.idc = difference(g, p.witness);
    return p;
}

} // namespace critind
