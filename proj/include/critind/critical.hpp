#pragma once

#include <cstdint>

#include "critind/graph.hpp"
#include "critind/matching.hpp"

namespace critind {

// Bipartite double cover used for the critical-difference computation:
// left copy u1 and right copy v2, with u1 v2 for every oriented edge uv.
BipartiteGraph doubleCover(const Graph& g);

// d(G) = max over all vertex sets X of |X| - |N(X)|. Equals the
// deficiency n - mu(doubleCover); runs in matching time, any size.
int64_t criticalDifference(const Graph& g);

// ker(G): intersection of all critical sets. Computed from one run of
// the double-cover matching (alternating reachability from exposed left
// vertices); linear after the matching.
VertexSet kerFast(const Graph& g);

// Same set, certified vertex by vertex: v is in ker iff some maximum
// matching of the double cover leaves v's left copy exposed, i.e.
// deleting that copy keeps the matching number unchanged.
VertexSet kerSlow(const Graph& g);

// An inclusion-minimal critical set (equals ker(G); may be empty).
VertexSet findCriticalSet(const Graph& g);

// Members of X with no neighbor inside X. Independent, and at least as
// critical as X itself: d(part) >= d(X).
VertexSet independentPart(const Graph& g, const VertexSet& x);

// max |X| - |N(X)| over independent X only. Equals criticalDifference.
int64_t criticalIndependenceDifference(const Graph& g);

// A maximum-size critical independent set, built by one greedy pass:
// vertex v (ascending id) joins iff d(G' - N[v]) = d(G') + deg(v) - 1
// in the current residual G'; accepted vertices commit G' to G' - N[v].
VertexSet maxCriticalIndependentSet(const Graph& g);

struct QuasiRegularizability {
    bool value = false;              // d(G) == 0
    bool assumptionViolated = false; // isolated vertex present
};

QuasiRegularizability isQuasiRegularizable(const Graph& g);

struct CriticalProfile {
    int64_t dc = 0;
    int64_t idc = 0;
    VertexSet ker;
    std::size_t epsilon = 0;
    VertexSet witness; // a critical independent set attaining dc
};

CriticalProfile criticalProfile(const Graph& g);

} // namespace critind
