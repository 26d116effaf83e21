#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

struct SearchBudget {
    uint32_t maxVertices = 64;
    uint64_t maxNodes = 2'000'000;
};

struct AlphaResult {
    std::optional<uint32_t> exact; // set when the search finished in budget
    uint32_t lower = 0;            // greedy independent set
    uint32_t upper = 0;            // n - |some maximal matching|
};

// Cheap certified bounds at any scale: greedy independent set below,
// order minus a maximal matching above.
std::pair<uint32_t, uint32_t> alphaBounds(const Graph& g);

// Branch and bound over bitsets. Throws BudgetError if order exceeds
// budget.maxVertices; returns bounds only if the node budget runs out.
AlphaResult exactAlpha(const Graph& g, const SearchBudget& budget = {});

struct OmegaFamily {
    uint32_t alpha = 0;
    std::vector<VertexSet> sets; // every maximum independent set, sorted
    VertexSet core;              // intersection
    VertexSet corona;            // union
    std::size_t xi() const { return core.size(); }
    std::size_t zeta() const { return corona.size(); }
};

// Enumerates all maximum independent sets; nullopt when the budget is
// exhausted before the enumeration provably completed.
std::optional<OmegaFamily> enumerateMaximumIndependentSets(
    const Graph& g, const SearchBudget& budget = {40, 1'000'000});

struct CoreCorona {
    uint32_t alpha = 0;
    VertexSet core;   // v in every maximum independent set: alpha(G-v) < alpha
    VertexSet corona; // v in some maximum independent set: alpha(G-N[v]) = alpha-1
};

// Exact core/corona through per-vertex alpha tests; avoids enumerating
// the whole family. budget.maxNodes is a total across all internal
// searches; nullopt when it runs out.
std::optional<CoreCorona> computeCoreCorona(
    const Graph& g, const SearchBudget& budget = {40, 5'000'000});

// A is a local maximum independent set iff |A| = alpha(G[N[A]]).
// Throws InvalidArgument when A is not independent.
bool isLocalMaxIndependentSet(const Graph& g, const VertexSet& a,
                              const SearchBudget& budget = {});

} // namespace critind
