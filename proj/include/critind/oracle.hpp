#pragma once

#include <cstdint>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

// Exhaustive reference implementations. Every subset of vertices is
// inspected, so these only run on small graphs; they exist to validate
// the fast algorithms, never to serve queries.
struct OracleBudget {
    uint32_t subsetLimit = 16;   // hard cap 20 (2^20 subsets)
    uint32_t matchingLimit = 14; // bitmask-DP matching cap
    uint64_t enumerationNodeLimit = 20'000'000;
};

int64_t oracleDc(const Graph& g, const OracleBudget& b = {});
std::vector<VertexSet> oracleAllCriticalSets(const Graph& g, const OracleBudget& b = {});
// Intersection of all critical sets; internally also intersects the
// critical *independent* sets and asserts the two agree.
VertexSet oracleKer(const Graph& g, const OracleBudget& b = {});

std::vector<VertexSet> oracleOmega(const Graph& g, const OracleBudget& b = {});
uint32_t oracleAlpha(const Graph& g, const OracleBudget& b = {});
uint32_t oracleMu(const Graph& g, const OracleBudget& b = {});

// True iff every independent set S has |S| <= |N(S)|. Uses a budgeted
// recursive enumeration, so it reaches moderately larger graphs than
// the subset sweep (sparse ones especially).
bool oracleQuasiRegularizable(const Graph& g, const OracleBudget& b = {});

std::vector<VertexSet> oracleCriticalIndependentSets(const Graph& g, const OracleBudget& b = {});
// Critical independent sets of maximum cardinality.
std::vector<VertexSet> oracleMaxCriticalIndependentSets(const Graph& g, const OracleBudget& b = {});
int64_t oracleIdc(const Graph& g, const OracleBudget& b = {});

} // namespace critind
