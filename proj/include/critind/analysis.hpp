#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "critind/critical.hpp"
#include "critind/graph.hpp"
#include "critind/mis.hpp"

namespace critind {

struct AnalysisOptions {
    SearchBudget alphaBudget{64, 2'000'000};
    bool withCoreCorona = true;
    SearchBudget coreBudget{40, 5'000'000};
    uint32_t muVertexGuard = 2000; // blossom gate; bipartite inputs bypass it
    uint32_t alphaCGuard = 4096; // order above which alpha_c is skipped
    bool crossCheckKer = false;  // run both kernel paths, require equality
    bool withOracle = false;     // exhaustive cross-validation (small n)
    uint32_t oracleLimit = 14;
};

// Numbers are std::optional when their exact computation was guarded
// off; they are never approximated.
struct AnalysisReport {
    uint32_t n = 0;
    std::size_t m = 0;
    bool isolated = false;
    std::optional<uint32_t> alpha;
    uint32_t alphaLower = 0;
    uint32_t alphaUpper = 0;
    std::optional<uint32_t> mu;
    int64_t dc = 0;
    int64_t idc = 0;
    VertexSet ker;
    std::size_t epsilon = 0;
    std::optional<VertexSet> core;
    std::optional<VertexSet> corona;
    std::optional<bool> koenigEgervary; // alpha + mu == n
    bool quasiRegularizable = false;    // dc == 0
    bool quasiAssumptionViolated = false;
    VertexSet witness; // critical independent set with d = dc
    std::optional<uint32_t> alphaC;
};

// Throws Error (internal breach) if crossCheckKer finds the two kernel
// paths disagreeing.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& opts = {});

nlohmann::ordered_json analysisToJson(const AnalysisReport& r, const Graph& g);
std::string analysisToText(const AnalysisReport& r, const Graph& g);

} // namespace critind
