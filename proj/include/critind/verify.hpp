#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "critind/graph.hpp"
#include "critind/mis.hpp"
#include "critind/oracle.hpp"

namespace critind {

enum class CheckOutcome { Pass, Fail, Skipped };

std::string outcomeName(CheckOutcome o);

struct CheckResult {
    std::string id;   // stable identifier, "C1".."C17"
    std::string name; // human description of the property
    CheckOutcome outcome = CheckOutcome::Skipped;
    std::string skipReason;        // set when outcome == Skipped
    nlohmann::ordered_json witness; // numbers/sets behind the verdict
};

struct VerifyOptions {
    // Empty = all checks; otherwise ids like {"C1","C10"}.
    std::vector<std::string> checks;
    // Exhaustive cross-validation kicks in at order <= oracleLimit.
    uint32_t oracleLimit = 14;
    OracleBudget oracleBudget;
    SearchBudget alphaBudget{64, 2'000'000};
    SearchBudget omegaBudget{40, 1'000'000};
    SearchBudget coreBudget{40, 5'000'000};
    uint64_t pairBudget = 2'000'000;  // C2 (set, subset) work cap
    uint32_t supermodularSamples = 128;
    uint64_t sampleSeed = 0x5EED;
    uint32_t familyCap = 64; // max enumerated sets fed to C3/C5/C6
    uint32_t alphaCGuard = 4096; // greedy max-critical-independent-set gate
};

struct VerificationReport {
    uint32_t n = 0;
    std::size_t m = 0;
    bool isolated = false;
    std::vector<CheckResult> results;
    bool allPassed() const;
    std::size_t failures() const;
};

const std::vector<std::string>& allCheckIds();

VerificationReport runChecks(const Graph& g, const VerifyOptions& opts = {});

nlohmann::ordered_json verificationToJson(const VerificationReport& r);
std::string verificationToText(const VerificationReport& r);

} // namespace critind
