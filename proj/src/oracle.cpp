#include "critind/oracle.hpp"

#include <algorithm>
#include <bit>

#include "critind/errors.hpp"

namespace critind {

namespace {

constexpr uint32_t kHardSubsetCap = 20;

uint32_t effectiveSubsetLimit(const OracleBudget& b) {
    return std::min(b.subsetLimit, kHardSubsetCap);
}

// Per-subset neighborhood and independence tables, built in plain
// ascending mask order so any entry can be audited by hand.
struct Sweep {
    uint32_t n = 0;
    std::vector<uint32_t> adjMask;
    std::vector<uint32_t> nb;
    std::vector<char> ind;
    int64_t dc = 0;
    int64_t idc = 0;
    uint32_t alpha = 0;

    int64_t d(uint32_t m) const {
        return static_cast<int64_t>(std::popcount(m)) -
               static_cast<int64_t>(std::popcount(nb[m]));
    }
};

Sweep runSweep(const Graph& g, const OracleBudget& b) {
    if (g.order() > effectiveSubsetLimit(b))
        throw BudgetError("oracle subset sweep: order " + std::to_string(g.order()) +
                          " exceeds limit " + std::to_string(effectiveSubsetLimit(b)));
    Sweep s;
    s.n = g.order();
    s.adjMask.assign(s.n, 0);
    for (uint32_t v = 0; v < s.n; ++v)
        for (uint32_t u : g.neighbors(v)) s.adjMask[v] |= uint32_t(1) << u;

    const uint32_t total = uint32_t(1) << s.n;
    s.nb.assign(total, 0);
    s.ind.assign(total, 1);
    for (uint32_t m = 1; m < total; ++m) {
        uint32_t low = m & (~m + 1);
        uint32_t idx = static_cast<uint32_t>(std::countr_zero(m));
        uint32_t rest = m ^ low;
        s.nb[m] = s.nb[rest] | s.adjMask[idx];
        s.ind[m] = static_cast<char>(s.ind[rest] && !(s.adjMask[idx] & rest));
    }
    for (uint32_t m = 0; m < total; ++m) {
        int64_t dm = s.d(m);
        s.dc = std::max(s.dc, dm);
        if (s.ind[m]) {
            s.idc = std::max(s.idc, dm);
            s.alpha = std::max(s.alpha, static_cast<uint32_t>(std::popcount(m)));
        }
    }
    return s;
}

VertexSet maskToSet(uint32_t mask) {
    std::vector<uint32_t> ids;
    while (mask) {
        ids.push_back(static_cast<uint32_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return VertexSet(std::move(ids));
}

std::vector<VertexSet> collect(const Sweep& s, auto&& keep) {
    std::vector<VertexSet> out;
    const uint32_t total = uint32_t(1) << s.n;
    for (uint32_t m = 0; m < total; ++m)
        if (keep(m)) out.push_back(maskToSet(m));
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); });
    return out;
}

} // namespace

int64_t oracleDc(const Graph& g, const OracleBudget& b) { return runSweep(g, b).dc; }

int64_t oracleIdc(const Graph& g, const OracleBudget& b) { return runSweep(g, b).idc; }

std::vector<VertexSet> oracleAllCriticalSets(const Graph& g, const OracleBudget& b) {
    Sweep s = runSweep(g, b);
    return collect(s, [&](uint32_t m) { return s.d(m) == s.dc; });
}

VertexSet oracleKer(const Graph& g, const OracleBudget& b) {
    Sweep s = runSweep(g, b);
    const uint32_t total = uint32_t(1) << s.n;
    uint32_t interCritical = total - 1;
    uint32_t interCriticalIndependent = total - 1;
    if (s.n == 0) return {};
    for (uint32_t m = 0; m < total; ++m) {
        if (s.d(m) == s.dc) interCritical &= m;
        if (s.ind[m] && s.d(m) == s.idc) interCriticalIndependent &= m;
    }
    if (interCritical != interCriticalIndependent)
        throw Error("oracle kernel mismatch: intersection over critical sets "
                    "differs from intersection over critical independent sets");
    return maskToSet(interCritical);
}

std::vector<VertexSet> oracleOmega(const Graph& g, const OracleBudget& b) {
    Sweep s = runSweep(g, b);
    return collect(s, [&](uint32_t m) {
        return s.ind[m] && static_cast<uint32_t>(std::popcount(m)) == s.alpha;
    });
}

uint32_t oracleAlpha(const Graph& g, const OracleBudget& b) {
    return runSweep(g, b).alpha;
}

std::vector<VertexSet> oracleCriticalIndependentSets(const Graph& g,
                                                     const OracleBudget& b) {
    Sweep s = runSweep(g, b);
    return collect(s, [&](uint32_t m) { return s.ind[m] && s.d(m) == s.idc; });
}

std::vector<VertexSet> oracleMaxCriticalIndependentSets(const Graph& g,
                                                        const OracleBudget& b) {
    Sweep s = runSweep(g, b);
    uint32_t maxSize = 0;
    const uint32_t total = uint32_t(1) << s.n;
    for (uint32_t m = 0; m < total; ++m)
        if (s.ind[m] && s.d(m) == s.idc)
            maxSize = std::max(maxSize, static_cast<uint32_t>(std::popcount(m)));
    return collect(s, [&](uint32_t m) {
        return s.ind[m] && s.d(m) == s.idc &&
               static_cast<uint32_t>(std::popcount(m)) == maxSize;
    });
}

uint32_t oracleMu(const Graph& g, const OracleBudget& b) {
    const uint32_t n = g.order();
    if (n > std::min(b.matchingLimit, kHardSubsetCap))
        throw BudgetError("oracle matching: order " + std::to_string(n) +
                          " exceeds limit " + std::to_string(b.matchingLimit));
    if (n == 0) return 0;
    std::vector<int8_t> memo(std::size_t(1) << n, -1);
    auto rec = [&](auto&& self, uint32_t gone) -> int8_t {
        uint32_t freeMask = ~gone & ((n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1));
        if (!freeMask) return 0;
        int8_t& slot = memo[gone];
        if (slot >= 0) return slot;
        uint32_t v = static_cast<uint32_t>(std::countr_zero(freeMask));
        int8_t best = self(self, gone | (uint32_t(1) << v)); // v stays unmatched
        for (uint32_t u : g.neighbors(v)) {
            if (gone & (uint32_t(1) << u)) continue;
            int8_t cand = static_cast<int8_t>(
                1 + self(self, gone | (uint32_t(1) << v) | (uint32_t(1) << u)));
            best = std::max(best, cand);
        }
        slot = best;
        return best;
    };
    return static_cast<uint32_t>(rec(rec, 0));
}

bool oracleQuasiRegularizable(const Graph& g, const OracleBudget& b) {
    if (g.order() <= effectiveSubsetLimit(b)) return runSweep(g, b).idc <= 0;
    if (g.order() > 64)
        throw BudgetError("quasi-regularizability enumeration supports order <= 64");

    // Recursive walk over all independent sets with an early exit on
    // the first violating one; node-budgeted.
    const uint32_t n = g.order();
    std::vector<uint64_t> adj(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t u : g.neighbors(v)) adj[v] |= uint64_t(1) << u;

    uint64_t budget = b.enumerationNodeLimit;
    bool violated = false;
    auto rec = [&](auto&& self, uint32_t start, uint64_t chosen, uint64_t nb,
                   uint32_t chosenCount) -> void {
        if (violated) return;
        if (budget-- == 0)
            throw BudgetError("quasi-regularizability enumeration budget exhausted");
        if (static_cast<int64_t>(chosenCount) >
            static_cast<int64_t>(std::popcount(nb))) {
            violated = true;
            return;
        }
        for (uint32_t v = start; v < n; ++v) {
            if (adj[v] & chosen) continue;
            self(self, v + 1, chosen | (uint64_t(1) << v), nb | adj[v],
                 chosenCount + 1);
            if (violated) return;
        }
    };
    rec(rec, 0, 0, 0, 0);
    return !violated;
}

} // namespace critind
