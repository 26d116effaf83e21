#include "critind/analysis.hpp"

#include <sstream>

#include "critind/errors.hpp"
#include "critind/matching.hpp"
#include "critind/oracle.hpp"

namespace critind {

using nlohmann::ordered_json;

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt) {
    AnalysisReport r;
    r.n = g.order();
    r.m = g.size();
    r.isolated = g.hasIsolatedVertex();

    try {
        AlphaResult a = exactAlpha(g, opt.alphaBudget);
        if (a.exact) {
            r.alpha = a.exact;
            r.alphaLower = *a.exact;
            r.alphaUpper = *a.exact;
        } else {
            r.alphaLower = a.lower;
            r.alphaUpper = a.upper;
        }
    } catch (const BudgetError&) {
        auto [lo, hi] = alphaBounds(g);
        r.alphaLower = lo;
        r.alphaUpper = hi;
    }

    try {
        r.mu = static_cast<uint32_t>(maxMatching(g, opt.muVertexGuard).size);
    } catch (const BudgetError&) {
    }

    CriticalProfile p = criticalProfile(g);
    r.dc = p.dc;
    r.idc = p.idc;
    r.ker = p.ker;
    r.epsilon = static_cast<uint32_t>(p.ker.size());
    r.witness = p.witness;

    if (opt.crossCheckKer) {
        VertexSet slow = kerSlow(g);
        if (!(slow == r.ker))
            throw Error("kernel mismatch between the reachability and the "
                        "per-vertex matching computation");
    }

    if (opt.withCoreCorona) {
        if (auto cc = computeCoreCorona(g, opt.coreBudget)) {
            r.core = cc->core;
            r.corona = cc->corona;
            if (!r.alpha) {
                r.alpha = cc->alpha;
                r.alphaLower = cc->alpha;
                r.alphaUpper = cc->alpha;
            }
        }
    }

    if (r.alpha && r.mu)
        r.koenigEgervary = *r.alpha + *r.mu == g.order();

    r.quasiRegularizable = r.dc == 0;
    r.quasiAssumptionViolated = r.isolated;

    if (g.order() <= opt.alphaCGuard) {
        VertexSet j = maxCriticalIndependentSet(g);
        r.alphaC = static_cast<uint32_t>(j.size());
        // Prefer the larger witness when both attain the critical difference.
        if (j.size() > r.witness.size()) r.witness = j;
    }

    if (opt.withOracle && g.order() <= opt.oracleLimit) {
        OracleBudget b;
        b.subsetLimit = std::max(b.subsetLimit, opt.oracleLimit);
        b.matchingLimit = std::max(b.matchingLimit, opt.oracleLimit);
        if (oracleDc(g, b) != r.dc) throw Error("critical difference disagrees with the oracle");
        if (!(oracleKer(g, b) == r.ker)) throw Error("kernel disagrees with the oracle");
        if (r.alpha && oracleAlpha(g, b) != *r.alpha)
            throw Error("independence number disagrees with the oracle");
        if (r.mu && oracleMu(g, b) != *r.mu)
            throw Error("matching number disagrees with the oracle");
    }

    return r;
}

namespace {

ordered_json setJson(const Graph& g, const VertexSet& s) {
    return ordered_json(sortedLabels(g, s));
}

} // namespace

ordered_json analysisToJson(const AnalysisReport& r, const Graph& g) {
    ordered_json out;
    out["schema"] = 1;
    out["n"] = r.n;
    out["m"] = r.m;
    out["isolated_vertices"] = r.isolated;
    if (r.alpha) {
        out["alpha"] = *r.alpha;
    } else {
        out["alpha"] = nullptr;
        out["alpha_bounds"] = ordered_json::array({r.alphaLower, r.alphaUpper});
    }
    if (r.mu)
        out["mu"] = *r.mu;
    else
        out["mu"] = nullptr;
    out["dc"] = r.dc;
    out["idc"] = r.idc;
    out["ker"] = setJson(g, r.ker);
    out["epsilon"] = r.epsilon;
    if (r.core) {
        out["core"] = setJson(g, *r.core);
        out["xi"] = r.core->size();
    } else {
        out["core"] = "unavailable";
        out["xi"] = nullptr;
    }
    if (r.corona) {
        out["corona"] = setJson(g, *r.corona);
        out["zeta"] = r.corona->size();
    } else {
        out["corona"] = "unavailable";
        out["zeta"] = nullptr;
    }
    if (r.koenigEgervary)
        out["koenig_egervary"] = *r.koenigEgervary;
    else
        out["koenig_egervary"] = nullptr;
    out["quasi_regularizable"] = r.quasiRegularizable;
    if (r.quasiRegularizable && r.quasiAssumptionViolated)
        out["quasi_regularizable_note"] =
            "isolated vertex present; the zero critical difference reading applies";
    out["witness_critical_independent_set"] = setJson(g, r.witness);
    if (r.alphaC)
        out["alpha_c"] = *r.alphaC;
    else
        out["alpha_c"] = nullptr;
    return out;
}

std::string analysisToText(const AnalysisReport& r, const Graph& g) {
    std::ostringstream out;
    auto setLine = [&](const char* name, const VertexSet& s) {
        out << name << " = {";
        auto labels = sortedLabels(g, s);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ", ";
            out << labels[i];
        }
        out << "}\n";
    };
    out << "graph: n=" << r.n << " m=" << r.m
        << (r.isolated ? " (isolated vertices present)" : "") << "\n";
    if (r.alpha)
        out << "alpha = " << *r.alpha << "\n";
    else
        out << "alpha in [" << r.alphaLower << ", " << r.alphaUpper
            << "] (exact search unavailable)\n";
    if (r.mu)
        out << "mu = " << *r.mu << "\n";
    else
        out << "mu unavailable (guard exceeded)\n";
    out << "dc = " << r.dc << ", idc = " << r.idc << "\n";
    setLine("ker", r.ker);
    out << "epsilon = " << r.epsilon << "\n";
    if (r.core) {
        setLine("core", *r.core);
        out << "xi = " << r.core->size() << "\n";
    } else {
        out << "core unavailable\n";
    }
    if (r.corona) {
        setLine("corona", *r.corona);
        out << "zeta = " << r.corona->size() << "\n";
    } else {
        out << "corona unavailable\n";
    }
    if (r.koenigEgervary)
        out << "koenig_egervary = " << (*r.koenigEgervary ? "true" : "false")
            << "\n";
    out << "quasi_regularizable = " << (r.quasiRegularizable ? "true" : "false")
        << "\n";
    setLine("witness_critical_independent_set", r.witness);
    if (r.alphaC) out << "alpha_c = " << *r.alphaC << "\n";
    if (r.alpha && r.mu && r.core && r.corona) {
        int64_t gap = static_cast<int64_t>(*r.alpha) - static_cast<int64_t>(*r.mu);
        out << "chain: n(" << r.n << ") >= zeta(" << r.corona->size()
            << ") >= alpha(" << *r.alpha << ") >= xi(" << r.core->size()
            << ") >= eps(" << r.epsilon << ") >= dc(" << r.dc
            << ") >= alpha-mu(" << gap << ")\n";
    }
    return out.str();
}

} // namespace critind
