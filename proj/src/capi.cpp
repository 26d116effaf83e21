#include "critind.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "critind/analysis.hpp"
#include "critind/errors.hpp"
#include "critind/fixtures.hpp"
#include "critind/parse.hpp"
#include "critind/random_graph.hpp"
#include "critind/verify.hpp"

struct critind_graph {
    critind::Graph g;
};

struct critind_analysis {
    critind::AnalysisReport report;
    critind::Graph graph; // labels for json/text rendering
};

struct critind_verification {
    critind::VerificationReport report;
};

namespace {

thread_local std::string g_lastError;

critind_status fail(critind_status s, const std::string& msg) {
    g_lastError = msg;
    return s;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
critind_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const critind::ParseError& e) {
        return fail(CRITIND_ERR_PARSE, e.what());
    } catch (const critind::InvalidArgument& e) {
        return fail(CRITIND_ERR_INVALID_ARGUMENT, e.what());
    } catch (const critind::BudgetError& e) {
        return fail(CRITIND_ERR_BUDGET_EXCEEDED, e.what());
    } catch (const critind::IoError& e) {
        return fail(CRITIND_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CRITIND_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CRITIND_ERR_INTERNAL, e.what());
    }
}

char* dupString(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

critind_status requireOut(const void* p) {
    if (!p) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null output pointer");
    return CRITIND_OK;
}

} // namespace

extern "C" {

const char* critind_version(void) { return "0.1.0"; }

const char* critind_status_name(critind_status s) {
    switch (s) {
    case CRITIND_OK: return "ok";
    case CRITIND_ERR_PARSE: return "parse error";
    case CRITIND_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CRITIND_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case CRITIND_ERR_IO: return "io error";
    case CRITIND_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* critind_last_error(void) { return g_lastError.c_str(); }

void critind_string_free(char* s) { delete[] s; }

critind_status critind_graph_from_edge_list(const char* text, critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!text) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null input text");
    return guarded([&] {
        *out = new critind_graph{critind::parseEdgeList(text)};
        return CRITIND_OK;
    });
}

critind_status critind_graph_from_dimacs(const char* text, critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!text) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null input text");
    return guarded([&] {
        *out = new critind_graph{critind::parseDimacs(text)};
        return CRITIND_OK;
    });
}

critind_status critind_graph_from_file(const char* path, critind_format fmt,
                                       critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!path) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null path");
    return guarded([&]() -> critind_status {
        std::ifstream in(path);
        if (!in) throw critind::IoError(std::string("cannot open '") + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        critind::Graph g = fmt == CRITIND_FORMAT_DIMACS
                               ? critind::parseDimacs(buf.str())
                               : critind::parseEdgeList(buf.str());
        *out = new critind_graph{std::move(g)};
        return CRITIND_OK;
    });
}

critind_status critind_graph_fixture(const char* name, critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!name) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null fixture name");
    return guarded([&] {
        *out = new critind_graph{critind::fixtureGraph(name)};
        return CRITIND_OK;
    });
}

critind_status critind_graph_gnp(uint32_t n, double p, uint64_t seed,
                                 critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    return guarded([&] {
        *out = new critind_graph{critind::randomGnp(n, p, seed)};
        return CRITIND_OK;
    });
}

critind_status critind_graph_random_tree(uint32_t n, uint64_t seed,
                                         critind_graph** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    return guarded([&] {
        *out = new critind_graph{critind::randomTree(n, seed)};
        return CRITIND_OK;
    });
}

void critind_graph_free(critind_graph* g) { delete g; }

uint32_t critind_graph_order(const critind_graph* g) { return g ? g->g.order() : 0; }

size_t critind_graph_size(const critind_graph* g) { return g ? g->g.size() : 0; }

int critind_graph_has_isolated_vertices(const critind_graph* g) {
    return g && g->g.hasIsolatedVertex() ? 1 : 0;
}

const char* critind_graph_label(const critind_graph* g, uint32_t v) {
    if (!g || v >= g->g.order()) return nullptr;
    return g->g.label(v).c_str();
}

critind_status critind_graph_to_edge_list(const critind_graph* g, char** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!g) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null graph");
    return guarded([&] {
        *out = dupString(critind::toEdgeListText(g->g));
        return CRITIND_OK;
    });
}

size_t critind_fixture_count(void) { return critind::fixtureNames().size(); }

const char* critind_fixture_name(size_t index) {
    const auto& names = critind::fixtureNames();
    if (index >= names.size()) return nullptr;
    return names[index].c_str();
}

void critind_analysis_options_init(critind_analysis_options* o) {
    if (!o) return;
    critind::AnalysisOptions d;
    o->alpha_max_vertices = d.alphaBudget.maxVertices;
    o->alpha_max_nodes = d.alphaBudget.maxNodes;
    o->with_core_corona = d.withCoreCorona ? 1 : 0;
    o->core_max_vertices = d.coreBudget.maxVertices;
    o->core_max_nodes = d.coreBudget.maxNodes;
    o->mu_vertex_guard = d.muVertexGuard;
    o->alpha_c_guard = d.alphaCGuard;
    o->cross_check_ker = d.crossCheckKer ? 1 : 0;
    o->with_oracle = d.withOracle ? 1 : 0;
    o->oracle_limit = d.oracleLimit;
}

critind_status critind_analyze(const critind_graph* g,
                               const critind_analysis_options* o,
                               critind_analysis** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!g) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null graph");
    critind::AnalysisOptions opts;
    if (o) {
        opts.alphaBudget.maxVertices = o->alpha_max_vertices;
        opts.alphaBudget.maxNodes = o->alpha_max_nodes;
        opts.withCoreCorona = o->with_core_corona != 0;
        opts.coreBudget.maxVertices = o->core_max_vertices;
        opts.coreBudget.maxNodes = o->core_max_nodes;
        opts.muVertexGuard = o->mu_vertex_guard;
        opts.alphaCGuard = o->alpha_c_guard;
        opts.crossCheckKer = o->cross_check_ker != 0;
        opts.withOracle = o->with_oracle != 0;
        opts.oracleLimit = o->oracle_limit;
    }
    return guarded([&] {
        auto a = std::make_unique<critind_analysis>(
            critind_analysis{critind::analyze(g->g, opts), g->g});
        *out = a.release();
        return CRITIND_OK;
    });
}

void critind_analysis_free(critind_analysis* a) { delete a; }

int64_t critind_analysis_dc(const critind_analysis* a) { return a ? a->report.dc : 0; }

int64_t critind_analysis_idc(const critind_analysis* a) { return a ? a->report.idc : 0; }

size_t critind_analysis_epsilon(const critind_analysis* a) {
    return a ? a->report.epsilon : 0;
}

int critind_analysis_alpha(const critind_analysis* a, uint32_t* out) {
    if (!a || !out || !a->report.alpha) return 0;
    *out = *a->report.alpha;
    return 1;
}

int critind_analysis_mu(const critind_analysis* a, uint32_t* out) {
    if (!a || !out || !a->report.mu) return 0;
    *out = *a->report.mu;
    return 1;
}

int critind_analysis_alpha_c(const critind_analysis* a, uint32_t* out) {
    if (!a || !out || !a->report.alphaC) return 0;
    *out = *a->report.alphaC;
    return 1;
}

int critind_analysis_xi(const critind_analysis* a, size_t* out) {
    if (!a || !out || !a->report.core) return 0;
    *out = a->report.core->size();
    return 1;
}

int critind_analysis_quasi_regularizable(const critind_analysis* a) {
    return a && a->report.quasiRegularizable ? 1 : 0;
}

const uint32_t* critind_analysis_ker(const critind_analysis* a, size_t* count) {
    if (!a) {
        if (count) *count = 0;
        return nullptr;
    }
    if (count) *count = a->report.ker.size();
    return a->report.ker.ids().data();
}

critind_status critind_analysis_json(const critind_analysis* a, char** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!a) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null analysis");
    return guarded([&] {
        *out = dupString(critind::analysisToJson(a->report, a->graph).dump(2));
        return CRITIND_OK;
    });
}

critind_status critind_analysis_text(const critind_analysis* a, char** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!a) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null analysis");
    return guarded([&] {
        *out = dupString(critind::analysisToText(a->report, a->graph));
        return CRITIND_OK;
    });
}

void critind_verify_options_init(critind_verify_options* o) {
    if (!o) return;
    critind::VerifyOptions d;
    o->checks = nullptr;
    o->oracle_limit = d.oracleLimit;
    o->alpha_max_vertices = d.alphaBudget.maxVertices;
    o->alpha_max_nodes = d.alphaBudget.maxNodes;
    o->omega_max_vertices = d.omegaBudget.maxVertices;
    o->omega_max_nodes = d.omegaBudget.maxNodes;
}

critind_status critind_verify(const critind_graph* g,
                              const critind_verify_options* o,
                              critind_verification** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!g) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null graph");
    critind::VerifyOptions opts;
    if (o) {
        if (o->checks) {
            std::string spec = o->checks;
            std::size_t pos = 0;
            while (pos <= spec.size()) {
                std::size_t comma = spec.find(',', pos);
                if (comma == std::string::npos) comma = spec.size();
                std::string id = spec.substr(pos, comma - pos);
                if (!id.empty()) opts.checks.push_back(id);
                pos = comma + 1;
            }
        }
        opts.oracleLimit = o->oracle_limit;
        opts.alphaBudget.maxVertices = o->alpha_max_vertices;
        opts.alphaBudget.maxNodes = o->alpha_max_nodes;
        opts.omegaBudget.maxVertices = o->omega_max_vertices;
        opts.omegaBudget.maxNodes = o->omega_max_nodes;
    }
    return guarded([&] {
        *out = new critind_verification{critind::runChecks(g->g, opts)};
        return CRITIND_OK;
    });
}

void critind_verification_free(critind_verification* v) { delete v; }

size_t critind_verification_check_count(const critind_verification* v) {
    return v ? v->report.results.size() : 0;
}

const char* critind_verification_check_id(const critind_verification* v, size_t i) {
    if (!v || i >= v->report.results.size()) return nullptr;
    return v->report.results[i].id.c_str();
}

int critind_verification_check_outcome(const critind_verification* v, size_t i) {
    if (!v || i >= v->report.results.size()) return -1;
    switch (v->report.results[i].outcome) {
    case critind::CheckOutcome::Pass: return 0;
    case critind::CheckOutcome::Fail: return 1;
    case critind::CheckOutcome::Skipped: return 2;
    }
    return -1;
}

const char* critind_verification_check_skip_reason(const critind_verification* v,
                                                   size_t i) {
    if (!v || i >= v->report.results.size()) return nullptr;
    return v->report.results[i].skipReason.c_str();
}

size_t critind_verification_failures(const critind_verification* v) {
    return v ? v->report.failures() : 0;
}

critind_status critind_verification_json(const critind_verification* v, char** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!v) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null verification");
    return guarded([&] {
        *out = dupString(critind::verificationToJson(v->report).dump(2));
        return CRITIND_OK;
    });
}

critind_status critind_verification_text(const critind_verification* v, char** out) {
    if (auto s = requireOut(out); s != CRITIND_OK) return s;
    if (!v) return fail(CRITIND_ERR_INVALID_ARGUMENT, "null verification");
    return guarded([&] {
        *out = dupString(critind::verificationToText(v->report));
        return CRITIND_OK;
    });
}

} // extern "C"
