// Command-line front end: analyze single graphs, verify corpora,
// generate random instances, emit fixture files.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critind.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GraphDeleter {
    void operator()(critind_graph* g) const { critind_graph_free(g); }
};
using GraphPtr = std::unique_ptr<critind_graph, GraphDeleter>;

struct AnalysisDeleter {
    void operator()(critind_analysis* a) const { critind_analysis_free(a); }
};
using AnalysisPtr = std::unique_ptr<critind_analysis, AnalysisDeleter>;

struct VerificationDeleter {
    void operator()(critind_verification* v) const { critind_verification_free(v); }
};
using VerificationPtr = std::unique_ptr<critind_verification, VerificationDeleter>;

// Owned string coming back from the C API.
std::string takeString(char* s) {
    std::string out = s ? s : "";
    critind_string_free(s);
    return out;
}

int statusToExit(critind_status s) {
    switch (s) {
    case CRITIND_OK: return kExitOk;
    case CRITIND_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
    }
}

int reportError(critind_status s, const std::string& context) {
    std::cerr << "error: " << context << ": " << critind_last_error() << "\n";
    return statusToExit(s);
}

struct RandomSpec {
    std::string model; // "gnp" or "tree"
    uint32_t n = 0;
    double p = 0.0;
};

// Accepts "gnp:n,p" and "tree:n".
std::optional<RandomSpec> parseRandomSpec(const std::string& text) {
    RandomSpec spec;
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    spec.model = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (spec.model == "gnp") {
            std::size_t comma = rest.find(',');
            if (comma == std::string::npos) return std::nullopt;
            spec.n = static_cast<uint32_t>(std::stoul(rest.substr(0, comma)));
            spec.p = std::stod(rest.substr(comma + 1));
        } else if (spec.model == "tree") {
            spec.n = static_cast<uint32_t>(std::stoul(rest));
        } else {
            return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return spec;
}

critind_status loadFromSource(const std::string& source, const std::string& format,
                              critind_graph** out) {
    if (source.rfind("fixture:", 0) == 0)
        return critind_graph_fixture(source.substr(8).c_str(), out);
    critind_format fmt =
        format == "dimacs" ? CRITIND_FORMAT_DIMACS : CRITIND_FORMAT_EDGE_LIST;
    return critind_graph_from_file(source.c_str(), fmt, out);
}

int cmdAnalyze(const std::string& source, const std::string& format, bool json,
               uint32_t exactGuard, bool withOracle, bool noCoreCorona,
               bool crossCheckKer) {
    critind_graph* graw = nullptr;
    if (auto s = loadFromSource(source, format, &graw); s != CRITIND_OK)
        return reportError(s, "cannot load '" + source + "'");
    GraphPtr g(graw);

    critind_analysis_options opts;
    critind_analysis_options_init(&opts);
    if (exactGuard) {
        opts.alpha_max_vertices = exactGuard;
        opts.core_max_vertices = exactGuard;
    }
    opts.with_core_corona = noCoreCorona ? 0 : 1;
    opts.with_oracle = withOracle ? 1 : 0;
    opts.cross_check_ker = crossCheckKer ? 1 : 0;

    critind_analysis* araw = nullptr;
    if (auto s = critind_analyze(g.get(), &opts, &araw); s != CRITIND_OK)
        return reportError(s, "analysis of '" + source + "' failed");
    AnalysisPtr a(araw);

    char* text = nullptr;
    auto s = json ? critind_analysis_json(a.get(), &text)
                  : critind_analysis_text(a.get(), &text);
    if (s != CRITIND_OK) return reportError(s, "rendering failed");
    std::cout << takeString(text);
    if (json) std::cout << "\n";
    return kExitOk;
}

struct CorpusItem {
    std::string name;
    GraphPtr graph;
    uint64_t seed = 0;
    bool seeded = false;
};

// Materializes the graphs a verify run iterates over.
int buildCorpus(const std::string& source, const std::string& randomSpec,
                uint32_t count, uint64_t seed, const std::string& format,
                std::vector<CorpusItem>& out) {
    if (!randomSpec.empty()) {
        auto spec = parseRandomSpec(randomSpec);
        if (!spec) {
            std::cerr << "error: bad --random spec '" << randomSpec
                      << "' (expected gnp:n,p or tree:n)\n";
            return kExitUsage;
        }
        for (uint32_t k = 0; k < count; ++k) {
            uint64_t s = seed + k;
            critind_graph* graw = nullptr;
            critind_status st =
                spec->model == "gnp"
                    ? critind_graph_gnp(spec->n, spec->p, s, &graw)
                    : critind_graph_random_tree(spec->n, s, &graw);
            if (st != CRITIND_OK) return reportError(st, "generation failed");
            CorpusItem item;
            item.name = randomSpec + "#" + std::to_string(k);
            item.graph.reset(graw);
            item.seed = s;
            item.seeded = true;
            out.push_back(std::move(item));
        }
        return kExitOk;
    }
    if (source == "fixtures") {
        for (std::size_t i = 0; i < critind_fixture_count(); ++i) {
            const char* name = critind_fixture_name(i);
            critind_graph* graw = nullptr;
            if (auto s = critind_graph_fixture(name, &graw); s != CRITIND_OK)
                return reportError(s, "fixture load failed");
            CorpusItem item;
            item.name = name;
            item.graph.reset(graw);
            out.push_back(std::move(item));
        }
        return kExitOk;
    }
    critind_graph* graw = nullptr;
    if (auto s = loadFromSource(source, format, &graw); s != CRITIND_OK)
        return reportError(s, "cannot load '" + source + "'");
    CorpusItem item;
    item.name = source;
    item.graph.reset(graw);
    out.push_back(std::move(item));
    return kExitOk;
}

int cmdVerify(const std::string& source, const std::string& randomSpec,
              uint32_t count, uint64_t seed, const std::string& checks,
              uint32_t oracleLimit, const std::string& format, bool json) {
    std::vector<CorpusItem> corpus;
    if (int rc = buildCorpus(source, randomSpec, count, seed, format, corpus);
        rc != kExitOk)
        return rc;

    critind_verify_options opts;
    critind_verify_options_init(&opts);
    if (!checks.empty()) opts.checks = checks.c_str();
    if (oracleLimit) opts.oracle_limit = oracleLimit;

    std::size_t totalFailures = 0;
    ordered_json graphsJson = ordered_json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& item = corpus[i];
        critind_verification* vraw = nullptr;
        if (auto s = critind_verify(item.graph.get(), &opts, &vraw); s != CRITIND_OK)
            return reportError(s, "verification of '" + item.name + "' failed");
        VerificationPtr v(vraw);
        totalFailures += critind_verification_failures(v.get());
        if (json) {
            char* text = nullptr;
            if (auto s = critind_verification_json(v.get(), &text); s != CRITIND_OK)
                return reportError(s, "rendering failed");
            ordered_json entry;
            entry["index"] = i;
            entry["source"] = item.name;
            if (item.seeded) entry["seed"] = item.seed;
            entry["report"] = ordered_json::parse(takeString(text));
            graphsJson.push_back(std::move(entry));
        } else {
            char* text = nullptr;
            if (auto s = critind_verification_text(v.get(), &text); s != CRITIND_OK)
                return reportError(s, "rendering failed");
            std::cout << "[" << i << "] " << item.name << "\n"
                      << takeString(text) << "\n";
        }
    }
    if (json) {
        ordered_json doc;
        doc["schema"] = 1;
        doc["source"] = randomSpec.empty() ? source : randomSpec;
        doc["count"] = corpus.size();
        if (!randomSpec.empty()) doc["seed"] = seed;
        doc["graphs"] = std::move(graphsJson);
        doc["total_failures"] = totalFailures;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graphs: " << corpus.size()
                  << ", total check failures: " << totalFailures << "\n";
    }
    return totalFailures == 0 ? kExitOk : kExitCheckFailed;
}

int cmdGen(const std::string& model, uint32_t n, double p, uint64_t seed,
           const std::string& outPath) {
    critind_graph* graw = nullptr;
    critind_status st = model == "gnp" ? critind_graph_gnp(n, p, seed, &graw)
                                       : critind_graph_random_tree(n, seed, &graw);
    if (st != CRITIND_OK) return reportError(st, "generation failed");
    GraphPtr g(graw);
    char* text = nullptr;
    if (auto s = critind_graph_to_edge_list(g.get(), &text); s != CRITIND_OK)
        return reportError(s, "serialization failed");
    std::string body = takeString(text);
    if (outPath == "-") {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream out(outPath);
    if (!out) {
        std::cerr << "error: cannot open '" << outPath << "' for writing\n";
        return kExitUsage;
    }
    out << body;
    return out.good() ? kExitOk : kExitUsage;
}

int cmdFixtures(const std::string& outDir) {
    for (std::size_t i = 0; i < critind_fixture_count(); ++i) {
        const char* name = critind_fixture_name(i);
        critind_graph* graw = nullptr;
        if (auto s = critind_graph_fixture(name, &graw); s != CRITIND_OK)
            return reportError(s, "fixture load failed");
        GraphPtr g(graw);
        char* text = nullptr;
        if (auto s = critind_graph_to_edge_list(g.get(), &text); s != CRITIND_OK)
            return reportError(s, "serialization failed");
        std::string path = outDir + "/" + name + ".edges";
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open '" << path << "' for writing\n";
            return kExitUsage;
        }
        out << takeString(text);
        if (!out.good()) {
            std::cerr << "error: write to '" << path << "' failed\n";
            return kExitUsage;
        }
        std::cout << path << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical independent set analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(critind_version()));

    std::string source, format = "edge-list", randomSpec, checks, outPath = "-";
    std::string model;
    bool json = false, withOracle = false, noCoreCorona = false,
         crossCheckKer = false;
    uint32_t exactGuard = 0, count = 1, oracleLimit = 0, genN = 0;
    uint64_t seed = 0;
    double genP = 0.0;

    auto* analyze = app.add_subcommand("analyze", "report the invariants of one graph");
    analyze->add_option("source", source,
                        "input path or fixture:NAME")->required();
    analyze->add_option("--format", format, "edge-list or dimacs")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));
    analyze->add_flag("--json", json, "emit JSON instead of text");
    analyze->add_option("--exact-guard", exactGuard,
                        "vertex cap for the exponential searches");
    analyze->add_flag("--oracle", withOracle,
                      "cross-check against exhaustive search (small graphs)");
    analyze->add_flag("--no-core-corona", noCoreCorona,
                      "skip the core/corona computation");
    analyze->add_flag("--cross-check-ker", crossCheckKer,
                      "run both kernel computations and require equality");

    auto* verify = app.add_subcommand("verify", "run the property checks");
    verify->add_option("source", source,
                       "input path, 'fixtures', or fixture:NAME");
    verify->add_option("--random", randomSpec, "gnp:n,p or tree:n");
    verify->add_option("--count", count, "number of random graphs");
    verify->add_option("--seed", seed, "base seed; graph k uses seed+k");
    verify->add_option("--checks", checks, "comma-separated check ids (default all)");
    verify->add_option("--oracle-limit", oracleLimit,
                       "max order for exhaustive cross-checks");
    verify->add_option("--format", format, "edge-list or dimacs")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));
    verify->add_flag("--json", json, "emit JSON instead of text");

    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--model", model, "gnp or tree")
        ->required()
        ->check(CLI::IsMember({"gnp", "tree"}));
    gen->add_option("--n", genN, "number of vertices")->required();
    gen->add_option("--p", genP, "edge probability (gnp)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", outPath, "output path, '-' for standard output");

    auto* fixtures = app.add_subcommand("fixtures", "write the built-in graphs");
    fixtures->add_option("--out", outPath, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (analyze->parsed())
        return cmdAnalyze(source, format, json, exactGuard, withOracle,
                          noCoreCorona, crossCheckKer);
    if (verify->parsed()) {
        if (source.empty() && randomSpec.empty()) {
            std::cerr << "error: verify needs a source or --random\n";
            return kExitUsage;
        }
        if (!source.empty() && !randomSpec.empty()) {
            std::cerr << "error: give either a source or --random, not both\n";
            return kExitUsage;
        }
        return cmdVerify(source, randomSpec, count, seed, checks, oracleLimit,
                         format, json);
    }
    if (gen->parsed()) {
        if (model == "gnp" && gen->count("--p") == 0) {
            std::cerr << "error: --p is required for the gnp model\n";
            return kExitUsage;
        }
        return cmdGen(model, genN, genP, seed, outPath);
    }
    if (fixtures->parsed()) return cmdFixtures(outPath);
    return kExitUsage;
}
