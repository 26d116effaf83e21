#include "critind/parse.hpp"

#include <sstream>
#include <unordered_map>

#include "critind/errors.hpp"

namespace critind {

namespace {

// Strips a trailing comment and surrounding whitespace; empty result
// means the line carries nothing.
std::string stripLine(const std::string& raw) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const char* ws = " \t\v\f";
    auto b = line.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = line.find_last_not_of(ws);
    return line.substr(b, e - b + 1);
}

} // namespace

Graph parseEdgeList(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineNo = 0;

    std::vector<std::string> labels;
    std::unordered_map<std::string, uint32_t> ids;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<uint32_t>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::unordered_map<uint64_t, std::size_t> seen; // packed edge -> line

    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = stripLine(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a;
        if (!(fields >> b)) {
            intern(a); // single token: isolated-vertex declaration
            continue;
        }
        if (fields >> extra)
            throw ParseError("expected 'label label', got extra token '" + extra + "'",
                             lineNo);
        uint32_t u = intern(a);
        uint32_t v = intern(b);
        if (u == v) throw ParseError("self-loop on '" + a + "'", lineNo);
        uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
        if (auto it = seen.find(key); it != seen.end())
            throw ParseError("duplicate edge '" + a + " " + b +
                                 "' (first on line " + std::to_string(it->second) + ")",
                             lineNo);
        seen.emplace(key, lineNo);
        edges.emplace_back(u, v);
    }
    return Graph(std::move(labels), edges);
}

Graph parseDimacs(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineNo = 0;

    bool sawProblem = false;
    uint64_t n = 0, m = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::unordered_map<uint64_t, std::size_t> seen;

    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = stripLine(raw);
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (sawProblem) throw ParseError("second problem line", lineNo);
            std::string kind;
            if (!(fields >> kind >> n >> m) || kind != "edge")
                throw ParseError("expected 'p edge N M'", lineNo);
            sawProblem = true;
        } else if (tag == "e") {
            if (!sawProblem)
                throw ParseError("edge line before the problem line", lineNo);
            uint64_t i = 0, j = 0;
            if (!(fields >> i >> j))
                throw ParseError("expected 'e I J'", lineNo);
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError("vertex index out of range 1.." + std::to_string(n),
                                 lineNo);
            if (i == j) throw ParseError("self-loop on vertex " + std::to_string(i),
                                         lineNo);
            uint32_t u = static_cast<uint32_t>(i - 1);
            uint32_t v = static_cast<uint32_t>(j - 1);
            uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
            if (auto it = seen.find(key); it != seen.end())
                throw ParseError("duplicate edge (first on line " +
                                     std::to_string(it->second) + ")",
                                 lineNo);
            seen.emplace(key, lineNo);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown line tag '" + tag + "'", lineNo);
        }
    }
    if (!sawProblem) throw ParseError("missing problem line");
    if (edges.size() != m)
        throw ParseError("problem line declares " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));

    std::vector<std::string> labels(n);
    for (uint64_t v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
    return Graph(std::move(labels), edges);
}

} // namespace critind
