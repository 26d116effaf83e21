#include "critind/random_graph.hpp"

#include <cmath>

#include "critind/errors.hpp"

namespace critind {

namespace {

std::vector<std::string> numericLabels(uint32_t n) {
    std::vector<std::string> labels(n);
    for (uint32_t v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
    return labels;
}

} // namespace

Graph randomGnp(uint32_t n, double p, uint64_t seed) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw InvalidArgument("edge probability must lie in [0, 1]");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    const uint64_t total = static_cast<uint64_t>(n) * (n - (n ? 1 : 0)) / 2;

    if (p >= 1.0) {
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph(numericLabels(n), edges);
    }
    if (p > 0.0 && total > 0) {
        SplitMix64 rng(seed);
        const double logQ = std::log1p(-p);
        // Walk the lexicographic pair order, jumping a geometric gap
        // between successive edges.
        uint64_t pos = 0;
        uint32_t row = 0;
        uint64_t rowStart = 0; // pair index of (row, row+1)
        for (;;) {
            double u = 1.0 - rng.nextDouble(); // in (0, 1]
            pos += static_cast<uint64_t>(std::floor(std::log(u) / logQ));
            if (pos >= total) break;
            while (pos >= rowStart + (n - 1 - row)) {
                rowStart += n - 1 - row;
                ++row;
            }
            uint32_t col = row + 1 + static_cast<uint32_t>(pos - rowStart);
            edges.emplace_back(row, col);
            if (++pos >= total) break;
        }
    }
    return Graph(numericLabels(n), edges);
}

Graph randomTree(uint32_t n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(n ? n - 1 : 0);
    for (uint32_t v = 1; v < n; ++v)
        edges.emplace_back(static_cast<uint32_t>(rng.nextBelow(v)), v);
    return Graph(numericLabels(n), edges);
}

} // namespace critind
