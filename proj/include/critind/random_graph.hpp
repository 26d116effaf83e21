#pragma once

#include <cstdint>

#include "critind/graph.hpp"

namespace critind {

// splitmix64: tiny, seedable, reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double nextDouble() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound); bound > 0.
    uint64_t nextBelow(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

// Erdos-Renyi G(n, p) over labels "1".."n", deterministic in (n, p, seed).
// Edges are drawn by geometric skips through the lexicographic pair order,
// so sparse graphs cost O(m) draws.
Graph randomGnp(uint32_t n, double p, uint64_t seed);

// Random labeled tree: vertex i (1-based id i >= 1) attaches to a parent
// drawn uniformly from 0..i-1. Connected, acyclic, n-1 edges.
Graph randomTree(uint32_t n, uint64_t seed);

} // namespace critind
