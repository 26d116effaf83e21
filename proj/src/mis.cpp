#include "critind/mis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "critind/errors.hpp"
#include "critind/matching.hpp"

namespace critind {

namespace {

using Words = std::vector<uint64_t>;

struct BitGraph {
    uint32_t n = 0;
    uint32_t w = 0;
    std::vector<uint64_t> rows; // n * w words

    explicit BitGraph(const Graph& g)
        : n(g.order()), w((g.order() + 63) / 64), rows(std::size_t(n) * w, 0) {
        for (uint32_t v = 0; v < n; ++v)
            for (uint32_t u : g.neighbors(v))
                rows[std::size_t(v) * w + u / 64] |= uint64_t(1) << (u % 64);
    }

    const uint64_t* row(uint32_t v) const { return rows.data() + std::size_t(v) * w; }

    Words full() const {
        Words p(w, 0);
        for (uint32_t v = 0; v < n; ++v) p[v / 64] |= uint64_t(1) << (v % 64);
        return p;
    }
};

uint32_t count(const Words& p) {
    uint32_t c = 0;
    for (uint64_t x : p) c += static_cast<uint32_t>(std::popcount(x));
    return c;
}

void clear(Words& p, uint32_t v) { p[v / 64] &= ~(uint64_t(1) << (v % 64)); }

bool intersects(const uint64_t* row, const Words& p) {
    for (uint32_t i = 0; i < p.size(); ++i)
        if (row[i] & p[i]) return true;
    return false;
}

uint32_t degreeIn(const uint64_t* row, const Words& p) {
    uint32_t c = 0;
    for (uint32_t i = 0; i < p.size(); ++i)
        c += static_cast<uint32_t>(std::popcount(row[i] & p[i]));
    return c;
}

struct Searcher {
    const BitGraph& bg;
    uint64_t nodeLimit;
    uint64_t nodes = 0;
    bool budgetHit = false;

    uint32_t best = 0;
    uint32_t target = 0;                 // enumeration pass: alpha
    std::vector<uint32_t> chosen;        // enumeration stack
    std::vector<VertexSet>* out = nullptr;

    Searcher(const BitGraph& b, uint64_t limit) : bg(b), nodeLimit(limit) {}

    bool tick() {
        if (budgetHit) return false;
        if (++nodes > nodeLimit) {
            budgetHit = true;
            return false;
        }
        return true;
    }

    // Size of a greedy matching inside G[P]; alpha(G[P]) <= |P| - size.
    uint32_t matchingBound(Words p) const {
        uint32_t cnt = 0;
        for (uint32_t i = 0; i < p.size(); ++i) {
            while (p[i]) {
                uint32_t v = i * 64 + static_cast<uint32_t>(std::countr_zero(p[i]));
                clear(p, v);
                const uint64_t* r = bg.row(v);
                for (uint32_t j = 0; j < p.size(); ++j) {
                    uint64_t hit = r[j] & p[j];
                    if (hit) {
                        uint32_t u = j * 64 + static_cast<uint32_t>(std::countr_zero(hit));
                        clear(p, u);
                        ++cnt;
                        break;
                    }
                }
            }
        }
        return cnt;
    }

    // Vertices with no neighbor inside P belong to every maximum
    // independent subset of P, so they are committed outright; returns
    // how many were moved from p to the chosen stack (recordSets mode)
    // or just counted.
    uint32_t commitIsolated(Words& p, bool record) {
        uint32_t taken = 0;
        for (uint32_t i = 0; i < p.size(); ++i) {
            uint64_t word = p[i];
            while (word) {
                uint32_t v = i * 64 + static_cast<uint32_t>(std::countr_zero(word));
                word &= word - 1;
                if (!intersects(bg.row(v), p)) {
                    clear(p, v);
                    word = p[i] & word; // keep scanning the updated word
                    ++taken;
                    if (record) chosen.push_back(v);
                }
            }
        }
        return taken;
    }

    int64_t pickPivot(const Words& p) const {
        int64_t pivot = -1;
        uint32_t bestDeg = 0;
        for (uint32_t i = 0; i < p.size(); ++i) {
            uint64_t word = p[i];
            while (word) {
                uint32_t v = i * 64 + static_cast<uint32_t>(std::countr_zero(word));
                word &= word - 1;
                uint32_t d = degreeIn(bg.row(v), p);
                if (pivot < 0 || d > bestDeg) {
                    pivot = v;
                    bestDeg = d;
                }
            }
        }
        return pivot;
    }

    void searchBest(Words p, uint32_t cur) {
        if (!tick()) return;
        cur += commitIsolated(p, false);
        uint32_t rest = count(p);
        if (rest == 0) {
            best = std::max(best, cur);
            return;
        }
        if (cur + rest <= best) return;
        if (cur + rest - matchingBound(p) <= best) return;

        uint32_t v = static_cast<uint32_t>(pickPivot(p));
        Words inc = p;
        const uint64_t* r = bg.row(v);
        for (uint32_t i = 0; i < inc.size(); ++i) inc[i] &= ~r[i];
        clear(inc, v);
        searchBest(std::move(inc), cur + 1);
        if (budgetHit) return;
        clear(p, v);
        searchBest(std::move(p), cur);
    }

    void enumerateAll(Words p, uint32_t cur) {
        if (!tick()) return;
        std::size_t mark = chosen.size();
        cur += commitIsolated(p, true);
        uint32_t rest = count(p);
        bool prune = (cur + rest < target) ||
                     (cur + rest - matchingBound(p) < target);
        if (!prune) {
            if (rest == 0) {
                if (cur == target) {
                    std::vector<uint32_t> ids(chosen);
                    out->push_back(VertexSet(std::move(ids)));
                }
            } else {
                uint32_t v = static_cast<uint32_t>(pickPivot(p));
                Words inc = p;
                const uint64_t* r = bg.row(v);
                for (uint32_t i = 0; i < inc.size(); ++i) inc[i] &= ~r[i];
                clear(inc, v);
                chosen.push_back(v);
                enumerateAll(std::move(inc), cur + 1);
                chosen.pop_back();
                if (!budgetHit) {
                    clear(p, v);
                    enumerateAll(std::move(p), cur);
                }
            }
        }
        chosen.resize(mark);
    }
};

uint32_t greedyIndependentLower(const Graph& g) {
    std::vector<uint32_t> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return g.degree(a) < g.degree(b);
    });
    std::vector<bool> blocked(g.order(), false);
    uint32_t size = 0;
    for (uint32_t v : order) {
        if (blocked[v]) continue;
        ++size;
        blocked[v] = true;
        for (uint32_t w : g.neighbors(v)) blocked[w] = true;
    }
    return size;
}

uint32_t greedyMatchingSize(const Graph& g) {
    std::vector<bool> used(g.order(), false);
    uint32_t size = 0;
    for (uint32_t v = 0; v < g.order(); ++v) {
        if (used[v]) continue;
        for (uint32_t w : g.neighbors(v))
            if (!used[w]) {
                used[v] = used[w] = true;
                ++size;
                break;
            }
    }
    return size;
}

} // namespace

std::pair<uint32_t, uint32_t> alphaBounds(const Graph& g) {
    return {greedyIndependentLower(g), g.order() - greedyMatchingSize(g)};
}

AlphaResult exactAlpha(const Graph& g, const SearchBudget& budget) {
    if (g.order() > budget.maxVertices)
        throw BudgetError("alpha guard: order " + std::to_string(g.order()) +
                          " exceeds " + std::to_string(budget.maxVertices));
    AlphaResult res;
    auto [lo, hi] = alphaBounds(g);
    res.lower = lo;
    res.upper = hi;
    if (g.order() == 0) {
        res.exact = 0;
        return res;
    }
    BitGraph bg(g);
    Searcher s(bg, budget.maxNodes);
    s.best = lo;
    s.searchBest(bg.full(), 0);
    res.lower = s.best;
    if (!s.budgetHit) res.exact = s.best;
    return res;
}

std::optional<OmegaFamily> enumerateMaximumIndependentSets(
    const Graph& g, const SearchBudget& budget) {
    if (g.order() > budget.maxVertices) return std::nullopt;
    OmegaFamily fam;
    if (g.order() == 0) {
        fam.alpha = 0;
        fam.sets.push_back(VertexSet{});
        return fam;
    }
    BitGraph bg(g);
    Searcher s(bg, budget.maxNodes);
    s.best = greedyIndependentLower(g);
    s.searchBest(bg.full(), 0);
    if (s.budgetHit) return std::nullopt;
    fam.alpha = s.best;

    std::vector<VertexSet> sets;
    s.target = s.best;
    s.out = &sets;
    s.enumerateAll(bg.full(), 0);
    if (s.budgetHit) return std::nullopt;

    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); });
    fam.sets = std::move(sets);
    fam.core = fam.sets.front();
    fam.corona = fam.sets.front();
    for (std::size_t i = 1; i < fam.sets.size(); ++i) {
        fam.core = setIntersection(fam.core, fam.sets[i]);
        fam.corona = setUnion(fam.corona, fam.sets[i]);
    }
    return fam;
}

bool isLocalMaxIndependentSet(const Graph& g, const VertexSet& a,
                              const SearchBudget& budget) {
    if (!isIndependent(g, a))
        throw InvalidArgument("local-maximum test requires an independent set");
    VertexSet closed = setUnion(a, neighborhood(g, a));
    InducedSubgraph sub = inducedSubgraph(g, closed);
    AlphaResult r = exactAlpha(sub.graph, budget);
    if (!r.exact)
        throw BudgetError("local-maximum test: alpha search budget exhausted");
    return *r.exact == a.size();
}

std::optional<CoreCorona> computeCoreCorona(const Graph& g,
                                            const SearchBudget& budget) {
    if (g.order() > budget.maxVertices) return std::nullopt;

    uint64_t remaining = budget.maxNodes;
    auto alphaOf = [&](const Graph& h) -> std::optional<uint32_t> {
        if (h.order() == 0) return 0;
        BitGraph bg(h);
        Searcher s(bg, remaining);
        s.best = greedyIndependentLower(h);
        s.searchBest(bg.full(), 0);
        remaining -= std::min(remaining, s.nodes);
        if (s.budgetHit) return std::nullopt;
        return s.best;
    };

    auto a = alphaOf(g);
    if (!a) return std::nullopt;
    CoreCorona cc;
    cc.alpha = *a;

    VertexSet all = allVertices(g);
    for (uint32_t v = 0; v < g.order(); ++v) {
        VertexSet rest = all;
        rest.erase(v);
        auto av = alphaOf(inducedSubgraph(g, rest).graph);
        if (!av) return std::nullopt;
        if (*av < cc.alpha) cc.core.insert(v); // v is in every maximum set

        auto an = alphaOf(deleteClosedNeighborhood(g, VertexSet{v}).graph);
        if (!an) return std::nullopt;
        if (*an + 1 == cc.alpha) cc.corona.insert(v); // v is in some maximum set
    }
    return cc;
}

} // namespace critind
