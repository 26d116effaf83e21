#include "critind/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "critind/errors.hpp"

namespace critind {

namespace {
constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();
} // namespace

std::pair<std::vector<uint32_t>, std::vector<uint32_t>>
BipartiteMatching::minimumVertexCover() const {
    std::vector<uint32_t> left, right;
    for (uint32_t l = 0; l < leftReachable.size(); ++l)
        if (!leftReachable[l]) left.push_back(l);
    for (uint32_t r = 0; r < rightReachable.size(); ++r)
        if (rightReachable[r]) right.push_back(r);
    return {std::move(left), std::move(right)};
}

BipartiteMatching maxBipartiteMatching(const BipartiteGraph& g) {
    const uint32_t nL = g.leftCount();
    const uint32_t nR = g.rightCount();
    BipartiteMatching m;
    m.leftMate.assign(nL, -1);
    m.rightMate.assign(nR, -1);

    std::vector<uint32_t> dist(nL);
    std::vector<uint32_t> queue(nL);

    // Layered BFS from exposed left vertices; true when some exposed
    // right vertex is reachable (an augmenting path exists).
    auto bfs = [&]() {
        uint32_t head = 0, tail = 0;
        for (uint32_t l = 0; l < nL; ++l) {
            if (m.leftMate[l] < 0) {
                dist[l] = 0;
                queue[tail++] = l;
            } else {
                dist[l] = kInf;
            }
        }
        bool found = false;
        while (head < tail) {
            uint32_t l = queue[head++];
            for (uint32_t r : g.rightNeighbors(l)) {
                int32_t l2 = m.rightMate[r];
                if (l2 < 0) {
                    found = true;
                } else if (dist[l2] == kInf) {
                    dist[l2] = dist[l] + 1;
                    queue[tail++] = l2;
                }
            }
        }
        return found;
    };

    std::vector<std::size_t> it(nL);
    std::vector<uint32_t> pathL, pathR;

    // Iterative layered DFS; augments in place when it reaches an
    // exposed right vertex.
    auto tryAugment = [&](uint32_t root) {
        pathL.assign(1, root);
        pathR.clear();
        while (!pathL.empty()) {
            uint32_t l = pathL.back();
            bool descended = false;
            const auto& adj = g.rightNeighbors(l);
            while (it[l] < adj.size()) {
                uint32_t r = adj[it[l]++];
                int32_t l2 = m.rightMate[r];
                if (l2 < 0) {
                    m.leftMate[l] = static_cast<int32_t>(r);
                    m.rightMate[r] = static_cast<int32_t>(l);
                    for (std::size_t i = pathR.size(); i-- > 0;) {
                        m.leftMate[pathL[i]] = static_cast<int32_t>(pathR[i]);
                        m.rightMate[pathR[i]] = static_cast<int32_t>(pathL[i]);
                    }
                    return true;
                }
                if (dist[l2] == dist[l] + 1) {
                    pathR.push_back(r);
                    pathL.push_back(static_cast<uint32_t>(l2));
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                dist[l] = kInf; // dead end: exclude from this phase
                pathL.pop_back();
                if (!pathR.empty()) pathR.pop_back();
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (uint32_t l = 0; l < nL; ++l)
            if (m.leftMate[l] < 0 && tryAugment(l)) ++m.size;
    }

    // Final alternating reachability from the exposed left vertices:
    // left -> right along any edge, right -> left along matched edges.
    m.leftReachable.assign(nL, false);
    m.rightReachable.assign(nR, false);
    uint32_t head = 0, tail = 0;
    for (uint32_t l = 0; l < nL; ++l)
        if (m.leftMate[l] < 0) {
            m.leftReachable[l] = true;
            queue[tail++] = l;
        }
    while (head < tail) {
        uint32_t l = queue[head++];
        for (uint32_t r : g.rightNeighbors(l)) {
            if (m.rightReachable[r]) continue;
            m.rightReachable[r] = true;
            int32_t l2 = m.rightMate[r];
            if (l2 >= 0 && !m.leftReachable[l2]) {
                m.leftReachable[l2] = true;
                queue[tail++] = static_cast<uint32_t>(l2);
            }
        }
    }
    return m;
}

namespace {

// Edmonds blossom search, array-based contraction via base[].
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), p_(n_, -1), base_(n_),
          used_(n_, false), flower_(n_, false) {}

    std::vector<int32_t> run() {
        for (uint32_t v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int32_t u = findPath(v);
            while (u != -1) { // flip the augmenting path ending at u
                int32_t pv = p_[u];
                int32_t ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        return match_;
    }

private:
    int32_t lca(int32_t a, int32_t b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = p_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void markPath(int32_t v, int32_t b, int32_t child) {
        while (base_[v] != b) {
            flower_[base_[v]] = true;
            flower_[base_[match_[v]]] = true;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    // Grows an alternating forest from root; returns the exposed vertex
    // closing an augmenting path, or -1.
    int32_t findPath(uint32_t root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(p_.begin(), p_.end(), -1);
        for (uint32_t i = 0; i < n_; ++i) base_[i] = static_cast<int32_t>(i);

        used_[root] = true;
        std::queue<int32_t> q;
        q.push(static_cast<int32_t>(root));
        while (!q.empty()) {
            int32_t v = q.front();
            q.pop();
            for (uint32_t toU : g_.neighbors(static_cast<uint32_t>(v))) {
                int32_t to = static_cast<int32_t>(toU);
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == static_cast<int32_t>(root) ||
                    (match_[to] != -1 && p_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom.
                    int32_t curBase = lca(v, to);
                    std::fill(flower_.begin(), flower_.end(), false);
                    markPath(v, curBase, to);
                    markPath(to, curBase, v);
                    for (uint32_t i = 0; i < n_; ++i) {
                        if (flower_[base_[i]]) {
                            base_[i] = curBase;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(static_cast<int32_t>(i));
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    uint32_t n_;
    std::vector<int32_t> match_, p_, base_;
    std::vector<bool> used_;
    std::vector<bool> flower_;
};

} // namespace

Matching maxMatchingGeneral(const Graph& g, uint32_t maxVertices) {
    if (g.order() > maxVertices)
        throw BudgetError("general matching guard: order " +
                          std::to_string(g.order()) + " exceeds " +
                          std::to_string(maxVertices));
    Matching m;
    m.mate = Blossom(g).run();
    for (int32_t w : m.mate)
        if (w >= 0) ++m.size;
    m.size /= 2;
    return m;
}

std::optional<Matching> matchInto(const Graph& g, const VertexSet& from,
                                  const VertexSet& into) {
    if (from.intersects(into))
        throw InvalidArgument("matchInto: sides intersect");

    std::vector<int64_t> intoIdx(g.order(), -1);
    {
        int64_t i = 0;
        for (uint32_t v : into) intoIdx[v] = i++;
    }
    BipartiteGraph b(static_cast<uint32_t>(from.size()),
                     static_cast<uint32_t>(into.size()));
    {
        uint32_t fi = 0;
        for (uint32_t v : from) {
            for (uint32_t w : g.neighbors(v))
                if (intoIdx[w] >= 0)
                    b.addEdge(fi, static_cast<uint32_t>(intoIdx[w]));
            ++fi;
        }
    }
    BipartiteMatching bm = maxBipartiteMatching(b);
    if (bm.size != from.size()) return std::nullopt;

    Matching m;
    m.mate.assign(g.order(), -1);
    m.size = bm.size;
    const auto& fromIds = from.ids();
    const auto& intoIds = into.ids();
    for (uint32_t fi = 0; fi < fromIds.size(); ++fi) {
        int32_t r = bm.leftMate[fi];
        if (r < 0) continue;
        uint32_t u = fromIds[fi];
        uint32_t w = intoIds[static_cast<uint32_t>(r)];
        m.mate[u] = static_cast<int32_t>(w);
        m.mate[w] = static_cast<int32_t>(u);
    }
    return m;
}

bool isValidMatching(const Graph& g, const Matching& m) {
    if (m.mate.size() != g.order()) return false;
    std::size_t matched = 0;
    for (uint32_t v = 0; v < g.order(); ++v) {
        int32_t w = m.mate[v];
        if (w < 0) continue;
        if (w >= static_cast<int32_t>(g.order())) return false;
        if (m.mate[w] != static_cast<int32_t>(v)) return false;
        if (!g.hasEdge(v, static_cast<uint32_t>(w))) return false;
        ++matched;
    }
    return matched == 2 * m.size;
}

Matching maxMatching(const Graph& g, uint32_t blossomGuard) {
    if (!isBipartite(g)) return maxMatchingGeneral(g, blossomGuard);

    // 2-color, run the bipartite engine, translate mates back.
    std::vector<int8_t> color(g.order(), -1);
    std::vector<uint32_t> side[2];
    for (uint32_t s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            for (uint32_t w : g.neighbors(v))
                if (color[w] == -1) {
                    color[w] = static_cast<int8_t>(1 - color[v]);
                    q.push(w);
                }
        }
    }
    std::vector<uint32_t> idx(g.order());
    for (uint32_t v = 0; v < g.order(); ++v) {
        idx[v] = static_cast<uint32_t>(side[color[v]].size());
        side[color[v]].push_back(v);
    }
    BipartiteGraph b(static_cast<uint32_t>(side[0].size()),
                     static_cast<uint32_t>(side[1].size()));
    for (uint32_t v : side[0])
        for (uint32_t w : g.neighbors(v)) b.addEdge(idx[v], idx[w]);
    BipartiteMatching bm = maxBipartiteMatching(b);

    Matching m;
    m.mate.assign(g.order(), -1);
    m.size = bm.size;
    for (uint32_t li = 0; li < side[0].size(); ++li) {
        int32_t r = bm.leftMate[li];
        if (r < 0) continue;
        uint32_t u = side[0][li];
        uint32_t w = side[1][static_cast<uint32_t>(r)];
        m.mate[u] = static_cast<int32_t>(w);
        m.mate[w] = static_cast<int32_t>(u);
    }
    return m;
}

} // namespace critind
