#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

// Undirected simple graph with stable edge indices 0..E-1.
class SimpleGraph {
  public:
    SimpleGraph(size_t vertices, const std::vector<std::pair<int, int>>& edges)
        : v_(vertices), adj_(vertices) {
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges) {
            if (a < 0 || b < 0 || size_t(a) >= vertices || size_t(b) >= vertices)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b) throw std::invalid_argument("loop edge rejected");
            std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge rejected");
            int idx = static_cast<int>(edges_.size());
            edges_.push_back(key);
            adj_[key.first].push_back({key.second, idx});
            adj_[key.second].push_back({key.first, idx});
        }
    }

    size_t num_vertices() const { return v_; }
    size_t num_edges() const { return edges_.size(); }
    std::pair<int, int> edge(size_t e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // (neighbor, edge index) pairs
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
    size_t degree(int v) const { return adj_[v].size(); }

    // Common degree when the graph is regular.
    std::optional<int> regular_degree() const {
        if (v_ == 0) return std::nullopt;
        size_t d = degree(0);
        for (size_t i = 1; i < v_; ++i)
            if (degree(int(i)) != d) return std::nullopt;
        return int(d);
    }

    size_t num_components() const {
        std::vector<bool> seen(v_, false);
        size_t comps = 0;
        for (size_t s = 0; s < v_; ++s) {
            if (seen[s]) continue;
            ++comps;
            std::deque<int> q{int(s)};
            seen[s] = true;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (auto [w, e] : adj_[u])
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push_back(w);
                    }
            }
        }
        return comps;
    }

    bool connected() const { return v_ == 0 || num_components() == 1; }

  private:
    size_t v_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Exact girth by BFS from every vertex; 0 for acyclic graphs. Every
// non-tree edge seen from root s closes a walk of length
// dist(u) + dist(w) + 1 >= girth, and a root on a shortest cycle realizes
// equality, so the global minimum is exact.
inline int girth(const SimpleGraph& g) {
    size_t n = g.num_vertices();
    int best = 0;
    std::vector<int> dist(n), parent_edge(n);
    for (size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::deque<int> q{int(s)};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best && 2 * dist[u] >= best) continue;  // no shorter cycle reachable
            for (auto [w, e] : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    q.push_back(w);
                } else if (e != parent_edge[u]) {
                    int cand = dist[u] + dist[w] + 1;
                    if (!best || cand < best) best = cand;
                }
            }
        }
    }
    return best;
}

// One shortest cycle as an edge-index list (empty when acyclic).
inline std::vector<int> shortest_cycle(const SimpleGraph& g) {
    int target = girth(g);
    if (target == 0) return {};
    size_t n = g.num_vertices();
    std::vector<int> dist(n), parent_edge(n), parent(n);
    for (size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{int(s)};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, e] : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    parent[w] = u;
                    q.push_back(w);
                } else if (e != parent_edge[u] && dist[u] + dist[w] + 1 == target) {
                    // walk u -> s and w -> s; the closed walk has length
                    // exactly girth, hence is a simple cycle
                    std::vector<int> up, wp;
                    for (int x = u; parent[x] >= 0; x = parent[x]) up.push_back(parent_edge[x]);
                    for (int x = w; parent[x] >= 0; x = parent[x]) wp.push_back(parent_edge[x]);
                    while (!up.empty() && !wp.empty() && up.back() == wp.back()) {
                        up.pop_back();
                        wp.pop_back();
                    }
                    std::vector<int> cycle = up;
                    cycle.push_back(e);
                    cycle.insert(cycle.end(), wp.rbegin(), wp.rend());
                    return cycle;
                }
            }
        }
    }
    return {};
}

// Minimum vertex count of a degree-regular graph attaining the given girth:
// 1 + d * sum (d-1)^i for odd girth 2t+1, 2 * sum (d-1)^i for even girth 2t.
inline int moore_lower_bound(int degree, int girth) {
    if (degree < 2 || girth < 3) throw std::invalid_argument("need degree >= 2, girth >= 3");
    int64_t out;
    if (girth % 2) {
        int t = girth / 2;
        int64_t sum = 0, pw = 1;
        for (int i = 0; i < t; ++i) {
            sum += pw;
            pw *= degree - 1;
        }
        out = 1 + int64_t(degree) * sum;
    } else {
        int t = girth / 2;
        int64_t sum = 0, pw = 1;
        for (int i = 0; i < t; ++i) {
            sum += pw;
            pw *= degree - 1;
        }
        out = 2 * sum;
    }
    if (out > INT32_MAX) throw std::overflow_error("moore bound overflows");
    return int(out);
}

struct GenerateResult {
    SimpleGraph graph;
    int girth;
    bool met_target;
    uint64_t iterations;
};

namespace detail {

// Configuration-model random regular graph; resamples until simple and
// connected.
inline SimpleGraph random_regular(int vertices, int degree, std::mt19937_64& rng) {
    std::vector<int> stubs;
    stubs.reserve(size_t(vertices) * degree);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        stubs.clear();
        for (int v = 0; v < vertices; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                ok = false;
                break;
            }
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
                ok = false;
                break;
            }
            edges.push_back({a, b});
        }
        if (!ok) continue;
        SimpleGraph g(size_t(vertices), edges);
        if (g.connected()) return g;
    }
    throw std::runtime_error("failed to sample a connected regular graph");
}

struct GirthInfo {
    int girth;      // 0 when acyclic
    int witnesses;  // BFS (root, edge) pairs attaining the girth; proxy for
                    // the number of shortest cycles, used as a plateau score
};

inline GirthInfo girth_info(const SimpleGraph& g) {
    size_t n = g.num_vertices();
    int best = 0, wit = 0;
    std::vector<int> dist(n), parent_edge(n);
    for (size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::deque<int> q{int(s)};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best && 2 * dist[u] > best) continue;
            for (auto [w, e] : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    q.push_back(w);
                } else if (e != parent_edge[u]) {
                    int cand = dist[u] + dist[w] + 1;
                    if (!best || cand < best) {
                        best = cand;
                        wit = 1;
                    } else if (cand == best) {
                        ++wit;
                    }
                }
            }
        }
    }
    return {best, wit};
}

}  // namespace detail

// Randomized search for a connected degree-regular graph on vertex_budget
// vertices with girth >= girth_target: random restarts plus girth-preserving
// double-edge swaps biased towards edges on shortest cycles. Deterministic
// for a fixed seed. When the target is not met within the iteration cap the
// best graph found is returned with met_target = false.
inline GenerateResult generate_regular_girth(int degree, int girth_target, int vertex_budget,
                                             uint64_t seed) {
    if (degree < 2 || girth_target < 3)
        throw std::invalid_argument("need degree >= 2 and girth target >= 3");
    if (int64_t(degree) * vertex_budget % 2 != 0)
        throw std::invalid_argument("degree * vertices must be even");
    if (vertex_budget < moore_lower_bound(degree, girth_target))
        throw std::invalid_argument("vertex budget below the Moore bound for this girth");

    std::mt19937_64 rng(seed);
    const uint64_t cap = 10000ull * uint64_t(vertex_budget) * degree / 2;
    uint64_t iters = 0;

    std::optional<SimpleGraph> best;
    int best_girth = 0;

    while (iters < cap) {
        SimpleGraph g = detail::random_regular(vertex_budget, degree, rng);
        detail::GirthInfo cur = detail::girth_info(g);
        for (int stale = 0; iters < cap && stale < 400; ++iters) {
            if (cur.girth >= girth_target) return {g, cur.girth, true, iters};
            if (cur.girth > best_girth) {
                best = g;
                best_girth = cur.girth;
            }
            // pick one edge on a shortest cycle and one random other edge
            std::vector<int> cyc = shortest_cycle(g);
            std::uniform_int_distribution<size_t> pick_cyc(0, cyc.size() - 1);
            std::uniform_int_distribution<size_t> pick_any(0, g.num_edges() - 1);
            size_t e1 = size_t(cyc[pick_cyc(rng)]);
            size_t e2 = pick_any(rng);
            auto [a, b] = g.edge(e1);
            auto [c, d] = g.edge(e2);
            if (a == c || a == d || b == c || b == d) {
                ++stale;
                continue;
            }
            // two rewirings preserve degrees: (a,c)+(b,d) or (a,d)+(b,c)
            bool accepted = false;
            for (int variant = 0; variant < 2 && !accepted; ++variant) {
                std::pair<int, int> r1 = variant ? std::pair{a, d} : std::pair{a, c};
                std::pair<int, int> r2 = variant ? std::pair{b, c} : std::pair{b, d};
                std::vector<std::pair<int, int>> edges = g.edges();
                edges[e1] = r1;
                edges[e2] = r2;
                std::optional<SimpleGraph> h;
                try {
                    h.emplace(size_t(vertex_budget), edges);
                } catch (const std::invalid_argument&) {
                    continue;  // produced a loop or duplicate edge
                }
                if (!h->connected()) continue;
                detail::GirthInfo hi = detail::girth_info(*h);
                if (hi.girth > cur.girth ||
                    (hi.girth == cur.girth && hi.witnesses <= cur.witnesses)) {
                    bool strict = hi.girth > cur.girth || hi.witnesses < cur.witnesses;
                    g = std::move(*h);
                    cur = hi;
                    accepted = true;
                    if (strict) stale = 0;
                }
            }
            if (!accepted) ++stale;
        }
    }

    if (!best) {
        SimpleGraph g = detail::random_regular(vertex_budget, degree, rng);
        return {g, girth(g), girth(g) >= girth_target, iters};
    }
    return {*best, best_girth, best_girth >= girth_target, iters};
}

namespace detail {

// LCF notation: hamiltonian cycle 0..n-1 plus chords i -> i + shifts[i % L].
inline SimpleGraph lcf_graph(int n, const std::vector<int>& shifts) {
    std::set<std::pair<int, int>> eset;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        eset.insert({std::min(i, j), std::max(i, j)});
    }
    for (int i = 0; i < n; ++i) {
        int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
        eset.insert({std::min(i, j), std::max(i, j)});
    }
    return SimpleGraph(size_t(n), {eset.begin(), eset.end()});
}

}  // namespace detail

// Fixture library. Girth and regularity metadata are recomputed and checked
// on every load.
inline SimpleGraph named_graph(const std::string& name) {
    auto check = [&](SimpleGraph g, size_t v, size_t e, int deg, int gg) {
        if (g.num_vertices() != v || g.num_edges() != e || g.regular_degree() != deg ||
            girth(g) != gg)
            throw std::logic_error("named graph failed its metadata check: " + name);
        return g;
    };

    if (name == "k4") {
        return check(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 4, 6, 3, 3);
    }
    if (name == "k33") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e.push_back({i, 3 + j});
        return check(SimpleGraph(6, e), 6, 9, 3, 4);
    }
    if (name == "petersen") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
        for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
        for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
        return check(SimpleGraph(10, e), 10, 15, 3, 5);
    }
    if (name == "heawood") return check(detail::lcf_graph(14, {5, -5}), 14, 21, 3, 6);
    if (name == "mcgee") return check(detail::lcf_graph(24, {12, 7, -7}), 24, 36, 3, 7);
    if (name == "tutte_coxeter")
        return check(detail::lcf_graph(30, {-13, -9, 7, -7, 9, 13}), 30, 45, 3, 8);

    auto param = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() > prefix.size() + 2 && name.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
            name.back() == ')') {
            try {
                return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    };
    if (auto n = param("cycle")) {
        if (*n < 3) throw std::invalid_argument("cycle(n) needs n >= 3");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < *n; ++i) e.push_back({i, (i + 1) % *n});
        return check(SimpleGraph(size_t(*n), e), size_t(*n), size_t(*n), 2, *n);
    }
    if (auto n = param("complete")) {
        if (*n < 3) throw std::invalid_argument("complete(n) needs n >= 3");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < *n; ++i)
            for (int j = i + 1; j < *n; ++j) e.push_back({i, j});
        return check(SimpleGraph(size_t(*n), e), size_t(*n), size_t(*n) * (*n - 1) / 2, *n - 1, 3);
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace lrc
