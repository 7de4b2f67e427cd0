#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lrc/graph.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/verify.hpp"

namespace lrc {

// The Tanner extension of a graph: constraints are the vertices, variables
// are the edges, H is the vertex-edge incidence matrix over GF(2). The code
// is the null space of H, i.e. the cycle space of the graph: a 0/1 word is
// a codeword exactly when its edge set has even degree everywhere.
struct TannerCode {
    SimpleGraph graph;
    Matrix H;         // V x E incidence matrix over GF(2)
    LinearCode code;  // null space of H
    int girth;        // of the source graph (0 when acyclic)
};

inline Matrix incidence_matrix(const SimpleGraph& g) {
    PrimeField f2(2);
    Matrix h(f2, g.num_vertices(), g.num_edges());
    for (size_t e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edge(e);
        h.set_raw(a, e, 1);
        h.set_raw(b, e, 1);
    }
    return h;
}

inline TannerCode extend_to_tanner(SimpleGraph g) {
    Matrix h = incidence_matrix(g);
    LinearCode code = LinearCode::from_parity_check(h);
    int gg = girth(g);
    return TannerCode{std::move(g), std::move(h), std::move(code), gg};
}

// The two repair groups of a variable: edge j = (u, w) is the parity of the
// other edges at u, and of the other edges at w. The groups are disjoint in
// a simple graph.
inline std::pair<std::vector<int>, std::vector<int>> repair_groups(const TannerCode& t, int var) {
    if (var < 0 || size_t(var) >= t.graph.num_edges())
        throw std::invalid_argument("variable index out of range");
    auto [u, w] = t.graph.edge(size_t(var));
    std::vector<int> gu, gw;
    for (auto [nb, e] : t.graph.neighbors(u))
        if (e != var) gu.push_back(e);
    for (auto [nb, e] : t.graph.neighbors(w))
        if (e != var) gw.push_back(e);
    return {std::move(gu), std::move(gw)};
}

struct CycleCodeParams {
    int n, k, d;
    bool d_measured;  // false: d reported as the girth by the theorem, not swept
    int locality;
    int availability;
};

// Parameters of the cycle code of an (r+1)-regular graph with girth g >= 3:
// n = E, k = E - V + #components, d = g (asserted against a brute-force
// sweep while 2^k is within the guard), locality r and availability 2
// certified through the endpoint repair groups on a spanning set.
inline CycleCodeParams cycle_code_params(const TannerCode& t, int guard_k = 24) {
    auto deg = t.graph.regular_degree();
    if (!deg || *deg < 2)
        throw std::invalid_argument("cycle code parameters need a regular graph of degree >= 2");
    if (t.girth < 3)
        throw std::invalid_argument("acyclic graph: distance undefined, code trivial");

    int n = int(t.graph.num_edges());
    int k = int(t.code.dimension());
    int expected_k =
        int(t.graph.num_edges() - t.graph.num_vertices() + t.graph.num_components());
    if (k != expected_k) throw std::logic_error("cycle space dimension mismatch");

    bool measured = k <= guard_k;
    int d = t.girth;
    if (measured) {
        int swept = brute_min_distance(t.code, uint64_t(1) << guard_k);
        if (swept != t.girth)
            throw std::logic_error("brute-force distance disagrees with the girth");
        d = swept;
    }

    // repair certification: both endpoint groups reconstruct every variable
    // on every basis codeword, and are disjoint
    Matrix basis = t.code.basis();
    for (int var = 0; var < n; ++var) {
        auto [gu, gw] = repair_groups(t, var);
        for (int e : gu)
            for (int f : gw)
                if (e == f) throw std::logic_error("repair groups are not disjoint");
        for (size_t row = 0; row < basis.rows(); ++row) {
            uint32_t target = basis.raw(row, size_t(var));
            for (const auto& group : {gu, gw}) {
                uint32_t sum = 0;
                for (int e : group) sum ^= basis.raw(row, size_t(e));
                if (sum != target) throw std::logic_error("repair group fails to reconstruct");
            }
        }
    }

    return CycleCodeParams{n, k, d, measured, *deg - 1, 2};
}

}  // namespace lrc
