#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "lrc/matrix.hpp"

namespace testutil {

inline lrc::Matrix make_matrix(uint32_t q, std::initializer_list<std::initializer_list<uint32_t>> rows) {
    lrc::PrimeField f(q);
    size_t m = rows.size();
    size_t n = rows.begin()->size();
    lrc::Matrix out(f, m, n);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (uint32_t v : row) out.set_raw(i, j++, v);
        ++i;
    }
    return out;
}

// The 6x9 binary parity-check fixture: the bipartite-graph code on K_{3,3}
// with variables x1..x9 in column order. Null space is a [9,4] code.
inline lrc::Matrix fixture_h_9_4() {
    return make_matrix(2, {
                              {1, 0, 0, 1, 0, 0, 1, 0, 0},
                              {0, 1, 0, 0, 1, 0, 0, 1, 0},
                              {0, 0, 1, 0, 0, 1, 0, 0, 1},
                              {1, 0, 0, 0, 1, 0, 0, 0, 1},
                              {0, 1, 0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 1, 1, 0, 0, 0, 1, 0},
                          });
}

// Petersen graph edge list, outer cycle 0..4, spokes, inner pentagram.
inline std::vector<std::pair<int, int>> petersen_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
    return e;
}

inline lrc::Matrix incidence_matrix(int vertices, const std::vector<std::pair<int, int>>& edges) {
    lrc::PrimeField f2(2);
    lrc::Matrix h(f2, vertices, edges.size());
    for (size_t j = 0; j < edges.size(); ++j) {
        h.set_raw(edges[j].first, j, 1);
        h.set_raw(edges[j].second, j, 1);
    }
    return h;
}

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace testutil
