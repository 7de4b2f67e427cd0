#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/matrix.hpp"
#include "lrc/poly.hpp"

namespace lrc {

// Evaluation point set A, ordered block by block: full multiplicative cosets
// of the order-block_size subgroup first, then one final block that is a
// subset of a further coset (the whole coset when block_size | n).
struct EvaluationPartition {
    PrimeField field;
    std::vector<FieldElement> points;    // |points| = n, in block order
    std::vector<size_t> block_offsets;   // m+1 entries; block b = [off[b], off[b+1])
    size_t block_size;                   // full-coset size

    size_t n() const { return points.size(); }
    size_t m() const { return block_offsets.size() - 1; }
    size_t short_size() const { return block_offsets[m()] - block_offsets[m() - 1]; }

    size_t block_of(size_t index) const {
        for (size_t b = 0; b + 1 < block_offsets.size(); ++b)
            if (index < block_offsets[b + 1]) return b;
        throw std::out_of_range("point index outside partition");
    }

    std::vector<FieldElement> block_points(size_t b) const {
        return {points.begin() + block_offsets[b], points.begin() + block_offsets[b + 1]};
    }
};

// Coset partition of n points: (one deterministic choice of) generator w of
// the order-block_size subgroup H, cosets enumerated by smallest fresh
// representative, elements in rep * w^i order. The last block takes the
// first s = n mod block_size elements of its coset (s = block_size when the
// remainder is 0; a remainder of 1 is rejected, no construction admits a
// 1-point block).
inline EvaluationPartition coset_partition(const PrimeField& f, size_t block_size, size_t n) {
    uint32_t p = f.modulus();
    if (block_size < 2) throw std::invalid_argument("block size must be >= 2");
    if ((p - 1) % block_size != 0)
        throw std::invalid_argument("block size must divide p-1");
    if (n > p - 1) throw std::invalid_argument("need n <= p-1 evaluation points");
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (n % block_size == 1) throw std::invalid_argument("n mod block_size = 1 is not usable");

    FieldElement w = element_of_order(f, static_cast<uint32_t>(block_size));
    std::vector<FieldElement> subgroup;
    FieldElement cur = f.one();
    for (size_t i = 0; i < block_size; ++i) {
        subgroup.push_back(cur);
        cur = cur * w;
    }

    EvaluationPartition part{f, {}, {0}, block_size};
    std::unordered_set<uint32_t> covered;
    size_t s = n % block_size == 0 ? block_size : n % block_size;
    size_t full_blocks = (n - s) / block_size;

    uint32_t rep = 1;
    for (size_t b = 0; b * block_size < n; ++b) {
        while (covered.count(rep)) ++rep;
        FieldElement r = f.element(rep);
        size_t take = b < full_blocks ? block_size : s;
        for (size_t i = 0; i < block_size; ++i) {
            FieldElement x = r * subgroup[i];
            covered.insert(x.value());
            if (i < take) part.points.push_back(x);
        }
        part.block_offsets.push_back(part.points.size());
    }
    return part;
}

// The good polynomial g(x) = x^block_size - c with c chosen so that g
// vanishes on the final block; g is constant on every block with pairwise
// distinct block values, and 1, g, ..., g^(m-1) span the block-constant
// polynomial algebra on A.
struct GoodPolyAlgebra {
    EvaluationPartition part;
    Poly g;
    std::vector<FieldElement> block_values;  // g(A_b)
    std::vector<size_t> degree_profile;      // d_i = i * deg(g)

    size_t block_degree() const { return part.block_size; }
};

inline GoodPolyAlgebra good_polynomial(EvaluationPartition part) {
    const PrimeField& f = part.field;
    size_t bs = part.block_size;
    uint64_t e = bs;

    FieldElement c = part.points[part.block_offsets[part.m() - 1]].pow(e);
    Poly g = Poly::monomial(f.one(), bs) - Poly::constant(c);

    std::vector<FieldElement> values;
    for (size_t b = 0; b < part.m(); ++b) {
        FieldElement val = part.points[part.block_offsets[b]].pow(e) - c;
        for (const auto& x : part.block_points(b))
            if (g(x) != val) throw std::logic_error("good polynomial not constant on a block");
        values.push_back(val);
    }
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j])
                throw std::logic_error("good polynomial block values collide");
    if (!values.back().is_zero())
        throw std::logic_error("good polynomial must vanish on the final block");

    std::vector<size_t> profile;
    for (size_t i = 0; i < part.m(); ++i) profile.push_back(i * bs);
    return GoodPolyAlgebra{std::move(part), std::move(g), std::move(values), std::move(profile)};
}

// The m x m evaluation matrix [ g(A_b)^j ]; invertible exactly when the
// powers of g span the block-constant algebra.
inline Matrix basis_matrix(const GoodPolyAlgebra& alg) {
    size_t m = alg.part.m();
    Matrix out(alg.part.field, m, m);
    for (size_t b = 0; b < m; ++b)
        for (size_t j = 0; j < m; ++j) out.set(b, j, alg.block_values[b].pow(j));
    return out;
}

}  // namespace lrc
