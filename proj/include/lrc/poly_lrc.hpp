#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/partition.hpp"

namespace lrc {

enum class LrcKind { tamo_barg, modified };

inline const char* kind_name(LrcKind k) { return k == LrcKind::tamo_barg ? "tamo-barg" : "modified"; }

// One message slot: the monomial g^j * x^i (plain) or g^j * x^(i-s) * h
// (annihilator family, h = annihilator of the final block). Both have
// global degree j * deg(g) + i, and collapse to an in-block degree of i on
// full blocks.
struct Slot {
    int i = 0;
    int j = 0;
    bool with_annihilator = false;

    size_t degree(size_t block_degree) const { return size_t(j) * block_degree + size_t(i); }
};

// An evaluation LRC: codewords are evaluations of message-weighted sums of
// the slot monomials on the partitioned point set.
struct LrcCode {
    LrcKind kind;
    int n, k, r;
    GoodPolyAlgebra algebra;
    std::vector<Slot> slots;          // message index -> slot, lexicographic in (i, j)
    Matrix generator;                 // k x n, full rank
    size_t degree_cap;                // every encoding polynomial has degree <= this
    std::vector<size_t> block_caps;   // structural in-block degree bound per block

    const PrimeField& field() const { return algebra.part.field; }

    int claimed_locality() const { return kind == LrcKind::tamo_barg ? r : r - 1; }

    std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const {
        return generator.left_mul(message);
    }
};

namespace detail {

inline Matrix slot_generator(const GoodPolyAlgebra& alg, const std::vector<Slot>& slots) {
    const PrimeField& f = alg.part.field;
    size_t n = alg.part.n();
    size_t s = alg.part.short_size();

    Poly h = annihilator(f, alg.part.block_points(alg.part.m() - 1));
    std::vector<FieldElement> gval, hval;
    gval.reserve(n);
    hval.reserve(n);
    for (const auto& x : alg.part.points) {
        gval.push_back(alg.g(x));
        hval.push_back(h(x));
    }

    Matrix gen(f, slots.size(), n);
    for (size_t row = 0; row < slots.size(); ++row) {
        const Slot& sl = slots[row];
        size_t xpow = sl.with_annihilator ? size_t(sl.i) - s : size_t(sl.i);
        for (size_t c = 0; c < n; ++c) {
            FieldElement v = gval[c].pow(sl.j) * alg.part.points[c].pow(xpow);
            if (sl.with_annihilator) v = v * hval[c];
            gen.set(row, c, v);
        }
    }
    return gen;
}

inline std::vector<size_t> block_degree_caps(const EvaluationPartition& part,
                                             const std::vector<Slot>& slots) {
    // In-block degree: a slot contributes x^i on full blocks (g constant,
    // annihilator-family terms have degree (i-s)+s = i). On the final block
    // g vanishes (kills j >= 1) and h vanishes (kills the annihilator
    // family), leaving plain slots with j = 0.
    std::vector<size_t> caps(part.m(), 0);
    for (const Slot& sl : slots) {
        for (size_t b = 0; b + 1 < part.m(); ++b) caps[b] = std::max(caps[b], size_t(sl.i));
        if (!sl.with_annihilator && sl.j == 0) caps[part.m() - 1] = std::max(caps[part.m() - 1], size_t(sl.i));
    }
    return caps;
}

// Shared assembly: order slots lexicographically by (i, j), build the
// generator, and check the construction-level invariants.
inline LrcCode assemble(LrcKind kind, int n, int k, int r, GoodPolyAlgebra alg,
                        std::vector<Slot> slots, size_t degree_cap) {
    if (slots.size() != size_t(k)) throw std::logic_error("slot layout does not have k slots");
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const Slot& sl : slots)
        if (sl.degree(alg.block_degree()) > degree_cap)
            throw std::logic_error("slot exceeds the construction degree cap");
    if (degree_cap >= size_t(n))
        throw std::invalid_argument("degree cap reaches n; parameters leave no distance");

    Matrix gen = slot_generator(alg, slots);
    if (rank(gen) != size_t(k)) throw std::logic_error("generator matrix is rank deficient");
    std::vector<size_t> caps = block_degree_caps(alg.part, slots);
    return LrcCode{kind, n, k, r, std::move(alg), std::move(slots), std::move(gen), degree_cap,
                   std::move(caps)};
}

}  // namespace detail

// Test/advanced entry point: build an evaluation code from an explicit slot
// list over a prepared algebra.
inline LrcCode make_evaluation_code(LrcKind kind, int r, GoodPolyAlgebra alg,
                                    std::vector<Slot> slots, size_t degree_cap) {
    return detail::assemble(kind, int(alg.part.n()), int(slots.size()), r, std::move(alg),
                            std::move(slots), degree_cap);
}

// Construction with blocks of size r+1 and a final block of size
// s = n mod (r+1), s not in {0, 1}; requires r | k+1. Slots: g^j x^i for
// i <= s-2, the x^(s-1) column with j >= 1 only, and g^j x^(i-s) h for
// s <= i <= r-1, j <= (k+1)/r - 1. Locality r; d >= n - k - ceil(k/r) + 1.
inline LrcCode make_tamo_barg(const PrimeField& f, int n, int k, int r) {
    LrcParams params(n, k, r);  // validates 1 <= r < k < n
    if (r < 2) throw std::invalid_argument("construction needs r >= 2");
    if ((k + 1) % r != 0)
        throw std::invalid_argument("construction requires r | k+1");
    int s = n % (r + 1);
    if (s == 0 || s == 1)
        throw std::invalid_argument("construction requires n mod (r+1) != 0, 1");

    int slots_per_column = (k + 1) / r;
    GoodPolyAlgebra alg = good_polynomial(coset_partition(f, size_t(r) + 1, size_t(n)));

    std::vector<Slot> slots;
    for (int i = 0; i <= s - 2; ++i)
        for (int j = 0; j < slots_per_column; ++j) slots.push_back({i, j, false});
    for (int j = 1; j < slots_per_column; ++j) slots.push_back({s - 1, j, false});
    for (int i = s; i <= r - 1; ++i)
        for (int j = 0; j < slots_per_column; ++j) slots.push_back({i, j, true});

    size_t cap = size_t(k) + size_t(slots_per_column) - 1;
    return detail::assemble(LrcKind::tamo_barg, n, k, r, std::move(alg), std::move(slots), cap);
}

// Modified construction: blocks of size r, final block of size
// s = r - (n2 - n1) > 1, requiring n1 <= n2 and u + v <= s. The printed
// slot ranges of the source recipe over- or under-count; the layout used
// here keeps the recipe's slot families (plain columns i <= s-1 with the
// (s-1, 0) slot excluded, annihilator columns s <= i <= r-1 with j <= u-1)
// and takes the k lowest-degree slots, which keeps every encoding
// polynomial at degree <= k + u - 1 and the final block repairable from
// s - 1 helpers. Claimed locality r-1; d >= n - k - u + 1.
inline LrcCode make_modified(const PrimeField& f, int n, int k, int r) {
    LrcParams params(n, k, r);
    if (r < 2) throw std::invalid_argument("construction needs r >= 2");
    int n1 = params.n1(), n2 = params.n2();
    if (n1 > n2) throw std::invalid_argument("construction requires n1 <= n2");
    int s = r - (n2 - n1);
    if (s <= 1) throw std::invalid_argument("construction requires a final block of size > 1");
    int u = params.u(), v = params.v();
    if (u + v > s)
        throw std::invalid_argument("construction requires u + v <= final block size");

    GoodPolyAlgebra alg = good_polynomial(coset_partition(f, size_t(r), size_t(n)));
    if (alg.part.m() != size_t(n1) || alg.part.short_size() != size_t(s))
        throw std::logic_error("partition shape disagrees with parameters");

    std::vector<Slot> avail;
    for (int j = 0; j <= u; ++j)
        for (int i = 0; i <= s - 1; ++i)
            if (!(i == s - 1 && j == 0)) avail.push_back({i, j, false});
    for (int j = 0; j <= u - 1; ++j)
        for (int i = s; i <= r - 1; ++i) avail.push_back({i, j, true});

    std::sort(avail.begin(), avail.end(), [r](const Slot& a, const Slot& b) {
        return a.degree(size_t(r)) < b.degree(size_t(r));
    });
    if (avail.size() < size_t(k)) throw std::logic_error("slot family smaller than k");
    avail.resize(size_t(k));

    size_t cap = size_t(k) + size_t(u) - 1;
    return detail::assemble(LrcKind::modified, n, k, r, std::move(alg), std::move(avail), cap);
}

inline Matrix generator_matrix(const LrcCode& code) { return code.generator; }

struct RepairResult {
    bool ok;  // certified: the block's structural degree cap admits repair
    FieldElement value;
};

// Repair a single erased coordinate from the surviving points of its block:
// interpolate the |B|-1 helpers and re-evaluate at the erased point. The
// result is certified exactly when the block's structural in-block degree
// cap is at most |B|-2; an interpolation degree above the cap is reported
// as failed.
inline RepairResult local_repair(const LrcCode& code,
                                 const std::vector<std::optional<FieldElement>>& word) {
    const EvaluationPartition& part = code.algebra.part;
    if (word.size() != part.n()) throw std::invalid_argument("word length mismatch");
    std::optional<size_t> erased;
    for (size_t idx = 0; idx < word.size(); ++idx) {
        if (!word[idx].has_value()) {
            if (erased) throw std::invalid_argument("local repair handles exactly one erasure");
            erased = idx;
        }
    }
    if (!erased) throw std::invalid_argument("no erased position");

    size_t b = part.block_of(*erased);
    size_t lo = part.block_offsets[b], hi = part.block_offsets[b + 1];
    std::vector<std::pair<FieldElement, FieldElement>> helpers;
    for (size_t idx = lo; idx < hi; ++idx)
        if (idx != *erased) helpers.push_back({part.points[idx], *word[idx]});
    if (helpers.empty()) throw std::invalid_argument("block has no helpers");

    Poly rec = interpolate(part.field, helpers);
    FieldElement value = rec(part.points[*erased]);
    size_t cap = code.block_caps[b];
    bool certified = cap + 2 <= hi - lo && size_t(std::max(rec.degree(), 0)) <= cap;
    return RepairResult{certified, value};
}

// Smallest prime p with p = 1 (mod block_size) and p - 1 >= n, so the field
// admits an order-block_size subgroup and n evaluation points.
inline PrimeField smallest_field(int block_size, int n) {
    if (block_size < 1 || n < 1) throw std::invalid_argument("bad field search parameters");
    for (uint64_t p = uint64_t(block_size) + 1;; p += block_size) {
        if (p < uint64_t(n) + 1) continue;
        if (p >= (uint64_t(1) << 31))
            throw std::invalid_argument("no admissible prime below 2^31");
        if (is_prime_u32(uint32_t(p))) return PrimeField(uint32_t(p));
    }
}

}  // namespace lrc
