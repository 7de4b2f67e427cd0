#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

// Loud failure for exceeded enumeration guards; no silent sampling ever
// substitutes for an exhaustive claim.
class guard_error : public std::runtime_error {
  public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// q^k clamped to 2^63.
inline uint64_t codeword_count(uint64_t q, size_t k) {
    uint64_t out = 1;
    for (size_t i = 0; i < k; ++i) {
        if (out > (uint64_t(1) << 63) / q) return uint64_t(1) << 63;
        out *= q;
    }
    return out;
}

namespace detail {

inline int gray_sweep_gf2(const Matrix& basis, uint64_t* swept) {
    size_t k = basis.rows(), n = basis.cols();
    size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(k * words, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j)
            if (basis.raw(i, j)) rows[i * words + j / 64] |= uint64_t(1) << (j % 64);

    std::vector<uint64_t> cur(words, 0);
    int best = int(n) + 1;
    for (uint64_t i = 1; i < (uint64_t(1) << k); ++i) {
        size_t flip = size_t(std::countr_zero(i));
        int weight = 0;
        for (size_t w = 0; w < words; ++w) {
            cur[w] ^= rows[flip * words + w];
            weight += std::popcount(cur[w]);
        }
        if (weight < best) best = weight;
    }
    if (swept) *swept += (uint64_t(1) << k) - 1;
    return best;
}

inline int odometer_sweep(const Matrix& basis, uint64_t* swept) {
    size_t k = basis.rows(), n = basis.cols();
    uint32_t q = basis.field().modulus();
    std::vector<uint32_t> cur(n, 0);
    std::vector<uint32_t> digits(k, 0);
    int best = int(n) + 1;
    uint64_t total = codeword_count(q, k) - 1;
    for (uint64_t step = 0; step < total; ++step) {
        // lexicographic odometer; a wrap from q-1 to 0 re-adds the row once
        // more, which is a no-op mod q, so each carry adds its row too
        size_t pos = 0;
        while (digits[pos] == q - 1) {
            digits[pos] = 0;
            for (size_t j = 0; j < n; ++j) {
                uint32_t s = cur[j] + basis.raw(pos, j);
                cur[j] = s >= q ? s - q : s;
            }
            ++pos;
        }
        ++digits[pos];
        int weight = 0;
        for (size_t j = 0; j < n; ++j) {
            uint32_t s = cur[j] + basis.raw(pos, j);
            cur[j] = s >= q ? s - q : s;
            if (cur[j]) ++weight;
        }
        if (weight < best) best = weight;
    }
    if (swept) *swept += total;
    return best;
}

}  // namespace detail

// Exact minimum Hamming weight over all nonzero codewords, enumerated via
// the generator matrix: Gray-code order over GF(2), lexicographic order
// over GF(p). Row-reduces first so rank-deficient generators are swept over
// distinct codewords only.
inline int brute_min_distance(const LinearCode& code, uint64_t guard = uint64_t(1) << 24,
                              uint64_t* swept = nullptr) {
    Matrix basis = code.basis();
    size_t k = basis.rows();
    if (k == 0) throw std::invalid_argument("zero code has no minimum distance");
    uint64_t q = code.field().modulus();
    if (codeword_count(q, k) > guard)
        throw guard_error("distance sweep guard exceeded: q^k = " +
                          std::to_string(codeword_count(q, k)) + " > " + std::to_string(guard));
    if (q == 2) return detail::gray_sweep_gf2(basis, swept);
    return detail::odometer_sweep(basis, swept);
}

// Exact minimum distance via the parity-check matrix: d is the smallest
// number of linearly dependent columns of H, found by exhausting supports
// of increasing size. Independent of the generator sweep; preferred when
// q^k is out of reach but d (hence the support sizes to scan) is small.
inline int support_min_distance(const LinearCode& code, uint64_t work_guard = 200000000,
                                uint64_t* tested = nullptr) {
    const Matrix& h = code.parity_check();
    size_t n = h.cols(), t = h.rows();
    if (code.dimension() == 0) throw std::invalid_argument("zero code has no minimum distance");
    uint64_t work = 0;
    std::vector<size_t> comb;
    for (size_t w = 1; w <= t + 1; ++w) {
        comb.assign(w, 0);
        for (size_t i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            work += t * w * w;
            if (work > work_guard) throw guard_error("support sweep guard exceeded");
            if (tested) ++*tested;
            Matrix sub(h.field(), t, w);
            for (size_t c = 0; c < w; ++c)
                for (size_t r0 = 0; r0 < t; ++r0) sub.set(r0, c, h.at(r0, comb[c]));
            if (rank(sub) < w) return int(w);
            // next combination in lexicographic order
            size_t i = w;
            while (i > 0 && comb[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return int(t + 1);  // t+1 columns of a rank-t matrix are always dependent
}

namespace detail {

// True when column `target` of G lies in the span of the columns `T`.
inline bool column_in_span(const Matrix& g, const std::vector<size_t>& T, size_t target) {
    size_t k = g.rows();
    Matrix sub(g.field(), k, T.size() + 1);
    for (size_t c = 0; c < T.size(); ++c)
        for (size_t r0 = 0; r0 < k; ++r0) sub.set(r0, c, g.at(r0, T[c]));
    for (size_t r0 = 0; r0 < k; ++r0) sub.set(r0, T.size(), g.at(r0, target));
    Echelon e = row_reduce(sub);
    for (size_t c : e.pivot_cols)
        if (c == T.size()) return false;
    return true;
}

template <typename Fn>
void for_each_subset(size_t n, size_t w, size_t skip, Fn&& fn) {
    // ordered w-subsets of [0, n) \ {skip}, lexicographic
    std::vector<size_t> comb(w);
    std::vector<size_t> pool;
    pool.reserve(n - 1);
    for (size_t j = 0; j < n; ++j)
        if (j != skip) pool.push_back(j);
    if (w > pool.size()) return;
    std::vector<size_t> idx(w);
    for (size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        for (size_t i = 0; i < w; ++i) comb[i] = pool[idx[i]];
        if (fn(comb)) return;
        size_t i = w;
        while (i > 0 && idx[i - 1] == pool.size() - w + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Per-coordinate minimal helper count: profile[i] is the least r' <= cap
// such that coordinate i is a combination of r' other coordinates on every
// codeword (equivalently, some dual codeword of weight <= r'+1 covers i);
// -1 when no such r' <= cap exists.
inline std::vector<int> locality_profile(const LinearCode& code, int cap,
                                         uint64_t* supports_tested = nullptr) {
    if (cap < 0 || cap > 6) throw std::invalid_argument("locality cap must be in [0, 6]");
    const Matrix& g = code.generator();
    size_t n = g.cols();
    std::vector<int> profile(n, -1);
    for (size_t i = 0; i < n; ++i) {
        for (int w = 0; w <= cap && profile[i] < 0; ++w) {
            detail::for_each_subset(n, size_t(w), i, [&](const std::vector<size_t>& T) {
                if (supports_tested) ++*supports_tested;
                if (detail::column_in_span(g, T, i)) {
                    profile[i] = w;
                    return true;
                }
                return false;
            });
        }
    }
    return profile;
}

// One repair set: a dual codeword through coordinate `target`, stored
// sparsely as (position, coefficient) with the target first.
struct DualWitness {
    size_t target;
    std::vector<std::pair<size_t, FieldElement>> entries;

    std::vector<size_t> helpers() const {
        std::vector<size_t> out;
        for (const auto& [pos, c] : entries)
            if (pos != target) out.push_back(pos);
        return out;
    }
};

struct AvailabilityResult {
    bool ok;
    // t pairwise-disjoint witnesses per coordinate when ok
    std::vector<std::vector<DualWitness>> witnesses;
};

namespace detail {

// Explicit dual codeword supported in T ∪ {target}, nonzero at target.
inline std::optional<DualWitness> dual_word_through(const Matrix& g, const std::vector<size_t>& T,
                                                    size_t target) {
    size_t k = g.rows();
    const PrimeField& f = g.field();
    // solve G_T z = -G_target
    Matrix sys(f, k, T.size() + 1);
    for (size_t c = 0; c < T.size(); ++c)
        for (size_t r0 = 0; r0 < k; ++r0) sys.set(r0, c, g.at(r0, T[c]));
    for (size_t r0 = 0; r0 < k; ++r0) sys.set(r0, T.size(), -g.at(r0, target));
    Echelon e = row_reduce(std::move(sys));
    for (size_t c : e.pivot_cols)
        if (c == T.size()) return std::nullopt;
    DualWitness w{target, {{target, f.one()}}};
    for (size_t r0 = 0; r0 < e.rank; ++r0) {
        FieldElement coef = e.rref.at(r0, T.size());
        if (!coef.is_zero()) w.entries.push_back({T[e.pivot_cols[r0]], coef});
    }
    return w;
}

inline bool disjoint_apart_from_target(const DualWitness& a, const DualWitness& b) {
    for (const auto& [pa, ca] : a.entries) {
        if (pa == a.target) continue;
        for (const auto& [pb, cb] : b.entries)
            if (pb != b.target && pa == pb) return false;
    }
    return true;
}

inline bool pick_disjoint(const std::vector<DualWitness>& cands, size_t need,
                          std::vector<DualWitness>& chosen) {
    if (chosen.size() == need) return true;
    for (const auto& c : cands) {
        bool ok = true;
        for (const auto& have : chosen)
            if (!disjoint_apart_from_target(have, c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(c);
        if (pick_disjoint(cands, need, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// Availability check: for every coordinate, find t dual codewords of weight
// <= r+1 through it whose supports meet only at the coordinate.
inline AvailabilityResult availability_check(const LinearCode& code, int r, int t) {
    if (r < 0 || r > 6) throw std::invalid_argument("helper cap must be in [0, 6]");
    if (t < 1) throw std::invalid_argument("availability must be >= 1");
    const Matrix& g = code.generator();
    size_t n = g.cols();
    AvailabilityResult out{true, {}};
    out.witnesses.resize(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<DualWitness> cands;
        std::vector<std::vector<size_t>> seen_supports;
        for (int w = 0; w <= r; ++w) {
            detail::for_each_subset(n, size_t(w), i, [&](const std::vector<size_t>& T) {
                auto dw = detail::dual_word_through(g, T, i);
                if (dw) {
                    std::vector<size_t> sup = dw->helpers();
                    std::sort(sup.begin(), sup.end());
                    bool minimal = true;
                    for (const auto& prev : seen_supports)
                        if (std::includes(sup.begin(), sup.end(), prev.begin(), prev.end())) {
                            minimal = false;
                            break;
                        }
                    if (minimal) {
                        seen_supports.push_back(sup);
                        cands.push_back(std::move(*dw));
                    }
                }
                return false;
            });
        }
        std::vector<DualWitness> chosen;
        if (detail::pick_disjoint(cands, size_t(t), chosen)) {
            out.witnesses[i] = std::move(chosen);
        } else {
            out.ok = false;
        }
    }
    return out;
}

// Claims to verify a code against.
struct CodeClaims {
    std::string identity;
    int expected_k;
    int d_lower;                            // claimed lower bound on d
    int locality;                           // claimed locality (helper cap)
    int availability = 0;                   // 0: no availability claim
    std::optional<LrcParams> bound_params;  // enables distance upper-bound checks
};

struct VerificationReport {
    std::string identity;
    int n = 0;
    int k_measured = 0;
    int d_measured = 0;
    bool d_by_generator_sweep = true;
    int claimed_k = 0, claimed_d_lower = 0, claimed_locality = 0, claimed_availability = 0;
    std::vector<int> locality;
    std::optional<int> gopalan, improved, ip;
    bool pass_dimension = false, pass_distance_lower = false, pass_distance_upper = false,
         pass_locality = false, pass_availability = true;
    uint64_t codewords_swept = 0, supports_tested = 0;

    bool pass() const {
        return pass_dimension && pass_distance_lower && pass_distance_upper && pass_locality &&
               pass_availability;
    }

    std::string to_kv() const {
        std::ostringstream os;
        os << "identity=" << identity << "\nn=" << n << "\nk=" << k_measured
           << "\nd=" << d_measured
           << "\nd_method=" << (d_by_generator_sweep ? "generator-sweep" : "support-enumeration")
           << "\nclaimed_k=" << claimed_k << "\nclaimed_d_lower=" << claimed_d_lower
           << "\nclaimed_locality=" << claimed_locality
           << "\nclaimed_availability=" << claimed_availability << "\nlocality_profile=";
        for (size_t i = 0; i < locality.size(); ++i) os << (i ? " " : "") << locality[i];
        os << "\ngopalan=" << (gopalan ? std::to_string(*gopalan) : "na")
           << "\nimproved=" << (improved ? std::to_string(*improved) : "na")
           << "\nip=" << (ip ? std::to_string(*ip) : "na")
           << "\npass_dimension=" << (pass_dimension ? "yes" : "no")
           << "\npass_distance_lower=" << (pass_distance_lower ? "yes" : "no")
           << "\npass_distance_upper=" << (pass_distance_upper ? "yes" : "no")
           << "\npass_locality=" << (pass_locality ? "yes" : "no")
           << "\npass_availability=" << (pass_availability ? "yes" : "no")
           << "\ncodewords_swept=" << codewords_swept << "\nsupports_tested=" << supports_tested
           << "\nverdict=" << (pass() ? "pass" : "fail") << "\n";
        return os.str();
    }

    static std::string csv_header() {
        return "identity,n,k,d,d_method,claimed_k,claimed_d_lower,claimed_locality,"
               "claimed_availability,verdict";
    }

    std::string csv_row() const {
        std::ostringstream os;
        os << identity << ',' << n << ',' << k_measured << ',' << d_measured << ','
           << (d_by_generator_sweep ? "generator-sweep" : "support-enumeration") << ',' << claimed_k
           << ',' << claimed_d_lower << ',' << claimed_locality << ',' << claimed_availability
           << ',' << (pass() ? "pass" : "fail");
        return os.str();
    }
};

// Bind the oracles together: measure (n, k, d) and the locality profile,
// compare against the claims and every applicable bound. Failures are
// report content, not errors. Falls back from the generator sweep to the
// support-enumeration oracle when q^k exceeds the sweep guard.
inline VerificationReport cross_check(const LinearCode& code, const CodeClaims& claims,
                                      uint64_t sweep_guard = uint64_t(1) << 24) {
    VerificationReport rep;
    rep.identity = claims.identity;
    rep.n = int(code.length());
    rep.k_measured = int(code.dimension());
    rep.claimed_k = claims.expected_k;
    rep.claimed_d_lower = claims.d_lower;
    rep.claimed_locality = claims.locality;
    rep.claimed_availability = claims.availability;

    if (codeword_count(code.field().modulus(), code.dimension()) <= sweep_guard) {
        rep.d_measured = brute_min_distance(code, sweep_guard, &rep.codewords_swept);
        rep.d_by_generator_sweep = true;
    } else {
        rep.d_measured = support_min_distance(code, 200000000, &rep.codewords_swept);
        rep.d_by_generator_sweep = false;
    }

    rep.pass_dimension = rep.k_measured == claims.expected_k;
    rep.pass_distance_lower = rep.d_measured >= claims.d_lower;

    rep.pass_distance_upper = true;
    if (claims.bound_params) {
        rep.gopalan = gopalan_bound(*claims.bound_params);
        rep.improved = improved_bound(*claims.bound_params);
        if (claims.bound_params->n1() <= 8 && claims.bound_params->n2() <= 8)
            rep.ip = ip_distance_bound(*claims.bound_params);
        for (const auto& b : {rep.gopalan, rep.improved, rep.ip})
            if (b && rep.d_measured > *b) rep.pass_distance_upper = false;
    }

    rep.locality = locality_profile(code, claims.locality, &rep.supports_tested);
    rep.pass_locality = true;
    for (int l : rep.locality)
        if (l < 0) rep.pass_locality = false;

    if (claims.availability > 0)
        rep.pass_availability = availability_check(code, claims.locality, claims.availability).ok;

    return rep;
}

}  // namespace lrc
