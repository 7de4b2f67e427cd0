#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// Parameter triple of a locally repairable code, with the derived
// quantities n1 = ceil(n/(r+1)), n2 = n1(r+1) - n and k = u*r + v.
struct LrcParams {
    int n, k, r;

    LrcParams(int n_, int k_, int r_) : n(n_), k(k_), r(r_) {
        if (!(1 <= r && r < k && k < n))
            throw std::invalid_argument("LRC parameters require 1 <= r < k < n");
    }

    int n1() const { return (n + r) / (r + 1); }
    int n2() const { return n1() * (r + 1) - n; }
    int u() const { return k / r; }
    int v() const { return k % r; }
};

// d <= n - k + 1 - (ceil(k/r) - 1). Accepts r >= k as well, where the
// penalty collapses and the value degenerates to Singleton.
inline int gopalan_bound(int n, int k, int r) {
    if (!(1 <= k && k < n && r >= 1)) throw std::invalid_argument("need 1 <= k < n, r >= 1");
    int ceil_kr = (k + r - 1) / r;
    return n - k + 1 - (ceil_kr - 1);
}

inline int gopalan_bound(const LrcParams& p) { return gopalan_bound(p.n, p.k, p.r); }

// One maximizing outer candidate of the min-max program, together with the
// attained value.
struct IpWitness {
    int x = 0;
    int r = 0;
    std::vector<int> t, a;
    int value = 0;
};

// Inner minimization for a fixed outer candidate (t, a): over all index
// sequences h_1..h_l of distinct parts with t_{h_1}+...+t_{h_{l-1}} < x <=
// t_{h_1}+...+t_{h_l}, minimize x*r + 1 - sum_{i<l} (a_{h_i} - t_{h_i}).
// Only the set of the first l-1 indices and the existence of a feasible
// last index matter, so subsets suffice.
inline int psi_inner_min(int x, int r, const std::vector<int>& t, const std::vector<int>& a) {
    int s = static_cast<int>(t.size());
    if (s <= 0 || s > 30 || a.size() != t.size())
        throw std::invalid_argument("bad inner-minimization candidate");
    int best_pen = std::numeric_limits<int>::min();
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
        int sum = 0, pen = 0;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1) {
                sum += t[i];
                pen += a[i] - t[i];
            }
        if (sum >= x) continue;
        bool closable = false;
        for (int j = 0; j < s && !closable; ++j)
            if (!(mask >> j & 1) && sum + t[j] >= x) closable = true;
        if (closable && pen > best_pen) best_pen = pen;
    }
    if (best_pen == std::numeric_limits<int>::min())
        throw std::logic_error("no feasible index sequence");  // impossible: sum t_i = n1 >= x
    return x * r + 1 - best_pen;
}

namespace detail {

template <typename Fn>
void for_each_composition(int total, int parts, std::vector<int>& buf, int min_part, Fn&& fn) {
    if (parts == 1) {
        if (total >= min_part) {
            buf.push_back(total);
            fn(buf);
            buf.pop_back();
        }
        return;
    }
    for (int first = min_part; first <= total - min_part * (parts - 1); ++first) {
        buf.push_back(first);
        for_each_composition(total - first, parts - 1, buf, min_part, fn);
        buf.pop_back();
    }
}

}  // namespace detail

// Exact value of Psi(x) by exhaustive enumeration of the outer candidates
// (s, t_1..t_s, a_1..a_s) with sum t = n1, sum a = n2, a_i >= t_i - 1,
// t_i >= 1. Guarded to n1, n2 <= 8.
inline IpWitness psi_bruteforce(int x, int n1, int n2, int r) {
    if (n1 < 1 || n2 < 0 || r < 1) throw std::invalid_argument("need n1 >= 1, n2 >= 0, r >= 1");
    if (x < 1 || x > n1) throw std::invalid_argument("x out of range [1, n1]");
    if (n1 > 8 || n2 > 8) throw std::invalid_argument("enumeration guard exceeded (n1, n2 <= 8)");

    IpWitness best;
    best.x = x;
    best.r = r;
    best.value = std::numeric_limits<int>::min();

    std::vector<int> t;
    for (int s = 1; s <= n1; ++s) {
        detail::for_each_composition(n1, s, t, 1, [&](const std::vector<int>& tt) {
            // a_i = (t_i - 1) + e_i with e_i >= 0 and sum e = n2 - n1 + s.
            int residue = n2 - (n1 - s);
            if (residue < 0) return;
            std::vector<int> e;
            detail::for_each_composition(residue, s, e, 0, [&](const std::vector<int>& ee) {
                std::vector<int> aa(s);
                for (int i = 0; i < s; ++i) aa[i] = tt[i] - 1 + ee[i];
                int val = psi_inner_min(x, r, tt, aa);
                if (val > best.value) {
                    best.t = tt;
                    best.a = aa;
                    best.value = val;
                }
            });
        });
    }
    return best;
}

// Closed form Psi(x) = x*r + 1, valid whenever n1 <= n2.
inline int psi_closed(int x, int r) {
    if (x < 1 || r < 1) throw std::invalid_argument("need x >= 1, r >= 1");
    return x * r + 1;
}

// d <= n - k + 1 - eta with eta = max{ x : Psi(x) - x < k }, Psi evaluated
// exactly by enumeration; eta = 0 when no x qualifies.
inline int ip_distance_bound(const LrcParams& p) {
    int eta = 0;
    for (int x = 1; x <= p.n1(); ++x) {
        IpWitness w = psi_bruteforce(x, p.n1(), p.n2(), p.r);
        if (w.value - x < p.k) eta = x > eta ? x : eta;
    }
    return p.n - p.k + 1 - eta;
}

// d <= n - k + 1 - (ceil((k-1)/(r-1)) - 1), proven for n1 <= n2; returns
// nullopt outside that regime. r = 1 cannot reach the applicable regime:
// it forces n2 <= 1 < n1 for every valid triple.
inline std::optional<int> improved_bound(const LrcParams& p) {
    if (p.n1() > p.n2() || p.r < 2) return std::nullopt;
    int ceil_term = (p.k - 1 + p.r - 2) / (p.r - 1);
    return p.n - p.k + 1 - (ceil_term - 1);
}

enum class PiecewiseCase { uv_small, uv_large };  // u+v <= r vs u+v > r

struct PiecewiseBound {
    PiecewiseCase pcase;
    int value;
};

// Case analysis of the improved bound in terms of k = u*r + v. Emitted only
// for u+v >= 2: for (u >= 1, v = 0) the ceiling identity behind the split
// fails, and the ceiling form alone is authoritative. The value is always
// derived from the ceiling form.
inline std::optional<PiecewiseBound> improved_piecewise(const LrcParams& p) {
    std::optional<int> b = improved_bound(p);
    if (!b || p.u() + p.v() < 2) return std::nullopt;
    return PiecewiseBound{p.u() + p.v() <= p.r ? PiecewiseCase::uv_small : PiecewiseCase::uv_large,
                          *b};
}

// Exact rational, kept reduced with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Rate upper bound for locality r, availability t:
// k/n <= prod_{i=1..t} (i*r) / (i*r + 1).
inline Rational availability_rate_upper(int r, int t) {
    if (r < 1 || t < 1) throw std::invalid_argument("need r >= 1, t >= 1");
    Rational acc(1, 1);
    for (int i = 1; i <= t; ++i) acc = acc * Rational(int64_t(i) * r, int64_t(i) * r + 1);
    return acc;
}

// Rate lower bound 1 - t/(r+1) for codes from (r+1, t)-regular Tanner graphs.
inline Rational regular_rate_lower(int r, int t) {
    if (!(r >= 1 && t >= 1 && t <= r + 1))
        throw std::invalid_argument("need r+1 >= t >= 1");
    return Rational(r + 1 - t, r + 1);
}

// Every bound value for one parameter triple, with applicability notes.
struct BoundReport {
    LrcParams params;
    int gopalan;
    std::optional<int> ip;        // nullopt: enumeration guard exceeded / skipped
    std::optional<int> improved;  // nullopt: not applicable (n1 > n2)
    std::string notes;

    std::string to_kv() const {
        std::ostringstream os;
        os << "n=" << params.n << "\nk=" << params.k << "\nr=" << params.r
           << "\nn1=" << params.n1() << "\nn2=" << params.n2() << "\nu=" << params.u()
           << "\nv=" << params.v() << "\ngopalan=" << gopalan
           << "\nip=" << (ip ? std::to_string(*ip) : "na")
           << "\nimproved=" << (improved ? std::to_string(*improved) : "na")
           << "\napplicable=" << (improved ? "yes" : "no");
        if (!notes.empty()) os << "\nnotes=" << notes;
        os << "\n";
        return os.str();
    }

    static std::string csv_header() { return "n,k,r,n1,n2,gopalan,ip,improved,applicable"; }

    std::string csv_row() const {
        std::ostringstream os;
        os << params.n << ',' << params.k << ',' << params.r << ',' << params.n1() << ','
           << params.n2() << ',' << gopalan << ',' << (ip ? std::to_string(*ip) : "na") << ','
           << (improved ? std::to_string(*improved) : "na") << ','
           << (improved ? "yes" : "no");
        return os.str();
    }
};

inline BoundReport make_bound_report(const LrcParams& p, bool want_ip = true) {
    BoundReport rep{p, gopalan_bound(p), std::nullopt, improved_bound(p), ""};
    if (want_ip) {
        if (p.n1() <= 8 && p.n2() <= 8)
            rep.ip = ip_distance_bound(p);
        else
            rep.notes = "ip skipped: enumeration guard (n1, n2 <= 8)";
    }
    if (!rep.improved) {
        if (!rep.notes.empty()) rep.notes += "; ";
        rep.notes += "improved bound not applicable (n1 > n2)";
    } else if (auto pw = improved_piecewise(p)) {
        if (!rep.notes.empty()) rep.notes += "; ";
        rep.notes += pw->pcase == PiecewiseCase::uv_small ? "piecewise case u+v <= r"
                                                          : "piecewise case u+v > r";
    }
    if (rep.improved && *rep.improved > rep.gopalan)
        throw std::logic_error("improved bound exceeds gopalan bound");
    return rep;
}

}  // namespace lrc
