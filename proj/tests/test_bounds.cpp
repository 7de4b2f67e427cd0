#include <catch2/catch_amalgamated.hpp>

#include "lrc/bounds.hpp"

#include <climits>
#include <functional>
#include <vector>

using namespace lrc;

namespace {

// Independent transcription of the inner minimization: DFS over ordered
// sequences of distinct part indices h_1..h_l with
// t_{h_1}+...+t_{h_{l-1}} < x <= t_{h_1}+...+t_{h_l}.
int inner_min_by_sequences(int x, int r, const std::vector<int>& t, const std::vector<int>& a) {
    int s = static_cast<int>(t.size());
    int best = INT_MAX;
    std::vector<bool> used(s, false);
    std::function<void(int, int)> dfs = [&](int sum, int pen) {
        for (int j = 0; j < s; ++j) {
            if (used[j]) continue;
            if (sum + t[j] >= x) {
                best = std::min(best, x * r + 1 - pen);
            } else {
                used[j] = true;
                dfs(sum + t[j], pen + a[j] - t[j]);
                used[j] = false;
            }
        }
    };
    dfs(0, 0);
    return best;
}

// Full Psi recomputation with the sequence-based inner oracle.
int psi_by_sequences(int x, int n1, int n2, int r) {
    int best = INT_MIN;
    std::function<void(std::vector<int>&, int)> outer = [&](std::vector<int>& t, int left) {
        if (left == 0) {
            int s = static_cast<int>(t.size());
            int residue = n2 - (n1 - s);
            if (residue < 0) return;
            std::vector<int> e(s, 0);
            std::function<void(int, int)> assign = [&](int idx, int rem) {
                if (idx == s - 1) {
                    e[idx] = rem;
                    std::vector<int> a(s);
                    for (int i = 0; i < s; ++i) a[i] = t[i] - 1 + e[i];
                    best = std::max(best, inner_min_by_sequences(x, r, t, a));
                    return;
                }
                for (int give = 0; give <= rem; ++give) {
                    e[idx] = give;
                    assign(idx + 1, rem - give);
                }
            };
            assign(0, residue);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            t.push_back(part);
            outer(t, left - part);
            t.pop_back();
        }
    };
    std::vector<int> t;
    outer(t, n1);
    return best;
}

}  // namespace

TEST_CASE("parameter validation and derived quantities") {
    CHECK_THROWS_AS(LrcParams(9, 9, 3), std::invalid_argument);
    CHECK_THROWS_AS(LrcParams(9, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(LrcParams(9, 4, 0), std::invalid_argument);
    LrcParams p(10, 5, 3);
    CHECK(p.n1() == 3);
    CHECK(p.n2() == 2);
    CHECK(p.u() == 1);
    CHECK(p.v() == 2);
}

TEST_CASE("gopalan bound") {
    CHECK(gopalan_bound(LrcParams(9, 4, 2)) == 5);
    CHECK(gopalan_bound(LrcParams(10, 5, 3)) == 5);
    // r >= k is accepted by the relaxed form and collapses to Singleton
    CHECK(gopalan_bound(10, 4, 4) == 7);
    CHECK(gopalan_bound(10, 4, 9) == 7);
}

TEST_CASE("psi by exhaustive enumeration") {
    SECTION("closed-form instances with n1 <= n2") {
        CHECK(psi_bruteforce(1, 2, 3, 4).value == 5);
        CHECK(psi_bruteforce(2, 3, 3, 3).value == 7);
    }
    SECTION("psi can exceed x*r+1 when n1 > n2") {
        IpWitness w = psi_bruteforce(3, 3, 1, 2);
        CHECK(w.value == 8);
        CHECK(psi_closed(3, 2) == 7);
    }
    SECTION("guards") {
        CHECK_THROWS_AS(psi_bruteforce(0, 3, 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(psi_bruteforce(4, 3, 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(psi_bruteforce(1, 9, 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(psi_bruteforce(1, 3, 9, 2), std::invalid_argument);
    }
}

TEST_CASE("psi witnesses satisfy the outer constraints and re-evaluate") {
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 0; n2 <= 5; ++n2)
            for (int r = 1; r <= 4; ++r)
                for (int x = 1; x <= n1; ++x) {
                    IpWitness w = psi_bruteforce(x, n1, n2, r);
                    int st = 0, sa = 0;
                    REQUIRE(w.t.size() == w.a.size());
                    REQUIRE(!w.t.empty());
                    for (size_t i = 0; i < w.t.size(); ++i) {
                        CHECK(w.t[i] >= 1);
                        CHECK(w.a[i] >= w.t[i] - 1);
                        st += w.t[i];
                        sa += w.a[i];
                    }
                    CHECK(st == n1);
                    CHECK(sa == n2);
                    CHECK(psi_inner_min(w.x, w.r, w.t, w.a) == w.value);
                    CHECK(inner_min_by_sequences(w.x, w.r, w.t, w.a) == w.value);
                }
}

TEST_CASE("psi value agrees with an independent sequence-based recomputation") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2)
            for (int r = 1; r <= 3; ++r)
                for (int x = 1; x <= n1; ++x)
                    CHECK(psi_bruteforce(x, n1, n2, r).value == psi_by_sequences(x, n1, n2, r));
}

TEST_CASE("closed form matches enumeration for n1 <= n2") {
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = n1; n2 <= 4; ++n2)
            for (int r = 1; r <= 3; ++r)
                for (int x = 1; x <= n1; ++x)
                    CHECK(psi_bruteforce(x, n1, n2, r).value == psi_closed(x, r));
}

TEST_CASE("integer-program distance bound") {
    CHECK(ip_distance_bound(LrcParams(9, 6, 3)) == 2);
    CHECK(ip_distance_bound(LrcParams(9, 5, 3)) == 4);
}

TEST_CASE("improved bound and applicability") {
    SECTION("strict improvement at (9,6,3)") {
        LrcParams p(9, 6, 3);
        REQUIRE(improved_bound(p).has_value());
        CHECK(*improved_bound(p) == 2);
        CHECK(gopalan_bound(p) == 3);
    }
    SECTION("coincides with gopalan at (9,5,3)") {
        LrcParams p(9, 5, 3);
        CHECK(*improved_bound(p) == 4);
        CHECK(gopalan_bound(p) == 4);
    }
    SECTION("not applicable when n1 > n2") {
        CHECK_FALSE(improved_bound(LrcParams(10, 5, 3)).has_value());
    }
}

TEST_CASE("ip equals improved wherever the theorem applies; improved <= gopalan") {
    bool strict_seen = false;
    for (int n = 4; n <= 30; ++n)
        for (int r = 2; r <= 6; ++r)
            for (int k = r + 1; k < n; ++k) {
                LrcParams p(n, k, r);
                if (p.n1() > 8 || p.n2() > 8) continue;
                std::optional<int> imp = improved_bound(p);
                if (imp) {
                    CHECK(ip_distance_bound(p) == *imp);
                    CHECK(*imp <= gopalan_bound(p));
                    if (*imp < gopalan_bound(p)) strict_seen = true;
                }
            }
    CHECK(strict_seen);
}

TEST_CASE("piecewise form of the improved bound") {
    // u+v <= r case must reduce to n - k - u + 1
    for (int n = 4; n <= 24; ++n)
        for (int r = 2; r <= 5; ++r)
            for (int k = r + 1; k < n; ++k) {
                LrcParams p(n, k, r);
                auto pw = improved_piecewise(p);
                if (!pw) continue;
                CHECK(p.u() + p.v() >= 2);
                if (pw->pcase == PiecewiseCase::uv_small) {
                    CHECK(p.u() + p.v() <= p.r);
                    CHECK(pw->value == p.n - p.k - p.u() + 1);
                } else {
                    CHECK(p.u() + p.v() > p.r);
                }
            }
    // no piecewise annotation when u+v < 2 (v = 0, u = 1 is impossible since k > r)
}

TEST_CASE("exact rational rate bounds") {
    CHECK(availability_rate_upper(2, 2) == Rational(8, 15));
    CHECK(availability_rate_upper(5, 1) == Rational(5, 6));
    CHECK(availability_rate_upper(1, 1) == Rational(1, 2));
    CHECK(regular_rate_lower(2, 2) == Rational(1, 3));
    CHECK(regular_rate_lower(1, 2) == Rational(0, 1));
    for (int r = 2; r <= 12; ++r)
        CHECK(availability_rate_upper(r, 2) > regular_rate_lower(r, 2));
}

TEST_CASE("bound report serialization") {
    BoundReport rep = make_bound_report(LrcParams(9, 6, 3));
    std::string kv = rep.to_kv();
    CHECK(kv.find("gopalan=3") != std::string::npos);
    CHECK(kv.find("ip=2") != std::string::npos);
    CHECK(kv.find("improved=2") != std::string::npos);
    CHECK(kv.find("applicable=yes") != std::string::npos);
    CHECK(rep.csv_row() == "9,6,3,3,3,3,2,2,yes");
    CHECK(BoundReport::csv_header() == "n,k,r,n1,n2,gopalan,ip,improved,applicable");

    BoundReport na = make_bound_report(LrcParams(10, 5, 3));
    CHECK(na.csv_row() == "10,5,3,3,2,5,5,na,no");
}
