#include <catch2/catch_amalgamated.hpp>

#include "lrc/poly.hpp"

#include <random>

using namespace lrc;

TEST_CASE("polynomial arithmetic and normalization") {
    PrimeField f(11);
    Poly x = Poly::monomial(f.one(), 1);
    Poly p = x * x + Poly::constant(f.element(3));
    CHECK(p.degree() == 2);
    CHECK(p(f.element(2)) == f.element(7));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    // leading-zero cancellation: (x + 1) + (10x + 1) = 2 in GF(11)
    Poly q = (x + Poly::constant(f.one())) + (x * f.element(10) + Poly::constant(f.one()));
    CHECK(q.degree() == 0);
    CHECK(q.coeff(0) == f.element(2));
}

TEST_CASE("annihilator basics") {
    PrimeField f(11);
    SECTION("single root zero gives x") {
        Poly h = annihilator(f, {f.zero()});
        CHECK(h.degree() == 1);
        CHECK(h.coeff(0) == f.zero());
        CHECK(h.coeff(1) == f.one());
    }
    SECTION("order-5 subgroup gives x^5 - 1") {
        std::vector<FieldElement> s = {f.element(1), f.element(3), f.element(9), f.element(5),
                                       f.element(4)};
        Poly h = annihilator(f, s);
        Poly expect = Poly::monomial(f.one(), 5) - Poly::constant(f.one());
        CHECK(h == expect);
    }
    SECTION("empty and duplicate inputs rejected") {
        CHECK_THROWS_AS(annihilator(f, {}), std::invalid_argument);
        CHECK_THROWS_AS(annihilator(f, {f.one(), f.one()}), std::invalid_argument);
    }
}

TEST_CASE("annihilator vanishes exactly on its root set") {
    PrimeField f(101);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint32_t> dist(0, 100);
    std::vector<FieldElement> pts;
    std::vector<bool> used(101, false);
    while (pts.size() < 7) {
        uint32_t v = dist(rng);
        if (!used[v]) {
            used[v] = true;
            pts.push_back(f.element(v));
        }
    }
    Poly h = annihilator(f, pts);
    CHECK(h.degree() == 7);
    for (const auto& a : pts) CHECK(h(a) == f.zero());
    int outside = 0;
    while (outside < 20) {
        uint32_t v = dist(rng);
        if (used[v]) continue;
        CHECK(h(f.element(v)) != f.zero());
        ++outside;
    }
}

TEST_CASE("interpolation examples") {
    SECTION("single point gives the constant") {
        PrimeField f(11);
        Poly p = interpolate(f, {{f.element(4), f.element(9)}});
        CHECK(p.degree() == 0);
        CHECK(p.coeff(0) == f.element(9));
    }
    SECTION("squares over GF(13) give x^2") {
        PrimeField f(13);
        Poly p = interpolate(f, {{f.element(1), f.element(1)},
                                 {f.element(2), f.element(4)},
                                 {f.element(3), f.element(9)}});
        CHECK(p == Poly::monomial(f.one(), 2));
    }
    SECTION("repeated x-coordinate rejected") {
        PrimeField f(13);
        CHECK_THROWS_AS(interpolate(f, {{f.one(), f.one()}, {f.one(), f.element(2)}}),
                        std::invalid_argument);
    }
}

TEST_CASE("interpolate after evaluate is the identity below the point count") {
    std::mt19937_64 rng(23);
    for (uint32_t p : {11u, 13u, 31u}) {
        PrimeField f(p);
        std::uniform_int_distribution<uint32_t> dist(0, p - 1);
        for (int t = 1; t <= 6; ++t) {
            std::vector<FieldElement> coeffs;
            for (int i = 0; i < t; ++i) coeffs.push_back(f.element(dist(rng)));
            Poly poly = Poly::from_coeffs(f, coeffs);
            std::vector<std::pair<FieldElement, FieldElement>> pts;
            for (int x = 0; x < t; ++x) pts.push_back({f.element(x), poly(f.element(x))});
            CHECK(interpolate(f, pts) == poly);
        }
    }
}
