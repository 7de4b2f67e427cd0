#include <catch2/catch_amalgamated.hpp>

#include "lrc/partition.hpp"

#include <algorithm>
#include <set>

using namespace lrc;

namespace {

std::set<uint32_t> block_set(const EvaluationPartition& p, size_t b) {
    std::set<uint32_t> out;
    for (const auto& x : p.block_points(b)) out.insert(x.value());
    return out;
}

}  // namespace

TEST_CASE("coset partition over GF(13), block size 4, n = 10") {
    PrimeField f(13);
    EvaluationPartition p = coset_partition(f, 4, 10);
    REQUIRE(p.m() == 3);
    CHECK(p.short_size() == 2);
    CHECK(block_set(p, 0) == std::set<uint32_t>{1, 5, 8, 12});
    CHECK(block_set(p, 1) == std::set<uint32_t>{2, 3, 10, 11});
    // the final block is a 2-subset of the next coset {4, 6, 7, 9}
    std::set<uint32_t> coset{4, 6, 7, 9};
    for (uint32_t v : block_set(p, 2)) CHECK(coset.count(v) == 1);
    // all points distinct
    std::set<uint32_t> all;
    for (const auto& x : p.points) all.insert(x.value());
    CHECK(all.size() == 10);
}

TEST_CASE("coset partition over GF(11), block size 5, n = 9") {
    PrimeField f(11);
    EvaluationPartition p = coset_partition(f, 5, 9);
    REQUIRE(p.m() == 2);
    CHECK(p.short_size() == 4);
    CHECK(block_set(p, 0) == std::set<uint32_t>{1, 3, 4, 5, 9});
    std::set<uint32_t> coset{2, 6, 7, 8, 10};
    for (uint32_t v : block_set(p, 1)) CHECK(coset.count(v) == 1);
}

TEST_CASE("coset partition error cases") {
    PrimeField f11(11), f13(13);
    CHECK_THROWS_AS(coset_partition(f11, 4, 8), std::invalid_argument);   // 4 does not divide 10
    CHECK_THROWS_AS(coset_partition(f13, 4, 9), std::invalid_argument);   // remainder 1
    CHECK_THROWS_AS(coset_partition(f13, 4, 13), std::invalid_argument);  // n > p-1
}

TEST_CASE("coset partition with zero remainder uses full blocks only") {
    PrimeField f(13);
    EvaluationPartition p = coset_partition(f, 4, 8);
    REQUIRE(p.m() == 2);
    CHECK(p.short_size() == 4);
    CHECK(block_set(p, 0) == std::set<uint32_t>{1, 5, 8, 12});
    CHECK(block_set(p, 1) == std::set<uint32_t>{2, 3, 10, 11});
}

TEST_CASE("good polynomial over GF(11): g = x^5 - 10") {
    PrimeField f(11);
    GoodPolyAlgebra alg = good_polynomial(coset_partition(f, 5, 9));
    CHECK(alg.g.degree() == 5);
    CHECK(alg.g.coeff(5) == f.one());
    CHECK(alg.g.coeff(0) == f.element(-10));
    CHECK(alg.block_values[0] == f.element(2));
    CHECK(alg.block_values[1] == f.zero());
    CHECK(alg.degree_profile == std::vector<size_t>{0, 5});
}

TEST_CASE("good polynomial over GF(13): g = x^4 - c with c = 4^4") {
    PrimeField f(13);
    GoodPolyAlgebra alg = good_polynomial(coset_partition(f, 4, 10));
    CHECK(alg.g.degree() == 4);
    CHECK(alg.g.coeff(0) == -f.element(9));  // 4^4 = 256 = 9 (mod 13)
    CHECK(alg.block_values[2] == f.zero());
    CHECK(alg.degree_profile == std::vector<size_t>{0, 4, 8});
    // pairwise distinct block values
    CHECK(alg.block_values[0] != alg.block_values[1]);
    CHECK(alg.block_values[0] != alg.block_values[2]);
    CHECK(alg.block_values[1] != alg.block_values[2]);
}

TEST_CASE("single-block partition degenerates to a shifted annihilator") {
    PrimeField f(13);
    GoodPolyAlgebra alg = good_polynomial(coset_partition(f, 4, 4));
    REQUIRE(alg.part.m() == 1);
    CHECK(alg.degree_profile == std::vector<size_t>{0});
    // g = x^4 - 1 vanishes on the whole subgroup
    for (const auto& x : alg.part.points) CHECK(alg.g(x) == f.zero());
}

TEST_CASE("powers of g form a basis: the block-value matrix is invertible") {
    for (auto [q, bs, n] : {std::tuple{13u, 4u, 10u}, {11u, 5u, 9u}, {29u, 7u, 26u}}) {
        PrimeField f(q);
        GoodPolyAlgebra alg = good_polynomial(coset_partition(f, bs, n));
        Matrix b = basis_matrix(alg);
        CHECK(rank(b) == alg.part.m());
    }
}
