#include <doctest.h>

#include "helpers.hpp"
#include "lattice_euclid/euclid_core.hpp"
#include "oracles.hpp"

using namespace lattice_euclid;
using namespace test_helpers;

TEST_CASE("hnf examples") {
    CHECK(hnf(IntMat::identity(2)) == IntMat::identity(2));
    CHECK(hnf(mat({{12, 18}})) == mat({{6}}));
    CHECK(hnf(mat({{2, 0, 1}, {0, 3, 1}})) == IntMat::identity(2));
    CHECK(hnf(mat({{4, 6}, {0, 3}})) == mat({{2, 0}, {3, 6}}));
    CHECK(hnf(IntMat(2, 3)).cols() == 0);
    // Rank 1 in Z^2: a single pivot column.
    CHECK(hnf(mat({{2, -4}, {3, -6}})) == mat({{2}, {3}}));
}

TEST_CASE("hnf shape") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const IntMat H = hnf(random_matrix(1 + seed % 5, 1 + seed % 7, 20, seed));
        std::size_t previous = 0;
        for (std::size_t k = 0; k < H.cols(); ++k) {
            std::size_t p = 0;
            while (H(p, k) == 0) ++p;
            if (k > 0) REQUIRE(p > previous);
            REQUIRE(H(p, k) > 0);
            for (std::size_t l = 0; l < k; ++l) {
                REQUIRE(H(p, l) >= 0);
                REQUIRE(H(p, l) < H(p, k));
            }
            previous = p;
        }
    }
}

TEST_CASE("lattice_equal and member examples") {
    CHECK(lattice_equal(IntMat::identity(2), mat({{1, 0, 1}, {0, 1, 1}})));
    CHECK_FALSE(lattice_equal(mat({{2}}), mat({{3}})));
    CHECK_THROWS_AS(lattice_equal(mat({{2}}), IntMat::identity(2)), DimensionMismatch);

    const IntMat two = mat({{2, 0}, {0, 2}});
    CHECK(member(two, vec({4, -6})));
    CHECK_FALSE(member(two, vec({1, 0})));
    CHECK(member(mat({{2, 0, 1}, {0, 3, 1}}), vec({1, 0})));
    CHECK(member(mat({{2, -4}, {3, -6}}), vec({-6, -9})));
    CHECK_FALSE(member(mat({{2, -4}, {3, -6}}), vec({2, 4})));
    CHECK(member(IntMat(2, 0), vec({0, 0})));
}

TEST_CASE("property: hnf idempotence and invariance under column operations") {
    std::mt19937_64 gen(8);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 5;
        const std::size_t m = 1 + seed % 6;
        const IntMat A = random_matrix(n, m, 20, 100 + seed);
        const IntMat H = hnf(A);
        REQUIRE(hnf(H) == H);

        IntMat B = A;
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        std::uniform_int_distribution<long> mult(-5, 5);
        for (int op = 0; op < 6; ++op) {
            const std::size_t a = pick(gen), b = pick(gen);
            switch (op % 3) {
                case 0:
                    for (std::size_t r = 0; r < n; ++r) std::swap(B(r, a), B(r, b));
                    break;
                case 1:
                    for (std::size_t r = 0; r < n; ++r) B(r, a) = -B(r, a);
                    break;
                default: {
                    if (a == b) break;
                    const long t = mult(gen);
                    for (std::size_t r = 0; r < n; ++r) B(r, a) += t * B(r, b);
                    break;
                }
            }
        }
        REQUIRE(hnf(B) == H);
        for (std::size_t j = 0; j < m; ++j) REQUIRE(member(A, A.col(j)));
    }
}

TEST_CASE("property: lattice_equal is an equivalence relation") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const IntMat A = random_matrix(2, 3, 3, 300 + seed);
        const IntMat B = random_matrix(2, 3, 3, 400 + seed);
        const IntMat C = basic_basis(A).basis;
        REQUIRE(lattice_equal(A, A));
        REQUIRE(lattice_equal(A, B) == lattice_equal(B, A));
        REQUIRE(lattice_equal(A, C));
        if (lattice_equal(A, B)) REQUIRE(lattice_equal(C, B));
        if (!lattice_equal(A, B)) REQUIRE_FALSE(lattice_equal(C, B));
    }
}

TEST_CASE("random_instance") {
    const InstanceParams p{3, 5, 9, true, 42};
    const IntMat A = random_instance(p);
    CHECK(A == random_instance(p));
    CHECK(A.rows() == 3);
    CHECK(A.cols() == 5);
    CHECK(max_abs_entry(A) <= 9);
    CHECK(find_independent_columns(A).size() == 3);

    const IntMat g = random_instance({1, 2, 20, false, 7});
    CHECK(g.rows() == 1);
    CHECK(g.cols() == 2);
    CHECK(random_instance({1, 2, 20, false, 8}) != g);

    CHECK_THROWS_AS(random_instance({3, 2, 5, true, 1}), InvalidParams);
    CHECK_THROWS_AS(random_instance({2, 2, 0, false, 1}), InvalidParams);
    CHECK_THROWS_AS(random_instance({0, 2, 5, false, 1}), InvalidParams);
    // With no attempts allowed the generator has to give up.
    CHECK_THROWS_AS(random_instance({1, 1, 1, true, 1}, 0), ExhaustedRetries);
}

TEST_CASE("random_instance covers the whole range") {
    const IntMat A = random_instance({1, 4000, 3, false, 1});
    std::vector<int> seen(7, 0);
    for (std::size_t j = 0; j < A.cols(); ++j) seen[static_cast<std::size_t>(A(0, j).get_si() + 3)]++;
    for (int count : seen) CHECK(count > 400);
}

TEST_CASE("independent oracles sanity") {
    CHECK(oracles::gcd(12, -18) == 6);
    CHECK(oracles::gcd(0, 0) == 0);
    const auto b = oracles::extended_gcd(240, 46);
    CHECK(b.g == 2);
    CHECK(240 * b.s + 46 * b.t == 2);
    CHECK(oracles::cofactor_det(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
}
