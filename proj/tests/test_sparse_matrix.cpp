#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coverhom/sparse_matrix.hpp"
#include "support/oracle.hpp"

using namespace coverhom;

namespace {

RationalSparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    RationalSparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set(i, j, Rational(rows[i][j]));
    return m;
}

// The 6x3 nerve matrix of the three-edge worked example.
RationalSparseMatrix worked_example_m0() {
    return from_rows({{1, -1, 0}, {1, -1, 0}, {1, 0, -1}, {1, 0, -1}, {0, 1, -1}, {0, 1, -1}});
}

RationalSparseMatrix worked_example_m1() {
    return from_rows({{1, 0, -1, 0, 1, 0}, {0, 1, 0, -1, 0, 1}});
}

} // namespace

TEST_CASE("rank of identity and zero matrices") {
    CHECK(rank(RationalSparseMatrix::identity(3)) == 3);
    CHECK(rank(RationalSparseMatrix(4, 5)) == 0);
    CHECK(kernel_dim(RationalSparseMatrix::identity(3)) == 0);
    CHECK(kernel_dim(RationalSparseMatrix(4, 5)) == 5);
}

TEST_CASE("rank of the worked-example nerve matrices") {
    CHECK(rank(worked_example_m0()) == 2);
    CHECK(rank(worked_example_m1()) == 2);
    CHECK(kernel_dim(worked_example_m1()) == 4);
}

TEST_CASE("kernel basis of the worked-example matrix spans (1,1,1)") {
    const auto basis = kernel_basis(worked_example_m0());
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    REQUIRE(v.size() == 3);
    REQUIRE(v[0] != 0);
    CHECK(v[1] == v[0]);
    CHECK(v[2] == v[0]);
}

TEST_CASE("kernel basis edge cases") {
    const auto zero_kernel = kernel_basis(RationalSparseMatrix(3, 4));
    REQUIRE(zero_kernel.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(zero_kernel[i][j] == (i == j ? Rational(1) : Rational(0)));
    }
    CHECK(kernel_basis(RationalSparseMatrix::identity(5)).empty());
}

TEST_CASE("column space basis size equals rank") {
    const auto m0 = worked_example_m0();
    const auto basis = column_space_basis(m0);
    CHECK(basis.size() == rank(m0));
    CHECK(rank_of_columns(basis, m0.rows()) == basis.size());
}

TEST_CASE("kernel vectors are annihilated and counts match") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::bernoulli_distribution fill(0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = static_cast<std::size_t>(dim(rng));
        const std::size_t c = static_cast<std::size_t>(dim(rng));
        RationalSparseMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (fill(rng)) m.set(i, j, Rational(entry(rng)));

        const std::size_t rk = rank(m);
        CHECK(rk + kernel_dim(m) == c);
        CHECK(rank(m.transpose()) == rk);
        CHECK(oracle::dense_rank(m) == rk);

        const auto kernel = kernel_basis(m);
        CHECK(kernel.size() == kernel_dim(m));
        for (const auto& v : kernel) {
            const auto image = m.apply(v);
            for (const auto& x : image) CHECK(x == 0);
        }
        const auto columns = column_space_basis(m);
        CHECK(columns.size() == rk);
        CHECK(rank_of_columns(columns, r) == rk);
    }
}

TEST_CASE("rank handles rational entries requiring exact arithmetic") {
    // Hilbert-like matrix: notoriously ill-conditioned in floating point,
    // full rank over Q.
    const std::size_t n = 6;
    RationalSparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, Rational(1) / Rational(static_cast<long>(i + j + 1)));
    CHECK(rank(m) == n);
}

TEST_CASE("out-of-bounds indices are rejected") {
    RationalSparseMatrix m(2, 2);
    CHECK_THROWS_AS(m.set(2, 0, Rational(1)), validation_error);
    CHECK_THROWS_AS(m.at(0, 5), validation_error);
}
