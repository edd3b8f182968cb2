#include <catch2/catch_amalgamated.hpp>

#include "coverhom/cell_complex.hpp"
#include "support/oracle.hpp"

using namespace coverhom;

namespace {

/// Sphere S^k with two cells per dimension 0..k: cells 2j and 2j+1 have
/// dimension k-j, and each cell of positive dimension is attached to the two
/// cells one dimension down with coefficients +1 and -1.
RegularCellComplex sphere_cells(int k) {
    std::vector<RegularCellComplex::Cell> cells;
    std::map<long, std::map<long, int>> incidence;
    for (int j = 0; j <= k; ++j) {
        const long plus = 2 * j, minus = 2 * j + 1;
        cells.push_back({plus, k - j});
        cells.push_back({minus, k - j});
        if (j < k) {
            incidence[plus] = {{2 * (j + 1), 1}, {2 * (j + 1) + 1, -1}};
            incidence[minus] = {{2 * (j + 1), 1}, {2 * (j + 1) + 1, -1}};
        }
    }
    return RegularCellComplex(std::move(cells), std::move(incidence));
}

} // namespace

TEST_CASE("cell decomposition of the 2-sphere with two cells per dimension") {
    const auto sphere = sphere_cells(2);
    const auto c = sphere.cochain();
    CHECK(c.dims() == std::vector<std::size_t>{2, 2, 2});
    CHECK(c.betti() == std::vector<long long>{1, 0, 1});
    CHECK(oracle::dense_betti(c) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("sphere cell structures in other dimensions") {
    for (int k = 1; k <= 4; ++k) {
        const auto b = sphere_cells(k).cochain().betti();
        std::vector<long long> expected(static_cast<std::size_t>(k) + 1, 0);
        expected[0] = 1;
        expected[static_cast<std::size_t>(k)] += 1;
        CHECK(b == expected);
    }
}

TEST_CASE("a single point") {
    const RegularCellComplex point({{0, 0}}, {});
    CHECK(point.cochain().dims() == std::vector<std::size_t>{1});
    CHECK(point.cochain().betti() == std::vector<long long>{1});
}

TEST_CASE("circle from two vertices and two arcs") {
    const RegularCellComplex circle({{0, 0}, {1, 0}, {2, 1}, {3, 1}},
                                    {{2, {{0, 1}, {1, -1}}}, {3, {{0, 1}, {1, -1}}}});
    CHECK(circle.cochain().betti() == std::vector<long long>{1, 1});
}

TEST_CASE("validation rejects broken cell data") {
    SECTION("face with wrong dimension drop") {
        CHECK_THROWS_AS(RegularCellComplex({{0, 0}, {1, 2}}, {{1, {{0, 1}}}}), validation_error);
    }
    SECTION("boundary of boundary nonzero") {
        // two-cell attached to a single arc of a circle with mismatched signs
        CHECK_THROWS_AS(RegularCellComplex({{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}},
                                           {{2, {{0, 1}, {1, -1}}},
                                            {3, {{0, 1}, {1, -1}}},
                                            {4, {{2, 1}, {3, 1}}}}),
                        validation_error);
    }
    SECTION("coefficient other than +-1") {
        CHECK_THROWS_AS(RegularCellComplex({{0, 0}, {1, 0}, {2, 1}}, {{2, {{0, 2}, {1, -1}}}}),
                        validation_error);
    }
    SECTION("duplicate ids") {
        CHECK_THROWS_AS(RegularCellComplex({{0, 0}, {0, 1}}, {}), validation_error);
    }
    SECTION("positive-dimensional cell with no boundary") {
        CHECK_THROWS_AS(RegularCellComplex({{0, 1}}, {}), validation_error);
    }
}
