#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coverhom/cochain.hpp"
#include "coverhom/simplicial.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace coverhom;

TEST_CASE("cochain complex dimensions of the triangle") {
    const auto full = cochain_complex(SimplicialComplex::full_simplex(2));
    CHECK(full.dims() == std::vector<std::size_t>{3, 3, 1});
    const auto boundary = cochain_complex(SimplicialComplex::simplex_boundary(2));
    CHECK(boundary.dims() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("sign convention on a single edge") {
    const auto k = SimplicialComplex::from_maximal(2, {{0, 1}});
    const auto c = cochain_complex(k);
    const auto d0 = c.differential(0);
    REQUIRE(d0.rows() == 1);
    REQUIRE(d0.cols() == 2);
    CHECK(d0.at(0, 0) == Rational(-1));
    CHECK(d0.at(0, 1) == Rational(1));
}

TEST_CASE("construction rejects a set not closed under faces") {
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(3, {{0, 1}}), validation_error);
    CHECK_NOTHROW(SimplicialComplex::from_simplices(3, {{0}, {1}, {0, 1}}));
}

TEST_CASE("betti numbers of simplices and their boundaries") {
    CHECK(betti(SimplicialComplex::full_simplex(3)) == std::vector<long long>{1, 0, 0, 0});
    CHECK(betti(SimplicialComplex::simplex_boundary(3)) == std::vector<long long>{1, 0, 1});
    for (int n = 1; n <= 6; ++n) {
        std::vector<long long> expected_full(static_cast<std::size_t>(n) + 1, 0);
        expected_full[0] = 1;
        CHECK(betti(SimplicialComplex::full_simplex(n)) == expected_full);
        std::vector<long long> expected_boundary(static_cast<std::size_t>(n), 0);
        expected_boundary[0] = 1;
        expected_boundary[static_cast<std::size_t>(n) - 1] += 1;
        CHECK(betti(SimplicialComplex::simplex_boundary(n)) == expected_boundary);
    }
}

TEST_CASE("betti numbers of the octahedron") {
    CHECK(betti(gen::octahedron()) == std::vector<long long>{1, 0, 1});
    CHECK(oracle::dense_betti(gen::octahedron()) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("euler characteristic basics") {
    CHECK(euler_characteristic(SimplicialComplex::simplex_boundary(3)) == 2);
    CHECK(euler_characteristic(SimplicialComplex::full_simplex(4)) == 1);
    CHECK(euler_characteristic(gen::octahedron()) == 2); // 6 - 12 + 8
}

TEST_CASE("relative complex of a pair") {
    SECTION("(Delta_1, boundary): one class in degree 1") {
        const SubcomplexPair pair(SimplicialComplex::full_simplex(1),
                                  SimplicialComplex::simplex_boundary(1));
        const auto c = relative_cochain_complex(pair);
        CHECK(c.betti() == std::vector<long long>{0, 1});
    }
    SECTION("(Delta_2, boundary): one class in degree 2") {
        const SubcomplexPair pair(SimplicialComplex::full_simplex(2),
                                  SimplicialComplex::simplex_boundary(2));
        CHECK(relative_cochain_complex(pair).betti() == std::vector<long long>{0, 0, 1});
    }
    SECTION("empty subcomplex gives the absolute complex") {
        const auto k = gen::octahedron();
        const SubcomplexPair pair(k, SimplicialComplex::empty(k.vertex_count()));
        CHECK(relative_cochain_complex(pair).betti() == betti(k));
    }
    SECTION("sub must be a subcomplex") {
        CHECK_THROWS_AS(SubcomplexPair(SimplicialComplex::simplex_boundary(2),
                                       SimplicialComplex::from_maximal(3, {{0, 1, 2}})),
                        validation_error);
    }
}

TEST_CASE("Borel-Moore Euler characteristics of interval models") {
    const auto edge = SimplicialComplex::from_maximal(2, {{0, 1}});
    SECTION("half-open segment [0,1)") {
        const SubcomplexPair pair(edge, SimplicialComplex::from_maximal(2, {{1}}));
        CHECK(borel_moore_euler(pair) == 0);
    }
    SECTION("open segment (0,1)") {
        const SubcomplexPair pair(edge, SimplicialComplex::from_maximal(2, {{0}, {1}}));
        CHECK(borel_moore_euler(pair) == -1);
    }
    SECTION("open k-ball for k = 1,2,3") {
        for (int k = 1; k <= 3; ++k) {
            const SubcomplexPair pair(SimplicialComplex::full_simplex(k),
                                      SimplicialComplex::simplex_boundary(k));
            CHECK(borel_moore_euler(pair) == (k % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("inclusion-exclusion equals the direct Euler characteristic") {
    SECTION("two edges sharing a vertex") {
        const auto a = SimplicialComplex::from_maximal(3, {{0, 1}});
        const auto b = SimplicialComplex::from_maximal(3, {{1, 2}});
        CHECK(euler_inclusion_exclusion({a, b}) == 1);
    }
    SECTION("two disjoint triangles") {
        const auto a = SimplicialComplex::from_maximal(6, {{0, 1, 2}});
        const auto b = SimplicialComplex::from_maximal(6, {{3, 4, 5}});
        CHECK(euler_inclusion_exclusion({a, b}) == 2);
    }
    SECTION("hemispheres of the octahedron") {
        const auto h = gen::hemispheres();
        CHECK(euler_inclusion_exclusion({h[0], h[1]}) == 2); // 1 + 1 - 0
    }
    SECTION("randomized families") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 40; ++trial) {
            const auto ambient = gen::random_complex(rng, 8);
            std::uniform_int_distribution<int> nparts(1, 4);
            std::vector<SimplicialComplex> parts;
            SimplicialComplex u = SimplicialComplex::empty(ambient.vertex_count());
            const int n = nparts(rng);
            for (int i = 0; i < n; ++i) {
                parts.push_back(gen::random_subcomplex(rng, ambient));
                u = union_of(u, parts.back());
            }
            CHECK(euler_inclusion_exclusion(parts) == euler_characteristic(u));
        }
    }
}

TEST_CASE("Borel-Moore additivity over random partitions") {
    // X = closed complex, X_1 = random closed subcomplex, X_2 = X \ X_1
    // (locally closed). chi_BM(X) = chi_BM(X_1) + chi_BM(X_2), where
    // chi_BM(X_2) is computed via the pair (X, X_1).
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = gen::random_complex(rng, 8);
        const auto x1 = gen::random_subcomplex(rng, x);
        const SubcomplexPair whole(x, SimplicialComplex::empty(x.vertex_count()));
        const SubcomplexPair closed_part(x1, SimplicialComplex::empty(x.vertex_count()));
        const SubcomplexPair complement(x, x1);
        CHECK(borel_moore_euler(whole) == borel_moore_euler(closed_part) + borel_moore_euler(complement));
    }
}

TEST_CASE("alternating dims equal alternating betti numbers") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = gen::random_complex(rng, 8);
        const auto c = cochain_complex(k);
        long long alt_betti = 0;
        const auto b = c.betti();
        for (std::size_t p = 0; p < b.size(); ++p) alt_betti += (p % 2 == 0 ? 1 : -1) * b[p];
        CHECK(c.euler_characteristic() == alt_betti);
    }
}

TEST_CASE("betti numbers survive one barycentric subdivision") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        const auto k = gen::random_complex(rng, 6);
        if (k.is_empty()) continue;
        const auto sd = barycentric_subdivision(k);
        CHECK(betti(sd) == betti(k));
    }
    CHECK(betti(barycentric_subdivision(gen::octahedron())) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("component labels agree with breadth-first search") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = gen::random_complex(rng, 8);
        CHECK(k.component_count() == oracle::bfs_component_count(k));
    }
    SECTION("poles joined through meridians") {
        // octahedron minus all triangles and the equatorial edges
        const auto k = SimplicialComplex::from_maximal(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
        CHECK(k.component_count() == 1);
    }
    SECTION("isolated vertices") {
        const auto k = SimplicialComplex::from_maximal(5, {{0}, {1}, {2}, {3}, {4}});
        CHECK(k.component_count() == 5);
    }
    SECTION("full simplex is connected") {
        CHECK(SimplicialComplex::full_simplex(3).component_count() == 1);
    }
}
