#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coverhom/polynomial.hpp"

using namespace coverhom;

namespace {

RationalPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(Rational(v));
    return RationalPolynomial(std::move(c));
}

RationalPolynomial from_roots(const std::vector<Rational>& roots) {
    RationalPolynomial p = RationalPolynomial::constant(1);
    for (const auto& r : roots) p = p * RationalPolynomial({-r, Rational(1)});
    return p;
}

} // namespace

TEST_CASE("sturm sequence of x") {
    const auto chain = sturm_sequence(poly({0, 1}));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == poly({0, 1}));
    CHECK(chain[1] == poly({1}));
}

TEST_CASE("sturm sequence of x^2 - 2") {
    const auto chain = sturm_sequence(poly({-2, 0, 1}));
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == poly({-2, 0, 1}));
    CHECK(chain[1] == poly({0, 2}));
    CHECK(chain[2] == poly({2}));
}

TEST_CASE("sturm sequence rejects the zero polynomial") {
    CHECK_THROWS_AS(sturm_sequence(RationalPolynomial{}), validation_error);
}

TEST_CASE("root counting on basic intervals") {
    CHECK(count_roots(poly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
    CHECK(count_roots(from_roots({Rational(1), Rational(2), Rational(3)}), Rational(0), Rational(4)) == 3);
    CHECK(count_roots(poly({-2, 0, 1}), Rational(2), Rational(3)) == 0);
    CHECK_THROWS_AS(count_roots(poly({0, 1}), Rational(1), Rational(1)), validation_error);
}

TEST_CASE("root counting is half-open: [a, b)") {
    const auto p = from_roots({Rational(1), Rational(2)});
    CHECK(count_roots(p, Rational(1), Rational(2)) == 1); // root at a counted
    CHECK(count_roots(p, Rational(0), Rational(2)) == 1); // root at b not counted
    CHECK(count_roots(p, Rational(0), Rational(3)) == 2);
}

TEST_CASE("characteristic polynomial of diag(1,2,-3) has one negative root") {
    // (x-1)(x-2)(x+3)
    const auto p = from_roots({Rational(1), Rational(2), Rational(-3)});
    CHECK(count_roots(p, Rational(-10), Rational(0)) == 1);
    CHECK(count_negative_roots_with_multiplicity(p) == 1);
    const auto chain = sturm_sequence(p);
    CHECK(chain.size() == 4);
}

TEST_CASE("isolation produces one interval per root") {
    const auto p = poly({-2, 0, 1});
    const auto roots = isolate_roots(p, Rational(0), Rational(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo < roots[0].hi);
    // sqrt(2) is inside
    CHECK(roots[0].lo * roots[0].lo < 2);
    CHECK(roots[0].hi * roots[0].hi > 2);
}

TEST_CASE("isolation collapses repeated and rational roots") {
    // (x-1)^2: squarefree handling reports the single root once, exactly.
    const auto p = from_roots({Rational(1), Rational(1)});
    const auto roots = isolate_roots(p, Rational(0), Rational(3));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].exact);
    CHECK(roots[0].lo == 1);

    const auto q = from_roots({Rational(1, 3), Rational(1, 2), Rational(2)});
    const auto qroots = isolate_roots(q, Rational(0), Rational(3));
    REQUIRE(qroots.size() == 3);
    for (const auto& iv : qroots) CHECK(iv.exact);
    CHECK(qroots[0].lo == Rational(1, 3));
    CHECK(qroots[1].lo == Rational(1, 2));
    CHECK(qroots[2].lo == Rational(2));
}

TEST_CASE("squarefree reduction does not change counts") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> root_value(-4, 4);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> roots;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const Rational r(root_value(rng));
            const int m = mult(rng);
            for (int j = 0; j < m; ++j) roots.push_back(r);
        }
        const auto p = from_roots(roots);
        const auto sf = squarefree_part(p);
        CHECK(count_roots(p, Rational(-5), Rational(5)) == count_roots(sf, Rational(-5), Rational(5)));
    }
}

TEST_CASE("isolation intervals partition the count") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> count(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> roots;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) roots.push_back(Rational(num(rng), den(rng)));
        const auto p = from_roots(roots);
        const Rational a(-8), b(8);
        const auto isolated = isolate_roots(p, a, b);
        CHECK(static_cast<long>(isolated.size()) == count_roots(p, a, b));
        for (std::size_t i = 0; i + 1 < isolated.size(); ++i)
            CHECK(isolated[i].hi <= isolated[i + 1].lo);
        for (const auto& iv : isolated) {
            if (iv.exact)
                CHECK(p(iv.lo) == 0);
            else
                CHECK(count_roots(p, iv.lo, iv.hi) == 1);
        }
    }
}

TEST_CASE("yun decomposition recovers multiplicities") {
    // (x-1)^2 (x+2)^3
    const auto p = from_roots({Rational(1), Rational(1), Rational(-2), Rational(-2), Rational(-2)});
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 2);
    CHECK(parts[1].second == 3);
    CHECK(count_negative_roots_with_multiplicity(p) == 3);
}
