#pragma once

// Deterministic random inputs shared by the property tests and the
// acceptance suite.

#include <random>
#include <set>
#include <vector>

#include "coverhom/cover.hpp"
#include "coverhom/hocolim.hpp"
#include "coverhom/simplicial.hpp"

namespace gen {

using coverhom::Simplex;
using coverhom::SimplicialComplex;

/// Random complex on up to `max_vertices` vertices built from a handful of
/// random maximal simplices of dimension <= 3.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nverts(2, max_vertices);
    const int n = nverts(rng);
    std::uniform_int_distribution<int> nsimp(1, 6);
    std::uniform_int_distribution<int> size_dist(1, 4);
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<Simplex> maximal;
    const int count = nsimp(rng);
    for (int i = 0; i < count; ++i) {
        std::set<int> verts;
        const int size = size_dist(rng);
        while (static_cast<int>(verts.size()) < std::min(size, n)) verts.insert(vert(rng));
        maximal.push_back(Simplex(verts.begin(), verts.end()));
    }
    return SimplicialComplex::from_maximal(n, maximal);
}

/// Random subcomplex: the closure of a random subset of the simplices.
inline SimplicialComplex random_subcomplex(std::mt19937& rng, const SimplicialComplex& k) {
    std::bernoulli_distribution keep(0.5);
    std::vector<Simplex> chosen;
    for (int p = 0; p <= k.dim(); ++p)
        for (const auto& s : k.simplices(p))
            if (keep(rng)) chosen.push_back(s);
    return SimplicialComplex::from_maximal(k.vertex_count(), chosen);
}

/// Random cover of `k` by `members` subcomplexes: every maximal simplex is
/// assigned to at least one member, so the union is the whole complex.
inline coverhom::Cover random_cover(std::mt19937& rng, const SimplicialComplex& k, int members) {
    std::uniform_int_distribution<int> pick(0, members - 1);
    std::bernoulli_distribution extra(0.3);
    std::vector<std::vector<Simplex>> assigned(static_cast<std::size_t>(members));
    for (int p = 0; p <= k.dim(); ++p)
        for (const auto& s : k.simplices(p)) {
            assigned[static_cast<std::size_t>(pick(rng))].push_back(s);
            for (int m = 0; m < members; ++m)
                if (extra(rng)) assigned[static_cast<std::size_t>(m)].push_back(s);
        }
    std::vector<SimplicialComplex> parts;
    for (const auto& a : assigned) parts.push_back(SimplicialComplex::from_maximal(k.vertex_count(), a));
    return coverhom::Cover(k, parts);
}

/// Random arrangement inside a random ambient complex.
inline coverhom::Arrangement random_arrangement(std::mt19937& rng, int max_vertices, int max_sets) {
    const SimplicialComplex ambient = random_complex(rng, max_vertices);
    std::uniform_int_distribution<int> nsets(1, max_sets);
    const int n = nsets(rng);
    std::vector<SimplicialComplex> sets;
    for (int i = 0; i < n; ++i) sets.push_back(random_subcomplex(rng, ambient));
    return coverhom::Arrangement(ambient, sets);
}

/// Cover whose members are cones (hence contractible): each member is the
/// cone over a random subcomplex with a random apex, and the ambient complex
/// is the union of the members.
inline coverhom::Cover random_cone_cover(std::mt19937& rng, int max_vertices, int members) {
    std::uniform_int_distribution<int> nverts(3, max_vertices);
    const int n = nverts(rng);
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::uniform_int_distribution<int> nbase(1, 4);
    std::uniform_int_distribution<int> base_size(1, 3);
    std::vector<SimplicialComplex> parts;
    SimplicialComplex ambient = SimplicialComplex::empty(n);
    for (int m = 0; m < members; ++m) {
        std::vector<Simplex> base;
        const int count = nbase(rng);
        for (int i = 0; i < count; ++i) {
            std::set<int> verts;
            const int size = base_size(rng);
            while (static_cast<int>(verts.size()) < size) verts.insert(vert(rng));
            base.push_back(Simplex(verts.begin(), verts.end()));
        }
        const SimplicialComplex base_complex = SimplicialComplex::from_maximal(n, base);
        const SimplicialComplex member = coverhom::cone(base_complex, vert(rng));
        ambient = coverhom::union_of(ambient, member);
        parts.push_back(member);
    }
    return coverhom::Cover(ambient, parts);
}

/// Octahedron model of S^2: poles 0 and 5, equator 1-2-3-4.
inline SimplicialComplex octahedron() {
    return SimplicialComplex::from_maximal(6, {{0, 1, 2},
                                               {0, 2, 3},
                                               {0, 3, 4},
                                               {0, 1, 4},
                                               {1, 2, 5},
                                               {2, 3, 5},
                                               {3, 4, 5},
                                               {1, 4, 5}});
}

/// The two closed hemispheres of the octahedron, meeting in the equatorial
/// square.
inline std::vector<SimplicialComplex> hemispheres() {
    return {SimplicialComplex::from_maximal(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}}),
            SimplicialComplex::from_maximal(6, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}})};
}

/// Theta graph: two junction vertices 0 and 4 joined by three arcs through
/// the midpoints 1, 2, 3. Used as the three-edge worked example; each member
/// is one arc.
inline SimplicialComplex theta_graph() {
    return SimplicialComplex::from_maximal(
        5, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}});
}

inline std::vector<SimplicialComplex> theta_arcs() {
    return {SimplicialComplex::from_maximal(5, {{0, 1}, {1, 4}}),
            SimplicialComplex::from_maximal(5, {{0, 2}, {2, 4}}),
            SimplicialComplex::from_maximal(5, {{0, 3}, {3, 4}})};
}

} // namespace gen
