#pragma once

#include <array>
#include <string>
#include <vector>

#include "coverhom/hocolim.hpp"
#include "coverhom/rational.hpp"

namespace coverhom {

/// Geometric primitive of a scene in R^k (k <= 3). A primitive tests a grid
/// vertex; a simplex belongs to the induced subcomplex when all of its
/// vertices pass, so the subcomplex is closed under faces by construction.
struct ScenePrimitive {
    enum class Kind { ball, box, quadric, intersection };

    Kind kind = Kind::ball;
    std::vector<Rational> center;           // ball
    Rational radius;                        // ball
    std::vector<Rational> box_min, box_max; // box
    std::vector<std::vector<Rational>> matrix; // quadric, (k+1)x(k+1) on (1, x)
    bool quadric_nonpositive = true;           // sign of the quadric constraint
    std::vector<ScenePrimitive> parts;         // intersection

    bool contains(const std::vector<Rational>& x) const {
        switch (kind) {
        case Kind::ball: {
            Rational d2(0);
            for (std::size_t i = 0; i < x.size(); ++i) {
                const Rational t = x[i] - center[i];
                d2 += t * t;
            }
            return d2 <= radius * radius;
        }
        case Kind::box: {
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] < box_min[i] || x[i] > box_max[i]) return false;
            return true;
        }
        case Kind::quadric: {
            std::vector<Rational> h;
            h.reserve(x.size() + 1);
            h.push_back(Rational(1));
            h.insert(h.end(), x.begin(), x.end());
            Rational value(0);
            for (std::size_t i = 0; i < h.size(); ++i)
                for (std::size_t j = 0; j < h.size(); ++j) value += matrix[i][j] * h[i] * h[j];
            return quadric_nonpositive ? value <= 0 : value >= 0;
        }
        case Kind::intersection: {
            for (const auto& part : parts)
                if (!part.contains(x)) return false;
            return true;
        }
        }
        return false;
    }
};

struct Scene {
    int dim = 2;
    std::vector<Rational> bbox_min, bbox_max;
    std::vector<ScenePrimitive> primitives;
};

namespace detail {

/// Freudenthal triangulation of a k-dimensional box grid: each unit cell is
/// split into k! simplices, one per coordinate-increment permutation.
struct FreudenthalGrid {
    int dim;
    std::vector<long> cells_per_axis;
    std::vector<Rational> origin;
    Rational step;

    long vertices_per_axis(int axis) const { return cells_per_axis[static_cast<std::size_t>(axis)] + 1; }

    long vertex_count() const {
        long total = 1;
        for (int a = 0; a < dim; ++a) total *= vertices_per_axis(a);
        return total;
    }

    long vertex_index(const std::vector<long>& coords) const {
        long idx = 0;
        for (int a = 0; a < dim; ++a) idx = idx * vertices_per_axis(a) + coords[static_cast<std::size_t>(a)];
        return idx;
    }

    std::vector<Rational> vertex_position(const std::vector<long>& coords) const {
        std::vector<Rational> x(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a)
            x[static_cast<std::size_t>(a)] =
                origin[static_cast<std::size_t>(a)] + step * Rational(coords[static_cast<std::size_t>(a)]);
        return x;
    }

    std::vector<Simplex> top_simplices() const {
        std::vector<int> perm(static_cast<std::size_t>(dim));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<Simplex> out;
        std::vector<long> base(static_cast<std::size_t>(dim), 0);
        while (true) {
            for (const auto& order : perms) {
                Simplex s;
                std::vector<long> cur = base;
                s.push_back(static_cast<int>(vertex_index(cur)));
                for (int axis : order) {
                    ++cur[static_cast<std::size_t>(axis)];
                    s.push_back(static_cast<int>(vertex_index(cur)));
                }
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            int a = dim - 1;
            while (a >= 0 && base[static_cast<std::size_t>(a)] + 1 >= cells_per_axis[static_cast<std::size_t>(a)])
                --a;
            if (a < 0) break;
            ++base[static_cast<std::size_t>(a)];
            for (int b = a + 1; b < dim; ++b) base[static_cast<std::size_t>(b)] = 0;
        }
        return out;
    }

    std::vector<std::vector<Rational>> all_vertex_positions() const {
        std::vector<std::vector<Rational>> out(static_cast<std::size_t>(vertex_count()));
        std::vector<long> coords(static_cast<std::size_t>(dim), 0);
        while (true) {
            out[static_cast<std::size_t>(vertex_index(coords))] = vertex_position(coords);
            int a = dim - 1;
            while (a >= 0 && coords[static_cast<std::size_t>(a)] + 1 >= vertices_per_axis(a)) --a;
            if (a < 0) break;
            ++coords[static_cast<std::size_t>(a)];
            for (int b = a + 1; b < dim; ++b) coords[static_cast<std::size_t>(b)] = 0;
        }
        return out;
    }
};

} // namespace detail

/// Rasterizes a scene into an arrangement: the ambient complex is the
/// Freudenthal-triangulated bounding-box grid at `resolution` cells per unit,
/// and each primitive becomes the subcomplex of simplices all of whose
/// vertices satisfy it. The homotopy type is only faithful for sufficiently
/// fine resolution on well-conditioned inputs; doubling the resolution until
/// the reported Betti numbers stabilize twice is the recommended check.
inline Arrangement ingest_geometric(const Scene& scene, long resolution) {
    if (resolution <= 0) throw validation_error("resolution must be positive");
    if (scene.dim < 1 || scene.dim > 3) throw validation_error("scene dimension must be 1, 2 or 3");
    if (scene.primitives.empty()) throw validation_error("scene has no primitives");
    if (static_cast<int>(scene.bbox_min.size()) != scene.dim ||
        static_cast<int>(scene.bbox_max.size()) != scene.dim)
        throw validation_error("bounding box does not match the scene dimension");

    detail::FreudenthalGrid grid;
    grid.dim = scene.dim;
    grid.origin = scene.bbox_min;
    grid.step = Rational(1) / Rational(resolution);
    grid.cells_per_axis.resize(static_cast<std::size_t>(scene.dim));
    for (int a = 0; a < scene.dim; ++a) {
        const Rational extent = scene.bbox_max[static_cast<std::size_t>(a)] -
                                scene.bbox_min[static_cast<std::size_t>(a)];
        if (extent <= 0) throw validation_error("bounding box must have positive extent");
        const Rational cells = extent * Rational(resolution);
        Integer whole = numerator(cells) / denominator(cells);
        if (Rational(whole) < cells) whole += 1;
        grid.cells_per_axis[static_cast<std::size_t>(a)] = static_cast<long>(whole);
    }

    const SimplicialComplex ambient = SimplicialComplex::from_maximal(
        static_cast<int>(grid.vertex_count()), grid.top_simplices());
    const auto positions = grid.all_vertex_positions();

    std::vector<char> inside(positions.size());
    std::vector<SimplicialComplex> members;
    for (const auto& primitive : scene.primitives) {
        parallel_for(positions.size(), [&](std::size_t v) {
            inside[v] = primitive.contains(positions[v]) ? 1 : 0;
        });
        std::vector<Simplex> kept;
        for (int p = 0; p <= ambient.dim(); ++p)
            for (const auto& s : ambient.simplices(p)) {
                bool all = true;
                for (int v : s)
                    if (!inside[static_cast<std::size_t>(v)]) {
                        all = false;
                        break;
                    }
                if (all) kept.push_back(s);
            }
        members.push_back(SimplicialComplex::from_simplices(ambient.vertex_count(), kept));
    }
    return Arrangement(ambient, std::move(members));
}

} // namespace coverhom
