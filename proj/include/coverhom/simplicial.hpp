#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "coverhom/errors.hpp"

namespace coverhom {

/// A simplex is a strictly increasing tuple of vertex ids; a p-simplex has
/// p+1 entries.
using Simplex = std::vector<int>;

inline bool is_valid_simplex(const Simplex& s, int vertex_count) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= vertex_count) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
}

/// Finite abstract simplicial complex on vertices 0..vertex_count-1, closed
/// under taking faces. Simplices are kept sorted lexicographically within
/// each dimension, which fixes the basis order of every cochain complex
/// built from it.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex empty(int vertex_count) {
        SimplicialComplex k;
        k.vertex_count_ = vertex_count;
        return k;
    }

    /// Builds from an explicit simplex set; rejects sets not closed under
    /// taking faces.
    static SimplicialComplex from_simplices(int vertex_count, const std::vector<Simplex>& simplices) {
        SimplicialComplex k = collect(vertex_count, simplices);
        for (const auto& level : k.by_dim_)
            for (const auto& s : level)
                if (s.size() > 1)
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        Simplex face = s;
                        face.erase(face.begin() + static_cast<long>(i));
                        if (!k.contains(face))
                            throw validation_error("simplex set is not closed under faces");
                    }
        return k;
    }

    /// Builds the closure of a list of (typically maximal) simplices.
    static SimplicialComplex from_maximal(int vertex_count, const std::vector<Simplex>& maximal) {
        std::set<Simplex> closure;
        std::vector<Simplex> stack(maximal.begin(), maximal.end());
        for (const auto& s : stack)
            if (!is_valid_simplex(s, vertex_count))
                throw validation_error("invalid simplex in complex description");
        while (!stack.empty()) {
            Simplex s = std::move(stack.back());
            stack.pop_back();
            if (!closure.insert(s).second) continue;
            if (s.size() > 1)
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<long>(i));
                    stack.push_back(std::move(face));
                }
        }
        return collect(vertex_count, {closure.begin(), closure.end()});
    }

    /// The full n-simplex Delta_n on vertices 0..n.
    static SimplicialComplex full_simplex(int n) {
        Simplex top(static_cast<std::size_t>(n) + 1);
        std::iota(top.begin(), top.end(), 0);
        return from_maximal(n + 1, {top});
    }

    /// The boundary of Delta_n (all proper faces).
    static SimplicialComplex simplex_boundary(int n) {
        if (n < 1) throw validation_error("simplex boundary needs n >= 1");
        std::vector<Simplex> facets;
        for (int omit = 0; omit <= n; ++omit) {
            Simplex f;
            for (int v = 0; v <= n; ++v)
                if (v != omit) f.push_back(v);
            facets.push_back(std::move(f));
        }
        return from_maximal(n + 1, facets);
    }

    int vertex_count() const { return vertex_count_; }
    bool is_empty() const { return by_dim_.empty(); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t simplex_count() const {
        std::size_t n = 0;
        for (const auto& level : by_dim_) n += level.size();
        return n;
    }

    std::size_t count(int p) const {
        return p >= 0 && p <= dim() ? by_dim_[static_cast<std::size_t>(p)].size() : 0;
    }

    const std::vector<Simplex>& simplices(int p) const {
        static const std::vector<Simplex> none;
        return p >= 0 && p <= dim() ? by_dim_[static_cast<std::size_t>(p)] : none;
    }

    std::vector<Simplex> all_simplices() const {
        std::vector<Simplex> out;
        for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    bool contains(const Simplex& s) const {
        const int p = static_cast<int>(s.size()) - 1;
        if (p < 0 || p > dim()) return false;
        const auto& level = by_dim_[static_cast<std::size_t>(p)];
        return std::binary_search(level.begin(), level.end(), s);
    }

    /// Position of a p-simplex in the degree-p basis.
    std::size_t index_of(const Simplex& s) const {
        const int p = static_cast<int>(s.size()) - 1;
        const auto& level = by_dim_[static_cast<std::size_t>(p)];
        const auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s) throw validation_error("simplex not in complex");
        return static_cast<std::size_t>(it - level.begin());
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const {
        if (vertex_count_ != other.vertex_count_) return false;
        for (const auto& level : by_dim_)
            for (const auto& s : level)
                if (!other.contains(s)) return false;
        return true;
    }

    bool operator==(const SimplicialComplex& other) const {
        return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_;
    }

    /// Per-vertex connected component labels (-1 for vertices absent from the
    /// complex); labels are consecutive, ordered by smallest member vertex.
    std::vector<int> component_labels() const {
        std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (const auto& e : simplices(1)) {
            const int a = find(e[0]), b = find(e[1]);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
        std::vector<int> labels(static_cast<std::size_t>(vertex_count_), -1);
        int next = 0;
        for (const auto& v : simplices(0)) {
            const int root = find(v[0]);
            if (labels[static_cast<std::size_t>(root)] == -1) labels[static_cast<std::size_t>(root)] = next++;
            labels[static_cast<std::size_t>(v[0])] = labels[static_cast<std::size_t>(root)];
        }
        return labels;
    }

    int component_count() const {
        int n = 0;
        for (int l : component_labels()) n = std::max(n, l + 1);
        return n;
    }

private:
    static SimplicialComplex collect(int vertex_count, const std::vector<Simplex>& simplices) {
        if (vertex_count < 0) throw validation_error("negative vertex count");
        SimplicialComplex k;
        k.vertex_count_ = vertex_count;
        for (const auto& s : simplices) {
            if (!is_valid_simplex(s, vertex_count))
                throw validation_error("invalid simplex in complex description");
            const std::size_t p = s.size() - 1;
            if (k.by_dim_.size() <= p) k.by_dim_.resize(p + 1);
            k.by_dim_[p].push_back(s);
        }
        for (auto& level : k.by_dim_) {
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
        return k;
    }

    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Simplexwise intersection of two subcomplexes of a common ambient complex.
inline SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count())
        throw validation_error("intersection requires a common vertex set");
    std::vector<Simplex> common;
    for (int p = 0; p <= std::min(a.dim(), b.dim()); ++p) {
        const auto& la = a.simplices(p);
        const auto& lb = b.simplices(p);
        std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
    }
    return SimplicialComplex::from_simplices(a.vertex_count(), common);
}

inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count())
        throw validation_error("union requires a common vertex set");
    std::vector<Simplex> all = a.all_simplices();
    const auto more = b.all_simplices();
    all.insert(all.end(), more.begin(), more.end());
    return SimplicialComplex::from_simplices(a.vertex_count(), all);
}

/// Cone over `base` with the given apex: every simplex of the base, its join
/// with the apex, and the apex itself.
inline SimplicialComplex cone(const SimplicialComplex& base, int apex) {
    if (apex < 0 || apex >= base.vertex_count()) throw validation_error("cone apex out of range");
    std::vector<Simplex> simplices = base.all_simplices();
    simplices.push_back({apex});
    for (const auto& s : base.all_simplices()) {
        if (std::binary_search(s.begin(), s.end(), apex)) continue;
        Simplex joined = s;
        joined.insert(std::upper_bound(joined.begin(), joined.end(), apex), apex);
        simplices.push_back(std::move(joined));
    }
    return SimplicialComplex::from_simplices(base.vertex_count(), simplices);
}

/// One round of barycentric subdivision. Vertices of the result are the
/// simplices of the input (in global lexicographic-by-dimension order);
/// simplices are flags of proper inclusions.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    const auto cells = k.all_simplices();
    std::map<Simplex, int> id;
    for (std::size_t i = 0; i < cells.size(); ++i) id[cells[i]] = static_cast<int>(i);

    std::vector<Simplex> flags;
    // Depth-first extension of ascending inclusion chains.
    std::vector<std::pair<Simplex, Simplex>> stack; // (chain of ids, top cell)
    for (const auto& c : cells) stack.push_back({{id[c]}, c});
    while (!stack.empty()) {
        auto [chain, top] = std::move(stack.back());
        stack.pop_back();
        flags.push_back(chain);
        for (const auto& c : cells) {
            if (c.size() <= top.size()) continue;
            if (!std::includes(c.begin(), c.end(), top.begin(), top.end())) continue;
            Simplex longer = chain;
            longer.push_back(id[c]);
            std::sort(longer.begin(), longer.end());
            stack.push_back({std::move(longer), c});
        }
    }
    return SimplicialComplex::from_maximal(static_cast<int>(cells.size()), flags);
}

} // namespace coverhom
