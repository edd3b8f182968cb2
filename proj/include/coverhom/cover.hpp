#pragma once

#include <utility>
#include <vector>

#include "coverhom/cochain.hpp"
#include "coverhom/parallel.hpp"
#include "coverhom/simplicial.hpp"

namespace coverhom {

namespace detail {

/// All strictly increasing index tuples of the given size from 0..n-1, in
/// lexicographic order.
inline std::vector<std::vector<int>> index_tuples(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size <= 0 || size > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(size));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

} // namespace detail

/// An ordered cover of a simplicial complex by subcomplexes whose union is
/// the whole complex.
class Cover {
public:
    Cover(SimplicialComplex ambient, std::vector<SimplicialComplex> members)
        : ambient_(std::move(ambient)), members_(std::move(members)) {
        if (members_.empty()) throw validation_error("cover needs at least one member");
        SimplicialComplex joined = SimplicialComplex::empty(ambient_.vertex_count());
        for (const auto& m : members_) {
            if (!m.is_subcomplex_of(ambient_))
                throw validation_error("cover member is not a subcomplex of the ambient complex");
            joined = union_of(joined, m);
        }
        if (!(joined == ambient_))
            throw validation_error("cover members do not cover the ambient complex");
    }

    const SimplicialComplex& ambient() const { return ambient_; }
    const std::vector<SimplicialComplex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    /// The subcomplex lying in every member named by the (strictly
    /// increasing) index tuple.
    SimplicialComplex intersection_of(const std::vector<int>& tuple) const {
        if (tuple.empty()) throw validation_error("empty intersection tuple");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= size()) throw validation_error("cover index out of range");
            if (i > 0 && tuple[i - 1] >= tuple[i])
                throw validation_error("intersection tuple must be strictly increasing");
        }
        SimplicialComplex acc = members_[static_cast<std::size_t>(tuple[0])];
        for (std::size_t i = 1; i < tuple.size(); ++i)
            acc = intersection(acc, members_[static_cast<std::size_t>(tuple[i])]);
        return acc;
    }

private:
    SimplicialComplex ambient_;
    std::vector<SimplicialComplex> members_;
};

/// One basis element of the nerve complex: a connected component of the
/// intersection indexed by the tuple.
struct NerveBasisElement {
    std::vector<int> tuple;
    int component;
};

/// The nerve complex of a cover: degree p is spanned by the connected
/// components of all (p+1)-wise intersections, with the alternating
/// restriction sums as differentials.
class NerveComplex {
public:
    NerveComplex(CochainComplex complex, std::vector<std::vector<NerveBasisElement>> basis)
        : complex_(std::move(complex)), basis_(std::move(basis)) {
        for (std::size_t p = 0; p < basis_.size(); ++p)
            if (basis_[p].size() != complex_.dim(p))
                throw validation_error("nerve basis size does not match complex dimension");
    }

    const CochainComplex& complex() const { return complex_; }
    const std::vector<NerveBasisElement>& basis(std::size_t p) const { return basis_[p]; }
    std::vector<long long> betti() const { return complex_.betti(); }

private:
    CochainComplex complex_;
    std::vector<std::vector<NerveBasisElement>> basis_;
};

/// Builds the nerve complex truncated after degree `truncation`. The
/// differential entry between a component D of a deep intersection and a
/// component C of the intersection with index alpha_i omitted is (-1)^i when
/// D lies inside C; empty intersections contribute nothing.
inline NerveComplex nerve_complex(const Cover& cover, int truncation) {
    if (truncation < 0) throw validation_error("nerve truncation must be >= 0");
    const int n = cover.size();
    const int top = std::min(truncation, n - 1);

    struct Level {
        std::vector<std::vector<int>> tuples;                 // nonempty intersections only
        std::vector<SimplicialComplex> complexes;             // aligned with tuples
        std::vector<std::vector<int>> vertex_labels;          // component labels per tuple
        std::vector<std::size_t> basis_offset;                // index of first component
        std::size_t total = 0;
    };

    std::vector<Level> levels(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
        Level& level = levels[static_cast<std::size_t>(p)];
        const auto all = detail::index_tuples(n, p + 1);
        std::vector<SimplicialComplex> computed(all.size());
        parallel_for(all.size(), [&](std::size_t i) { computed[i] = cover.intersection_of(all[i]); });
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (computed[i].is_empty()) continue;
            level.tuples.push_back(all[i]);
            level.complexes.push_back(computed[i]);
            level.vertex_labels.push_back(computed[i].component_labels());
            level.basis_offset.push_back(level.total);
            level.total += static_cast<std::size_t>(computed[i].component_count());
        }
    }

    std::vector<std::size_t> dims(static_cast<std::size_t>(truncation) + 1, 0);
    std::vector<std::vector<NerveBasisElement>> basis(dims.size());
    for (int p = 0; p <= top; ++p) {
        const Level& level = levels[static_cast<std::size_t>(p)];
        dims[static_cast<std::size_t>(p)] = level.total;
        for (std::size_t i = 0; i < level.tuples.size(); ++i) {
            const int comps = level.complexes[i].component_count();
            for (int c = 0; c < comps; ++c)
                basis[static_cast<std::size_t>(p)].push_back({level.tuples[i], c});
        }
    }

    std::vector<RationalSparseMatrix> diffs;
    for (std::size_t p = 0; p + 1 < dims.size(); ++p) {
        RationalSparseMatrix delta(dims[p + 1], dims[p]);
        if (static_cast<int>(p) + 1 <= top) {
            const Level& deep = levels[p + 1];
            const Level& shallow = levels[p];
            // Locate shallow tuples by binary search over the sorted tuple list.
            for (std::size_t ti = 0; ti < deep.tuples.size(); ++ti) {
                const auto& tuple = deep.tuples[ti];
                const auto& labels = deep.vertex_labels[ti];
                // one representative vertex per component
                std::vector<int> representative(
                    static_cast<std::size_t>(deep.complexes[ti].component_count()), -1);
                for (std::size_t v = 0; v < labels.size(); ++v)
                    if (labels[v] >= 0 && representative[static_cast<std::size_t>(labels[v])] == -1)
                        representative[static_cast<std::size_t>(labels[v])] = static_cast<int>(v);
                for (std::size_t omit = 0; omit < tuple.size(); ++omit) {
                    std::vector<int> sub = tuple;
                    sub.erase(sub.begin() + static_cast<long>(omit));
                    const auto it =
                        std::lower_bound(shallow.tuples.begin(), shallow.tuples.end(), sub);
                    if (it == shallow.tuples.end() || *it != sub)
                        throw validation_error("nonempty intersection with empty sub-intersection");
                    const std::size_t si = static_cast<std::size_t>(it - shallow.tuples.begin());
                    const int sign = omit % 2 == 0 ? 1 : -1;
                    for (std::size_t comp = 0; comp < representative.size(); ++comp) {
                        const int v = representative[comp];
                        const int shallow_comp = shallow.vertex_labels[si][static_cast<std::size_t>(v)];
                        delta.add(deep.basis_offset[ti] + comp,
                                  shallow.basis_offset[si] + static_cast<std::size_t>(shallow_comp),
                                  Rational(sign));
                    }
                }
            }
        }
        diffs.push_back(std::move(delta));
    }
    return NerveComplex(CochainComplex(std::move(dims), std::move(diffs)), std::move(basis));
}

/// b_0 and b_1 of the covered set from the degree<=2 truncated nerve. The
/// members are assumed contractible; this is a caller contract and is not
/// checked.
inline std::pair<long long, long long> betti01_from_cover(const Cover& cover) {
    const NerveComplex nerve = nerve_complex(cover, 2);
    const std::size_t r0 = rank(nerve.complex().differential(0));
    const std::size_t r1 = rank(nerve.complex().differential(1));
    const long long b0 = static_cast<long long>(nerve.complex().dim(0)) - static_cast<long long>(r0);
    const long long b1 = static_cast<long long>(nerve.complex().dim(1)) - static_cast<long long>(r1) -
                         static_cast<long long>(r0);
    return {b0, b1};
}

/// Side-by-side comparison of the truncated-nerve cohomology with the Betti
/// numbers of the union, illustrating that component data alone cannot see
/// degree >= 2.
struct NerveFailureReport {
    std::vector<long long> nerve_cohomology; // of the degree<=3 truncated nerve
    std::vector<long long> direct_betti;     // of the union complex
    long long nerve_h2 = 0;
    long long direct_b2 = 0;
};

inline NerveFailureReport nerve_failure_demo(const Cover& cover) {
    NerveFailureReport report;
    report.nerve_cohomology = nerve_complex(cover, 3).betti();
    report.direct_betti = betti(cover.ambient());
    report.nerve_h2 = report.nerve_cohomology.size() > 2 ? report.nerve_cohomology[2] : 0;
    report.direct_b2 = report.direct_betti.size() > 2 ? report.direct_betti[2] : 0;
    return report;
}

} // namespace coverhom
