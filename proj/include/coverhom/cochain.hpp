#pragma once

#include <map>
#include <vector>

#include "coverhom/parallel.hpp"
#include "coverhom/simplicial.hpp"
#include "coverhom/sparse_matrix.hpp"

namespace coverhom {

/// Integer incidence data of one degree: for each degree-(p+1) generator, the
/// signed coefficients of its degree-p faces. Complexes are assembled in this
/// integer-only form and converted to rational matrices explicitly.
using IncidenceColumns = std::vector<std::map<std::size_t, int>>;

inline RationalSparseMatrix coboundary_matrix(std::size_t target_dim, std::size_t source_dim,
                                              const IncidenceColumns& generator_faces) {
    if (generator_faces.size() != target_dim)
        throw validation_error("incidence data does not match generator count");
    RationalSparseMatrix delta(target_dim, source_dim);
    for (std::size_t g = 0; g < target_dim; ++g)
        for (const auto& [face, coeff] : generator_faces[g])
            if (coeff != 0) delta.set(g, face, Rational(coeff));
    return delta;
}

/// Finite complex of Q-vector spaces: one dimension per degree plus the
/// differentials delta^p mapping degree p to degree p+1. Construction checks
/// shape compatibility and that consecutive differentials compose to zero.
class CochainComplex {
public:
    CochainComplex() = default;

    CochainComplex(std::vector<std::size_t> dims, std::vector<RationalSparseMatrix> differentials)
        : dims_(std::move(dims)), diff_(std::move(differentials)) {
        if (!dims_.empty() && diff_.size() + 1 != dims_.size())
            throw validation_error("cochain complex needs one differential per adjacent degree pair");
        for (std::size_t p = 0; p + 1 < dims_.size(); ++p)
            if (diff_[p].rows() != dims_[p + 1] || diff_[p].cols() != dims_[p])
                throw validation_error("differential shape mismatch at degree " + std::to_string(p));
        for (std::size_t p = 0; p + 2 < dims_.size(); ++p)
            if (!multiply(diff_[p + 1], diff_[p]).is_zero())
                throw validation_error("delta^{p+1} . delta^p != 0 at degree " + std::to_string(p));
    }

    std::size_t degrees() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t p) const { return p < dims_.size() ? dims_[p] : 0; }

    /// delta^p; a zero-shaped matrix outside the stored range.
    RationalSparseMatrix differential(std::size_t p) const {
        if (p < diff_.size()) return diff_[p];
        return RationalSparseMatrix(dim(p + 1), dim(p));
    }

    /// Betti numbers b_p = dim C^p - rank delta^p - rank delta^{p-1},
    /// reported through the top stored degree (trailing zeros retained).
    std::vector<long long> betti() const {
        if (dims_.empty()) return {};
        std::vector<std::size_t> ranks(diff_.size(), 0);
        parallel_for(diff_.size(), [&](std::size_t p) { ranks[p] = rank(diff_[p]); });
        std::vector<long long> b(dims_.size(), 0);
        for (std::size_t p = 0; p < dims_.size(); ++p) {
            long long v = static_cast<long long>(dims_[p]);
            if (p < ranks.size()) v -= static_cast<long long>(ranks[p]);
            if (p > 0 && p - 1 < ranks.size()) v -= static_cast<long long>(ranks[p - 1]);
            b[p] = v;
        }
        return b;
    }

    /// Alternating sum over degrees; equals the alternating sum of the Betti
    /// numbers by rank-nullity telescoping.
    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t p = 0; p < dims_.size(); ++p)
            chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(dims_[p]);
        return chi;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<RationalSparseMatrix> diff_;
};

/// Simplicial cochain complex with the alternating-face-sum differential:
/// the entry of delta^p at ((p+1)-simplex sigma, p-face sigma minus its i-th
/// vertex) is (-1)^i.
inline CochainComplex cochain_complex(const SimplicialComplex& k) {
    if (k.is_empty()) return CochainComplex({}, {});
    std::vector<std::size_t> dims(static_cast<std::size_t>(k.dim()) + 1);
    for (int p = 0; p <= k.dim(); ++p) dims[static_cast<std::size_t>(p)] = k.count(p);

    std::vector<RationalSparseMatrix> diffs;
    for (int p = 0; p + 1 <= k.dim(); ++p) {
        const auto& generators = k.simplices(p + 1);
        IncidenceColumns cols(generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const Simplex& s = generators[g];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                cols[g][k.index_of(face)] += (i % 2 == 0 ? 1 : -1);
            }
        }
        diffs.push_back(coboundary_matrix(dims[static_cast<std::size_t>(p) + 1],
                                          dims[static_cast<std::size_t>(p)], cols));
    }
    return CochainComplex(std::move(dims), std::move(diffs));
}

inline std::vector<long long> betti(const SimplicialComplex& k) { return cochain_complex(k).betti(); }

inline long long euler_characteristic(const SimplicialComplex& k) {
    return cochain_complex(k).euler_characteristic();
}

/// A subcomplex of an ambient complex, modelling the pair (K, L).
struct SubcomplexPair {
    SimplicialComplex ambient;
    SimplicialComplex sub;

    SubcomplexPair(SimplicialComplex ambient_in, SimplicialComplex sub_in)
        : ambient(std::move(ambient_in)), sub(std::move(sub_in)) {
        if (!sub.is_subcomplex_of(ambient))
            throw validation_error("pair: sub is not a subcomplex of the ambient complex");
    }
};

/// Quotient complex C^*(K)/C^*(L): the ambient differentials restricted to
/// the simplices of K that are not in L.
inline CochainComplex relative_cochain_complex(const SubcomplexPair& pair) {
    const SimplicialComplex& k = pair.ambient;
    if (k.is_empty()) return CochainComplex({}, {});

    // Surviving basis per degree (ambient index -> quotient index).
    std::vector<std::map<std::size_t, std::size_t>> surviving(static_cast<std::size_t>(k.dim()) + 1);
    std::vector<std::size_t> dims(static_cast<std::size_t>(k.dim()) + 1, 0);
    for (int p = 0; p <= k.dim(); ++p) {
        const auto& level = k.simplices(p);
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!pair.sub.contains(level[i]))
                surviving[static_cast<std::size_t>(p)][i] = dims[static_cast<std::size_t>(p)]++;
    }

    const CochainComplex full = cochain_complex(k);
    std::vector<RationalSparseMatrix> diffs;
    for (std::size_t p = 0; p + 1 < dims.size(); ++p) {
        RationalSparseMatrix delta(dims[p + 1], dims[p]);
        const RationalSparseMatrix full_delta = full.differential(p);
        for (const auto& [row, qrow] : surviving[p + 1])
            for (const auto& [col, v] : full_delta.row(row)) {
                auto it = surviving[p].find(col);
                if (it != surviving[p].end()) delta.set(qrow, it->second, v);
            }
        diffs.push_back(std::move(delta));
    }
    return CochainComplex(std::move(dims), std::move(diffs));
}

/// Borel-Moore Euler characteristic of a locally closed set presented by the
/// caller as the pair (closure, part of the closure removed).
inline long long borel_moore_euler(const SubcomplexPair& pair) {
    return relative_cochain_complex(pair).euler_characteristic();
}

/// Inclusion-exclusion evaluation of chi of a union of subcomplexes:
/// sum over nonempty index sets I of (-1)^(|I|+1) chi of the intersection.
inline long long euler_inclusion_exclusion(const std::vector<SimplicialComplex>& parts) {
    if (parts.empty()) return 0;
    long long total = 0;
    const std::size_t n = parts.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        SimplicialComplex current;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            current = first ? parts[i] : intersection(current, parts[i]);
            first = false;
        }
        const int bits = __builtin_popcountll(static_cast<unsigned long long>(mask));
        total += (bits % 2 == 1 ? 1 : -1) * euler_characteristic(current);
    }
    return total;
}

} // namespace coverhom
