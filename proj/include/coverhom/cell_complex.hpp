#pragma once

#include <map>
#include <string>
#include <vector>

#include "coverhom/cochain.hpp"

namespace coverhom {

/// Finite regular cell complex given combinatorially: cells with a dimension
/// and, per cell, the signed incidence coefficients (+-1) of its
/// codimension-one faces. Construction verifies that faces drop dimension by
/// exactly one and that the boundary of a boundary vanishes over Q.
class RegularCellComplex {
public:
    struct Cell {
        long id;
        int dim;
    };

    RegularCellComplex(std::vector<Cell> cells, std::map<long, std::map<long, int>> incidence)
        : cells_(std::move(cells)), incidence_(std::move(incidence)) {
        for (const auto& c : cells_) {
            if (c.dim < 0) throw validation_error("cell with negative dimension");
            if (!dim_of_.emplace(c.id, c.dim).second)
                throw validation_error("duplicate cell id " + std::to_string(c.id));
        }
        for (const auto& [id, faces] : incidence_) {
            const auto it = dim_of_.find(id);
            if (it == dim_of_.end())
                throw validation_error("incidence refers to unknown cell " + std::to_string(id));
            for (const auto& [face, coeff] : faces) {
                const auto jt = dim_of_.find(face);
                if (jt == dim_of_.end())
                    throw validation_error("incidence refers to unknown face " + std::to_string(face));
                if (jt->second != it->second - 1)
                    throw validation_error("face of a cell must drop dimension by exactly one");
                if (coeff != 1 && coeff != -1)
                    throw validation_error("incidence coefficients must be +1 or -1");
            }
        }
        for (const auto& c : cells_)
            if (c.dim >= 1 && boundary_of(c.id).empty())
                throw validation_error("positive-dimensional cell with empty boundary");
        check_boundary_squares_to_zero();
        index_cells();
    }

    int dim() const {
        int d = -1;
        for (const auto& c : cells_) d = std::max(d, c.dim);
        return d;
    }

    std::size_t cell_count() const { return cells_.size(); }

    std::size_t count(int p) const {
        return p >= 0 && p < static_cast<int>(by_dim_.size()) ? by_dim_[static_cast<std::size_t>(p)].size()
                                                              : 0;
    }

    /// Cells of dimension p in ascending id order.
    const std::vector<long>& cells_of_dim(int p) const {
        static const std::vector<long> none;
        return p >= 0 && p < static_cast<int>(by_dim_.size()) ? by_dim_[static_cast<std::size_t>(p)]
                                                              : none;
    }

    const std::map<long, int>& boundary_of(long id) const {
        static const std::map<long, int> none;
        const auto it = incidence_.find(id);
        return it == incidence_.end() ? none : it->second;
    }

    /// Cellular cochain complex: dims count the cells per dimension and
    /// delta^p is the transpose of the degree-(p+1) incidence.
    CochainComplex cochain() const {
        const int top = dim();
        if (top < 0) return CochainComplex({}, {});
        std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1);
        for (int p = 0; p <= top; ++p) dims[static_cast<std::size_t>(p)] = count(p);

        std::vector<RationalSparseMatrix> diffs;
        for (int p = 0; p < top; ++p) {
            const auto& generators = cells_of_dim(p + 1);
            IncidenceColumns cols(generators.size());
            for (std::size_t g = 0; g < generators.size(); ++g)
                for (const auto& [face, coeff] : boundary_of(generators[g]))
                    cols[g][position_.at(face)] = coeff;
            diffs.push_back(coboundary_matrix(dims[static_cast<std::size_t>(p) + 1],
                                              dims[static_cast<std::size_t>(p)], cols));
        }
        return CochainComplex(std::move(dims), std::move(diffs));
    }

private:
    void check_boundary_squares_to_zero() {
        for (const auto& c : cells_) {
            if (c.dim < 2) continue;
            std::map<long, long> acc;
            for (const auto& [face, coeff] : boundary_of(c.id))
                for (const auto& [sub, sub_coeff] : boundary_of(face))
                    acc[sub] += static_cast<long>(coeff) * sub_coeff;
            for (const auto& [sub, total] : acc)
                if (total != 0)
                    throw validation_error("boundary of boundary is nonzero at cell " +
                                           std::to_string(c.id));
        }
    }

    void index_cells() {
        const int top = dim();
        by_dim_.assign(top >= 0 ? static_cast<std::size_t>(top) + 1 : 0, {});
        for (const auto& c : cells_) by_dim_[static_cast<std::size_t>(c.dim)].push_back(c.id);
        for (auto& level : by_dim_) std::sort(level.begin(), level.end());
        for (const auto& level : by_dim_)
            for (std::size_t i = 0; i < level.size(); ++i) position_[level[i]] = i;
    }

    std::vector<Cell> cells_;
    std::map<long, std::map<long, int>> incidence_;
    std::map<long, int> dim_of_;
    std::vector<std::vector<long>> by_dim_;
    std::map<long, std::size_t> position_;
};

inline CochainComplex cellular_cochain_complex(const RegularCellComplex& c) { return c.cochain(); }

} // namespace coverhom
