#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coverhom/cell_complex.hpp"
#include "coverhom/cover.hpp"

namespace coverhom {

/// A finite family of subcomplexes of a common ambient complex. Unlike a
/// Cover, the sets need not exhaust the ambient complex; the object of study
/// is their union.
class Arrangement {
public:
    Arrangement(SimplicialComplex ambient, std::vector<SimplicialComplex> sets)
        : ambient_(std::move(ambient)), sets_(std::move(sets)) {
        if (sets_.empty()) throw validation_error("arrangement needs at least one set");
        for (const auto& s : sets_)
            if (!s.is_subcomplex_of(ambient_))
                throw validation_error("arrangement set is not a subcomplex of the ambient complex");
    }

    const SimplicialComplex& ambient() const { return ambient_; }
    const std::vector<SimplicialComplex>& sets() const { return sets_; }
    int size() const { return static_cast<int>(sets_.size()); }

    SimplicialComplex intersection_of(const std::vector<int>& tuple) const {
        if (tuple.empty()) throw validation_error("empty intersection tuple");
        SimplicialComplex acc = sets_.at(static_cast<std::size_t>(tuple[0]));
        for (std::size_t i = 1; i < tuple.size(); ++i)
            acc = intersection(acc, sets_.at(static_cast<std::size_t>(tuple[i])));
        return acc;
    }

    SimplicialComplex union_complex() const {
        SimplicialComplex u = SimplicialComplex::empty(ambient_.vertex_count());
        for (const auto& s : sets_) u = union_of(u, s);
        return u;
    }

private:
    SimplicialComplex ambient_;
    std::vector<SimplicialComplex> sets_;
};

/// One cell of the truncated homotopy colimit: the product of the face
/// spanned by the index tuple with a simplex of the corresponding
/// intersection. Its dimension is (|tuple| - 1) + dim(simplex).
struct HocolimCell {
    std::vector<int> tuple;
    Simplex simplex;
};

/// Blow-up cell complex of the arrangement truncated at tuples of size
/// <= ell + 2. The boundary of a product cell is the simplex-factor boundary
/// of the tuple plus (-1)^(|tuple|-1) times the boundary of the simplex
/// factor.
inline RegularCellComplex hocolim_complex(const Arrangement& arr, int ell,
                                          std::vector<HocolimCell>* cells_out = nullptr) {
    if (ell < 0) throw validation_error("truncation level must be >= 0");
    const int n = arr.size();
    const int max_tuple = std::min(n, ell + 2);

    struct TupleData {
        std::vector<int> tuple;
        SimplicialComplex complex;
    };
    std::vector<TupleData> data;
    std::map<std::vector<int>, std::size_t> tuple_pos;
    for (int size = 1; size <= max_tuple; ++size) {
        const auto tuples = detail::index_tuples(n, size);
        std::vector<SimplicialComplex> computed(tuples.size());
        parallel_for(tuples.size(), [&](std::size_t i) { computed[i] = arr.intersection_of(tuples[i]); });
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (computed[i].is_empty()) continue;
            tuple_pos[tuples[i]] = data.size();
            data.push_back({tuples[i], std::move(computed[i])});
        }
    }

    // Cell ids: consecutive, tuples in the order above, simplices in the
    // complex order within each tuple.
    std::vector<long> first_id(data.size() + 1, 0);
    for (std::size_t i = 0; i < data.size(); ++i)
        first_id[i + 1] = first_id[i] + static_cast<long>(data[i].complex.simplex_count());

    auto cell_id = [&](std::size_t tuple_index, const Simplex& s) {
        const auto& complex = data[tuple_index].complex;
        long off = 0;
        for (int p = 0; p < static_cast<int>(s.size()) - 1; ++p)
            off += static_cast<long>(complex.count(p));
        return first_id[tuple_index] + off + static_cast<long>(complex.index_of(s));
    };

    std::vector<RegularCellComplex::Cell> cells;
    std::map<long, std::map<long, int>> incidence;
    std::vector<HocolimCell> labels;
    for (std::size_t ti = 0; ti < data.size(); ++ti) {
        const auto& tuple = data[ti].tuple;
        const auto& complex = data[ti].complex;
        for (const auto& s : complex.all_simplices()) {
            const long id = cell_id(ti, s);
            const int dim = static_cast<int>(tuple.size()) - 1 + static_cast<int>(s.size()) - 1;
            cells.push_back({id, dim});
            if (cells_out) labels.push_back({tuple, s});

            std::map<long, int>& faces = incidence[id];
            if (tuple.size() >= 2) {
                for (std::size_t omit = 0; omit < tuple.size(); ++omit) {
                    std::vector<int> sub = tuple;
                    sub.erase(sub.begin() + static_cast<long>(omit));
                    const std::size_t sub_ti = tuple_pos.at(sub);
                    faces[cell_id(sub_ti, s)] += (omit % 2 == 0 ? 1 : -1);
                }
            }
            if (s.size() >= 2) {
                const int tuple_sign = (tuple.size() - 1) % 2 == 0 ? 1 : -1;
                for (std::size_t omit = 0; omit < s.size(); ++omit) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<long>(omit));
                    faces[cell_id(ti, face)] += tuple_sign * (omit % 2 == 0 ? 1 : -1);
                }
            }
            if (faces.empty()) incidence.erase(id);
        }
    }
    if (cells_out) *cells_out = std::move(labels);
    return RegularCellComplex(std::move(cells), std::move(incidence));
}

/// Betti numbers b_0..b_ell of the union of the arrangement, computed from
/// the truncated homotopy colimit.
inline std::vector<long long> arrangement_betti(const Arrangement& arr, int ell) {
    const RegularCellComplex complex = hocolim_complex(arr, ell);
    std::vector<long long> b = complex.cochain().betti();
    b.resize(static_cast<std::size_t>(ell) + 1, 0);
    return b;
}

/// Cell counts of the truncated homotopy colimit broken down by tuple size,
/// together with the coarse combinatorial bound
/// sum_j C(n, j) * #cells(ambient).
struct CellCountProfile {
    std::map<int, std::size_t> cells_by_tuple_size;
    std::size_t total = 0;
    std::size_t bound = 0;
};

inline CellCountProfile cell_count_profile(const Arrangement& arr, int ell) {
    if (ell < 0) throw validation_error("truncation level must be >= 0");
    CellCountProfile profile;
    const int n = arr.size();
    const int max_tuple = std::min(n, ell + 2);
    for (int size = 1; size <= max_tuple; ++size) {
        std::size_t count = 0;
        const auto tuples = detail::index_tuples(n, size);
        std::vector<std::size_t> counts(tuples.size(), 0);
        parallel_for(tuples.size(), [&](std::size_t i) {
            counts[i] = arr.intersection_of(tuples[i]).simplex_count();
        });
        for (std::size_t c : counts) count += c;
        profile.cells_by_tuple_size[size] = count;
        profile.total += count;
    }
    const std::size_t ambient_cells = arr.ambient().simplex_count();
    for (int size = 1; size <= max_tuple; ++size) {
        // binomial(n, size), exact in 64 bits for the supported range
        unsigned long long choose = 1;
        for (int i = 0; i < size; ++i)
            choose = choose * static_cast<unsigned long long>(n - i) / static_cast<unsigned long long>(i + 1);
        profile.bound += static_cast<std::size_t>(choose) * ambient_cells;
    }
    return profile;
}

} // namespace coverhom
