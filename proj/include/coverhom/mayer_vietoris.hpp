#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coverhom/cover.hpp"

namespace coverhom {

/// First-quadrant double complex with commuting stored differentials
/// (horizontal delta to the right, vertical d upward). The alternating sign
/// needed for a differential on the total complex is applied only at
/// assembly time, never in the stored matrices.
class DoubleComplex {
public:
    DoubleComplex(std::vector<std::vector<std::size_t>> dims,
                  std::vector<std::vector<RationalSparseMatrix>> horizontal,
                  std::vector<std::vector<RationalSparseMatrix>> vertical)
        : dims_(std::move(dims)), horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
        if (dims_.empty() || dims_[0].empty()) throw validation_error("empty double complex grid");
        for (const auto& col : dims_)
            if (col.size() != dims_[0].size())
                throw validation_error("ragged double complex grid");
        validate_shapes();
        validate_compositions();
    }

    int pmax() const { return static_cast<int>(dims_.size()) - 1; }
    int qmax() const { return static_cast<int>(dims_[0].size()) - 1; }

    std::size_t dim(int p, int q) const {
        if (p < 0 || q < 0 || p > pmax() || q > qmax()) return 0;
        return dims_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }

    /// delta^{p,q}: (p,q) -> (p+1,q); zero-shaped outside the stored grid.
    RationalSparseMatrix horizontal(int p, int q) const {
        if (p < 0 || q < 0 || p >= pmax() || q > qmax()) return RationalSparseMatrix(dim(p + 1, q), dim(p, q));
        return horizontal_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }

    /// d^{p,q}: (p,q) -> (p,q+1); zero-shaped outside the stored grid.
    RationalSparseMatrix vertical(int p, int q) const {
        if (p < 0 || q < 0 || p > pmax() || q >= qmax()) return RationalSparseMatrix(dim(p, q + 1), dim(p, q));
        return vertical_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }

    /// Transposed complex: grid positions and the two differentials swap
    /// roles. The second-filtration spectral sequence of a complex is the
    /// first-filtration one of its transpose.
    DoubleComplex transpose() const {
        const int P = pmax(), Q = qmax();
        std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(Q) + 1,
                                                   std::vector<std::size_t>(static_cast<std::size_t>(P) + 1));
        std::vector<std::vector<RationalSparseMatrix>> hor(
            static_cast<std::size_t>(Q), std::vector<RationalSparseMatrix>(static_cast<std::size_t>(P) + 1));
        std::vector<std::vector<RationalSparseMatrix>> ver(
            static_cast<std::size_t>(Q) + 1, std::vector<RationalSparseMatrix>(static_cast<std::size_t>(P)));
        for (int a = 0; a <= Q; ++a)
            for (int b = 0; b <= P; ++b) dims[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = dim(b, a);
        for (int a = 0; a < Q; ++a)
            for (int b = 0; b <= P; ++b)
                hor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = vertical(b, a);
        for (int a = 0; a <= Q; ++a)
            for (int b = 0; b < P; ++b)
                ver[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = horizontal(b, a);
        return DoubleComplex(std::move(dims), std::move(hor), std::move(ver));
    }

private:
    void validate_shapes() const {
        if (static_cast<int>(horizontal_.size()) != pmax())
            throw validation_error("horizontal grid size mismatch");
        if (static_cast<int>(vertical_.size()) != pmax() + 1)
            throw validation_error("vertical grid size mismatch");
        for (const auto& col : horizontal_)
            if (static_cast<int>(col.size()) != qmax() + 1)
                throw validation_error("horizontal grid size mismatch");
        for (const auto& col : vertical_)
            if (static_cast<int>(col.size()) != qmax())
                throw validation_error("vertical grid size mismatch");
        for (int p = 0; p < pmax(); ++p)
            for (int q = 0; q <= qmax(); ++q) {
                const auto& m = horizontal_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (m.rows() != dim(p + 1, q) || m.cols() != dim(p, q))
                    throw validation_error("horizontal differential shape mismatch");
            }
        for (int p = 0; p <= pmax(); ++p)
            for (int q = 0; q < qmax(); ++q) {
                const auto& m = vertical_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (m.rows() != dim(p, q + 1) || m.cols() != dim(p, q))
                    throw validation_error("vertical differential shape mismatch");
            }
    }

    void validate_compositions() const {
        for (int p = 0; p <= pmax(); ++p)
            for (int q = 0; q <= qmax(); ++q) {
                if (p + 2 <= pmax() && !multiply(horizontal(p + 1, q), horizontal(p, q)).is_zero())
                    throw validation_error("delta . delta != 0 in double complex");
                if (q + 2 <= qmax() && !multiply(vertical(p, q + 1), vertical(p, q)).is_zero())
                    throw validation_error("d . d != 0 in double complex");
                if (p + 1 <= pmax() && q + 1 <= qmax()) {
                    const auto path1 = multiply(vertical(p + 1, q), horizontal(p, q));
                    const auto path2 = multiply(horizontal(p, q + 1), vertical(p, q));
                    if (!(path1 == path2))
                        throw validation_error("stored differentials of double complex do not commute");
                }
            }
    }

    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<RationalSparseMatrix>> horizontal_;
    std::vector<std::vector<RationalSparseMatrix>> vertical_;
};

/// Mayer-Vietoris double complex of the cover, truncated to total degree
/// <= t: N^{p,q} is the direct sum over (p+1)-tuples of the degree-q cochains
/// of the tuple intersection, horizontal maps are the alternating
/// restriction sums, vertical maps the simplicial coboundaries.
inline DoubleComplex mv_double_complex(const Cover& cover, int truncation) {
    if (truncation < 0) throw validation_error("truncation must be >= 0");
    const int n = cover.size();
    const int pmax = std::min(n - 1, truncation);

    struct Level {
        std::vector<std::vector<int>> tuples;
        std::vector<SimplicialComplex> complexes;
        std::vector<CochainComplex> cochains;
    };
    std::vector<Level> levels(static_cast<std::size_t>(pmax) + 1);
    int qmax = 0;
    for (int p = 0; p <= pmax; ++p) {
        Level& level = levels[static_cast<std::size_t>(p)];
        level.tuples = detail::index_tuples(n, p + 1);
        level.complexes.resize(level.tuples.size());
        parallel_for(level.tuples.size(),
                     [&](std::size_t i) { level.complexes[i] = cover.intersection_of(level.tuples[i]); });
        for (const auto& c : level.complexes) {
            level.cochains.push_back(cochain_complex(c));
            qmax = std::max(qmax, c.dim());
        }
    }
    qmax = std::min(qmax, truncation);
    if (qmax < 0) qmax = 0;

    auto block_dims = [&](int p, int q) {
        std::vector<std::size_t> sizes;
        for (const auto& c : levels[static_cast<std::size_t>(p)].cochains)
            sizes.push_back(c.dim(static_cast<std::size_t>(q)));
        return sizes;
    };

    std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(pmax) + 1,
                                               std::vector<std::size_t>(static_cast<std::size_t>(qmax) + 1, 0));
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax && p + q <= truncation; ++q) {
            std::size_t total = 0;
            for (std::size_t s : block_dims(p, q)) total += s;
            dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = total;
        }

    // Vertical: block-diagonal coboundaries of the individual intersections.
    std::vector<std::vector<RationalSparseMatrix>> vertical(
        static_cast<std::size_t>(pmax) + 1,
        std::vector<RationalSparseMatrix>(static_cast<std::size_t>(qmax), RationalSparseMatrix()));
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q < qmax; ++q) {
            RationalSparseMatrix d(dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q) + 1],
                                   dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
            if (d.rows() > 0 && d.cols() > 0) {
                std::size_t row_off = 0, col_off = 0;
                for (const auto& c : levels[static_cast<std::size_t>(p)].cochains) {
                    const auto block = c.differential(static_cast<std::size_t>(q));
                    for (std::size_t r = 0; r < block.rows(); ++r)
                        for (const auto& [col, v] : block.row(r)) d.set(row_off + r, col_off + col, v);
                    row_off += c.dim(static_cast<std::size_t>(q) + 1);
                    col_off += c.dim(static_cast<std::size_t>(q));
                }
            }
            vertical[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = std::move(d);
        }

    // Horizontal: alternating restriction sums. A q-simplex of a deep
    // intersection is automatically a q-simplex of every sub-tuple
    // intersection.
    std::vector<std::vector<RationalSparseMatrix>> horizontal(
        static_cast<std::size_t>(std::max(pmax, 0)),
        std::vector<RationalSparseMatrix>(static_cast<std::size_t>(qmax) + 1, RationalSparseMatrix()));
    for (int p = 0; p < pmax; ++p) {
        const Level& shallow = levels[static_cast<std::size_t>(p)];
        const Level& deep = levels[static_cast<std::size_t>(p) + 1];
        std::vector<std::size_t> shallow_offset(shallow.tuples.size() + 1, 0);
        std::vector<std::size_t> deep_offset(deep.tuples.size() + 1, 0);
        for (int q = 0; q <= qmax; ++q) {
            RationalSparseMatrix delta(dims[static_cast<std::size_t>(p) + 1][static_cast<std::size_t>(q)],
                                       dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
            if (delta.rows() > 0 && delta.cols() > 0) {
                for (std::size_t i = 0; i < shallow.tuples.size(); ++i)
                    shallow_offset[i + 1] =
                        shallow_offset[i] + shallow.cochains[i].dim(static_cast<std::size_t>(q));
                for (std::size_t i = 0; i < deep.tuples.size(); ++i)
                    deep_offset[i + 1] = deep_offset[i] + deep.cochains[i].dim(static_cast<std::size_t>(q));
                for (std::size_t ti = 0; ti < deep.tuples.size(); ++ti) {
                    const auto& tuple = deep.tuples[ti];
                    const auto& simplices = deep.complexes[ti].simplices(q);
                    for (std::size_t omit = 0; omit < tuple.size(); ++omit) {
                        std::vector<int> sub = tuple;
                        sub.erase(sub.begin() + static_cast<long>(omit));
                        const auto it = std::lower_bound(shallow.tuples.begin(), shallow.tuples.end(), sub);
                        const std::size_t si = static_cast<std::size_t>(it - shallow.tuples.begin());
                        const int sign = omit % 2 == 0 ? 1 : -1;
                        for (std::size_t s = 0; s < simplices.size(); ++s) {
                            const std::size_t col =
                                shallow_offset[si] + shallow.complexes[si].index_of(simplices[s]);
                            delta.add(deep_offset[ti] + s, col, Rational(sign));
                        }
                    }
                }
            }
            horizontal[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = std::move(delta);
        }
    }

    return DoubleComplex(std::move(dims), std::move(horizontal), std::move(vertical));
}

namespace detail {

/// Total complex assembled with the horizontal blocks signed by (-1)^q, which
/// makes the assembled differential square to zero against the commuting
/// stored differentials.
struct TotalAssembly {
    std::vector<std::size_t> tot_dims;                  // per total degree n
    std::vector<std::vector<std::size_t>> block_offset; // [n][p] -> offset (dim 0 blocks included)
    std::vector<RationalSparseMatrix> differential;     // Tot^n -> Tot^{n+1}
    int pmax = 0;
    int qmax = 0;

    std::size_t offset(int n, int p) const {
        return block_offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
    }
};

inline TotalAssembly assemble_total(const DoubleComplex& dc) {
    TotalAssembly out;
    out.pmax = dc.pmax();
    out.qmax = dc.qmax();
    const int nmax = dc.pmax() + dc.qmax();
    out.tot_dims.assign(static_cast<std::size_t>(nmax) + 1, 0);
    out.block_offset.assign(static_cast<std::size_t>(nmax) + 1,
                            std::vector<std::size_t>(static_cast<std::size_t>(dc.pmax()) + 1, 0));
    for (int n = 0; n <= nmax; ++n) {
        std::size_t off = 0;
        for (int p = 0; p <= dc.pmax(); ++p) {
            out.block_offset[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)] = off;
            const int q = n - p;
            if (q >= 0 && q <= dc.qmax()) off += dc.dim(p, q);
        }
        out.tot_dims[static_cast<std::size_t>(n)] = off;
    }
    for (int n = 0; n < nmax; ++n) {
        RationalSparseMatrix D(out.tot_dims[static_cast<std::size_t>(n) + 1],
                               out.tot_dims[static_cast<std::size_t>(n)]);
        for (int p = 0; p <= dc.pmax(); ++p) {
            const int q = n - p;
            if (q < 0 || q > dc.qmax() || dc.dim(p, q) == 0) continue;
            const std::size_t col_off = out.offset(n, p);
            const auto vert = dc.vertical(p, q);
            const std::size_t vrow_off = out.offset(n + 1, p);
            for (std::size_t r = 0; r < vert.rows(); ++r)
                for (const auto& [c, v] : vert.row(r)) D.set(vrow_off + r, col_off + c, v);
            if (p + 1 <= dc.pmax()) {
                const auto hor = dc.horizontal(p, q);
                const std::size_t hrow_off = out.offset(n + 1, p + 1);
                const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
                for (std::size_t r = 0; r < hor.rows(); ++r)
                    for (const auto& [c, v] : hor.row(r)) D.set(hrow_off + r, col_off + c, sign * v);
            }
        }
        out.differential.push_back(std::move(D));
    }
    return out;
}

} // namespace detail

inline CochainComplex total_complex(const DoubleComplex& dc) {
    auto assembly = detail::assemble_total(dc);
    return CochainComplex(std::move(assembly.tot_dims), std::move(assembly.differential));
}

enum class Filtration {
    first,  // column filtration; E_1 = vertical (d) cohomology
    second, // row filtration; E_1 = horizontal (delta) cohomology
};

/// One page of a spectral sequence: exact dimensions only.
class SpectralPage {
public:
    SpectralPage(int r, Filtration filtration, std::map<std::pair<int, int>, std::size_t> dims)
        : r_(r), filtration_(filtration), dims_(std::move(dims)) {}

    int r() const { return r_; }
    Filtration filtration() const { return filtration_; }

    std::size_t dim(int p, int q) const {
        const auto it = dims_.find({p, q});
        return it == dims_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, std::size_t>& dims() const { return dims_; }

private:
    int r_;
    Filtration filtration_;
    std::map<std::pair<int, int>, std::size_t> dims_;
};

namespace detail {

// Kernel of the total differential restricted to columns >= p, subject to
// vanishing of the output blocks with column index in [p, p + r). Returned as
// vectors in Tot^n coordinates.
struct FiltrationSlice {
    const TotalAssembly& tot;

    std::size_t tot_dim(int n) const {
        if (n < 0 || n >= static_cast<int>(tot.tot_dims.size())) return 0;
        return tot.tot_dims[static_cast<std::size_t>(n)];
    }

    // Offset of the filtration subspace F^p inside Tot^n.
    std::size_t filtration_offset(int n, int p) const {
        if (p <= 0) return 0;
        if (n < 0 || n >= static_cast<int>(tot.tot_dims.size())) return 0;
        if (p > tot.pmax) return tot_dim(n);
        return tot.offset(n, p);
    }

    RationalSparseMatrix restricted_differential(int n, int domain_p) const {
        const std::size_t dom_off = filtration_offset(n, domain_p);
        const std::size_t dom_dim = tot_dim(n) - dom_off;
        if (n < 0 || n >= static_cast<int>(tot.differential.size()))
            return RationalSparseMatrix(tot_dim(n + 1), dom_dim);
        const auto& D = tot.differential[static_cast<std::size_t>(n)];
        RationalSparseMatrix out(D.rows(), dom_dim);
        for (std::size_t r = 0; r < D.rows(); ++r)
            for (const auto& [c, v] : D.row(r))
                if (c >= dom_off) out.set(r, c - dom_off, v);
        return out;
    }

    // Rows of D^n (restricted to domain F^p) landing in target blocks with
    // column index in [p_lo, p_hi).
    RationalSparseMatrix condition_matrix(int n, int domain_p, int p_lo, int p_hi) const {
        const auto D = restricted_differential(n, domain_p);
        const std::size_t row_lo = filtration_offset(n + 1, p_lo);
        const std::size_t row_hi = filtration_offset(n + 1, p_hi);
        RationalSparseMatrix out(row_hi - row_lo, D.cols());
        for (std::size_t r = row_lo; r < row_hi && r < D.rows(); ++r)
            for (const auto& [c, v] : D.row(r)) out.set(r - row_lo, c, v);
        return out;
    }

    // Basis of Z_r^{p,q} = F^p Tot^n with D x vanishing in columns [p, p+r),
    // embedded in Tot^n coordinates.
    std::vector<std::vector<Rational>> cycle_basis(int n, int p, int r) const {
        const std::size_t dom_off = filtration_offset(n, p);
        const auto cond = condition_matrix(n, p, p, p + std::max(r, 0));
        auto kernel = kernel_basis(cond);
        std::vector<std::vector<Rational>> out;
        out.reserve(kernel.size());
        for (auto& k : kernel) {
            std::vector<Rational> full(tot_dim(n), Rational(0));
            for (std::size_t i = 0; i < k.size(); ++i) full[dom_off + i] = std::move(k[i]);
            out.push_back(std::move(full));
        }
        return out;
    }

    std::size_t cycle_dim(int n, int p, int r) const {
        const auto cond = condition_matrix(n, p, p, p + std::max(r, 0));
        return cond.cols() - rank(cond);
    }

    // Basis of D(F^{p_src} Tot^{n-1}) intersected with F^p, in Tot^n
    // coordinates.
    std::vector<std::vector<Rational>> boundary_basis(int n, int p, int p_src) const {
        if (n - 1 < 0 || n - 1 >= static_cast<int>(tot.differential.size())) return {};
        const auto D = restricted_differential(n - 1, std::max(p_src, 0));
        auto image = column_space_basis(D);
        if (image.empty()) return {};
        const std::size_t cut = filtration_offset(n, p);
        // Solve for combinations of the image basis vanishing below the cut.
        RationalSparseMatrix head(cut, image.size());
        for (std::size_t j = 0; j < image.size(); ++j)
            for (std::size_t i = 0; i < cut; ++i)
                if (image[j][i] != 0) head.set(i, j, image[j][i]);
        auto combos = kernel_basis(head);
        std::vector<std::vector<Rational>> out;
        for (const auto& combo : combos) {
            std::vector<Rational> v(tot_dim(n), Rational(0));
            for (std::size_t j = 0; j < image.size(); ++j) {
                if (combo[j] == 0) continue;
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += combo[j] * image[j][i];
            }
            out.push_back(std::move(v));
        }
        return out;
    }
};

inline std::size_t page_entry_dim(const FiltrationSlice& slice, int p, int q, int r) {
    const int n = p + q;
    if (p < 0 || q < 0) return 0;
    if (slice.tot_dim(n) == 0) return 0;
    const std::size_t z_dim = slice.cycle_dim(n, p, r);
    auto inner = slice.cycle_basis(n, p + 1, r - 1);
    auto boundary = slice.boundary_basis(n, p, p - r + 1);
    inner.insert(inner.end(), boundary.begin(), boundary.end());
    const std::size_t denom = rank_of_columns(inner, slice.tot_dim(n));
    return z_dim - denom;
}

} // namespace detail

/// Exact dimensions of the page-r term of the spectral sequence of the
/// chosen filtration, for every position of the stored grid.
inline SpectralPage spectral_page(const DoubleComplex& dc, int r, Filtration filtration) {
    if (r < 0) throw validation_error("spectral page index must be >= 0");
    if (filtration == Filtration::second) {
        const SpectralPage t = spectral_page(dc.transpose(), r, Filtration::first);
        std::map<std::pair<int, int>, std::size_t> dims;
        for (const auto& [pq, v] : t.dims()) dims[{pq.second, pq.first}] = v;
        return SpectralPage(r, Filtration::second, std::move(dims));
    }
    const auto assembly = detail::assemble_total(dc);
    detail::FiltrationSlice slice{assembly};
    std::map<std::pair<int, int>, std::size_t> dims;
    for (int p = 0; p <= dc.pmax(); ++p)
        for (int q = 0; q <= dc.qmax(); ++q) {
            const std::size_t d = detail::page_entry_dim(slice, p, q, r);
            if (d > 0) dims[{p, q}] = d;
        }
    return SpectralPage(r, Filtration::first, std::move(dims));
}

} // namespace coverhom
