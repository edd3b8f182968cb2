#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "coverhom/rational.hpp"

namespace coverhom {

/// Sparse matrix over Q. Zero entries are never stored and indices are
/// checked on insertion. Instances are value types; all algorithms below
/// take them by const reference and never mutate their input.
class RationalSparseMatrix {
public:
    RationalSparseMatrix() = default;
    RationalSparseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_data_(rows) {}

    static RationalSparseMatrix identity(std::size_t n) {
        RationalSparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& r : row_data_) n += r.size();
        return n;
    }

    bool is_zero() const { return nonzero_count() == 0; }

    void set(std::size_t r, std::size_t c, const Rational& v) {
        check_index(r, c);
        if (v == 0)
            row_data_[r].erase(c);
        else
            row_data_[r][c] = v;
    }

    void add(std::size_t r, std::size_t c, const Rational& v) {
        check_index(r, c);
        auto it = row_data_[r].find(c);
        if (it == row_data_[r].end()) {
            if (v != 0) row_data_[r].emplace(c, v);
            return;
        }
        it->second += v;
        if (it->second == 0) row_data_[r].erase(it);
    }

    Rational at(std::size_t r, std::size_t c) const {
        check_index(r, c);
        auto it = row_data_[r].find(c);
        return it == row_data_[r].end() ? Rational(0) : it->second;
    }

    const std::map<std::size_t, Rational>& row(std::size_t r) const { return row_data_[r]; }

    RationalSparseMatrix transpose() const {
        RationalSparseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row_data_[r]) t.row_data_[c].emplace(r, v);
        return t;
    }

    std::vector<Rational> column(std::size_t c) const {
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            auto it = row_data_[r].find(c);
            if (it != row_data_[r].end()) out[r] = it->second;
        }
        return out;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (x.size() != cols_) throw validation_error("matrix/vector size mismatch");
        std::vector<Rational> y(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row_data_[r]) y[r] += v * x[c];
        return y;
    }

    bool operator==(const RationalSparseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && row_data_ == other.row_data_;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw validation_error("sparse matrix index out of bounds");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::map<std::size_t, Rational>> row_data_;
};

/// Exact product, used by the delta-squared validation checks.
inline RationalSparseMatrix multiply(const RationalSparseMatrix& a, const RationalSparseMatrix& b) {
    if (a.cols() != b.rows()) throw validation_error("matrix product shape mismatch");
    RationalSparseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [k, av] : a.row(r))
            for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
    return out;
}

namespace detail {

// Elimination state for the rank computation. Pivots are chosen column-first
// by minimum column count, then by (non-unit, row fill, row index) inside the
// column, a Markowitz-style rule that keeps fill-in small on the +-1
// incidence matrices this library produces.
class SparseElimination {
public:
    explicit SparseElimination(const RationalSparseMatrix& m)
        : rows_(m.rows()), col_count_(m.cols(), 0), col_rows_(m.cols()), row_alive_(m.rows(), true) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (const auto& [c, v] : m.row(r)) {
                rows_[r].emplace(c, v);
                ++col_count_[c];
                col_rows_[c].push_back(r);
            }
        }
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (col_count_[c] > 0) queue_.emplace(col_count_[c], c);
    }

    // Runs the elimination to completion; returns pivot columns in the order
    // they were chosen.
    std::vector<std::size_t> run() {
        std::vector<std::size_t> pivot_cols;
        while (!queue_.empty()) {
            auto [count, c] = *queue_.begin();
            queue_.erase(queue_.begin());
            if (col_count_[c] != count || count == 0) continue;

            std::size_t pivot_row = select_pivot_row(c);
            pivot_cols.push_back(c);
            eliminate(pivot_row, c);
        }
        return pivot_cols;
    }

private:
    std::size_t select_pivot_row(std::size_t c) {
        auto& cand = col_rows_[c];
        std::size_t best = rows_.size();
        bool best_unit = false;
        std::size_t best_fill = 0;
        std::size_t write = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::size_t r = cand[i];
            if (!row_alive_[r] || !rows_[r].count(c)) continue;
            cand[write++] = r;
            const bool unit = coverhom::abs(rows_[r].at(c)) == 1;
            const std::size_t fill = rows_[r].size();
            if (best == rows_.size() || std::make_tuple(!unit, fill, r) <
                                            std::make_tuple(!best_unit, best_fill, best)) {
                best = r;
                best_unit = unit;
                best_fill = fill;
            }
        }
        cand.resize(write);
        return best;
    }

    void eliminate(std::size_t pivot_row, std::size_t pivot_col) {
        const Rational pivot_value = rows_[pivot_row].at(pivot_col);
        for (std::size_t r : col_rows_[pivot_col]) {
            if (r == pivot_row || !row_alive_[r]) continue;
            auto it = rows_[r].find(pivot_col);
            if (it == rows_[r].end()) continue;
            const Rational factor = it->second / pivot_value;
            for (const auto& [c, v] : rows_[pivot_row]) {
                auto jt = rows_[r].find(c);
                if (jt == rows_[r].end()) {
                    rows_[r].emplace(c, -factor * v);
                    bump_col(c, +1);
                    col_rows_[c].push_back(r);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) {
                        rows_[r].erase(jt);
                        bump_col(c, -1);
                    }
                }
            }
        }
        // Retire the pivot row and column.
        row_alive_[pivot_row] = false;
        for (const auto& [c, v] : rows_[pivot_row]) bump_col(c, -1);
        rows_[pivot_row].clear();
        col_count_[pivot_col] = 0;
    }

    void bump_col(std::size_t c, int delta) {
        if (col_count_[c] > 0) queue_.erase({col_count_[c], c});
        col_count_[c] = static_cast<std::size_t>(static_cast<long long>(col_count_[c]) + delta);
        if (col_count_[c] > 0) queue_.emplace(col_count_[c], c);
    }

    std::vector<std::map<std::size_t, Rational>> rows_;
    std::vector<std::size_t> col_count_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<bool> row_alive_;
    std::set<std::pair<std::size_t, std::size_t>> queue_;
};

} // namespace detail

inline std::size_t rank(const RationalSparseMatrix& m) {
    detail::SparseElimination elim(m);
    return elim.run().size();
}

inline std::size_t kernel_dim(const RationalSparseMatrix& m) { return m.cols() - rank(m); }

/// Columns of the input forming a basis of the column space, in ascending
/// column order.
inline std::vector<std::vector<Rational>> column_space_basis(const RationalSparseMatrix& m) {
    detail::SparseElimination elim(m);
    std::vector<std::size_t> pivots = elim.run();
    std::sort(pivots.begin(), pivots.end());
    std::vector<std::vector<Rational>> basis;
    basis.reserve(pivots.size());
    for (std::size_t c : pivots) basis.push_back(m.column(c));
    return basis;
}

/// Exact kernel basis via reduced row echelon form: one vector per free
/// column, with a 1 in the free coordinate.
inline std::vector<std::vector<Rational>> kernel_basis(const RationalSparseMatrix& m) {
    // pivot column -> fully reduced row: coefficient 1 at the pivot, nonzero
    // entries otherwise only at free columns
    std::map<std::size_t, std::map<std::size_t, Rational>> reduced;
    auto subtract_scaled = [](std::map<std::size_t, Rational>& target, const Rational& factor,
                              const std::map<std::size_t, Rational>& source) {
        for (const auto& [c, v] : source) {
            auto it = target.find(c);
            if (it == target.end()) {
                target.emplace(c, -factor * v);
            } else {
                it->second -= factor * v;
                if (it->second == 0) target.erase(it);
            }
        }
    };
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::map<std::size_t, Rational> work(m.row(r).begin(), m.row(r).end());
        // Clear every entry sitting at an existing pivot column. Stored rows
        // only touch free columns besides their pivot, so one ordered pass
        // suffices.
        for (const auto& [pc, row] : reduced) {
            auto it = work.find(pc);
            if (it == work.end()) continue;
            const Rational factor = it->second;
            subtract_scaled(work, factor, row);
        }
        if (work.empty()) continue;
        const std::size_t lead = work.begin()->first;
        const Rational inv = Rational(1) / work.begin()->second;
        for (auto& [c, v] : work) v *= inv;
        for (auto& [pc, row] : reduced) {
            auto jt = row.find(lead);
            if (jt == row.end()) continue;
            const Rational factor = jt->second;
            subtract_scaled(row, factor, work);
        }
        reduced.emplace(lead, std::move(work));
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (reduced.count(c)) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[c] = 1;
        for (const auto& [pc, row] : reduced) {
            auto it = row.find(c);
            if (it != row.end()) x[pc] = -it->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Rank of a family of column vectors, used when stitching subspace bases
/// together.
inline std::size_t rank_of_columns(const std::vector<std::vector<Rational>>& columns,
                                   std::size_t dimension) {
    RationalSparseMatrix m(dimension, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dimension) throw validation_error("column dimension mismatch");
        for (std::size_t i = 0; i < dimension; ++i)
            if (columns[j][i] != 0) m.set(i, j, columns[j][i]);
    }
    return rank(m);
}

} // namespace coverhom
