#pragma once

// Test-only oracles, all independent of the library's sparse elimination
// path: dense textbook Gaussian elimination for ranks and Betti numbers, and
// breadth-first search for component counts.

#include <queue>
#include <vector>

#include "coverhom/cochain.hpp"
#include "coverhom/simplicial.hpp"
#include "coverhom/sparse_matrix.hpp"

namespace oracle {

inline std::size_t dense_rank(std::vector<std::vector<coverhom::Rational>> m) {
    using coverhom::Rational;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<coverhom::Rational>> to_dense(const coverhom::RationalSparseMatrix& m) {
    std::vector<std::vector<coverhom::Rational>> d(
        m.rows(), std::vector<coverhom::Rational>(m.cols(), coverhom::Rational(0)));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) d[r][c] = v;
    return d;
}

inline std::size_t dense_rank(const coverhom::RationalSparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return dense_rank(to_dense(m));
}

/// Betti numbers computed entirely through the dense elimination.
inline std::vector<long long> dense_betti(const coverhom::CochainComplex& c) {
    std::vector<long long> b(c.degrees(), 0);
    for (std::size_t p = 0; p < c.degrees(); ++p) {
        long long v = static_cast<long long>(c.dim(p));
        v -= static_cast<long long>(dense_rank(c.differential(p)));
        if (p > 0) v -= static_cast<long long>(dense_rank(c.differential(p - 1)));
        b[p] = v;
    }
    return b;
}

inline std::vector<long long> dense_betti(const coverhom::SimplicialComplex& k) {
    return dense_betti(coverhom::cochain_complex(k));
}

/// Component count by breadth-first search on the 1-skeleton.
inline int bfs_component_count(const coverhom::SimplicialComplex& k) {
    const int n = k.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<bool> present(static_cast<std::size_t>(n), false);
    for (const auto& v : k.simplices(0)) present[static_cast<std::size_t>(v[0])] = true;
    for (const auto& e : k.simplices(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int components = 0;
    for (int v = 0; v < n; ++v) {
        if (!present[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
        ++components;
        std::queue<int> q;
        q.push(v);
        seen[static_cast<std::size_t>(v)] = true;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
    }
    return components;
}

} // namespace oracle
