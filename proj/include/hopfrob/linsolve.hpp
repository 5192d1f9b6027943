#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfrob/linmap.hpp"

namespace hopfrob {

namespace detail {

// Fraction-free (Bareiss-style) forward elimination with exact division,
// followed by Jordan reduction of the pivot rows. Pivots are chosen as
// the first nonzero entry in each column, so the result is deterministic.
// Returns the reduced matrix together with the pivot column of each of
// the first `rank` rows.
struct Echelon {
    LinMap m;
    std::vector<int> pivot_cols; // one per pivot row, ascending
};

inline Echelon reduced_echelon(LinMap w) {
    const int rows = w.dst_dim(), cols = w.src_dim();
    std::vector<int> pivots;
    Scalar prev = Scalar(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!w.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(w.at(p, j), w.at(r, j));
        Scalar piv = w.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (w.at(i, c).is_zero()) {
                // still rescale the row to keep the Bareiss invariant
                for (int j = c + 1; j < cols; ++j)
                    if (!w.at(i, j).is_zero()) w.at(i, j) = w.at(i, j) * piv / prev;
                continue;
            }
            Scalar f = w.at(i, c);
            for (int j = c + 1; j < cols; ++j) {
                Scalar t = w.at(r, j).is_zero() ? Scalar() : f * w.at(r, j);
                Scalar s = w.at(i, j).is_zero() ? Scalar() : w.at(i, j) * piv;
                w.at(i, j) = (s - t) / prev;
            }
            w.at(i, c) = Scalar();
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    // Jordan pass: normalise pivots to 1 and clear above.
    for (int i = int(pivots.size()) - 1; i >= 0; --i) {
        int pc = pivots[i];
        Scalar inv = w.at(i, pc).inverse();
        for (int j = pc; j < cols; ++j)
            if (!w.at(i, j).is_zero()) w.at(i, j) *= inv;
        for (int k = 0; k < i; ++k) {
            Scalar f = w.at(k, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < cols; ++j)
                if (!w.at(i, j).is_zero()) w.at(k, j) -= f * w.at(i, j);
        }
    }
    return {std::move(w), std::move(pivots)};
}

} // namespace detail

inline int rank(const LinMap& m) {
    return int(detail::reduced_echelon(m).pivot_cols.size());
}

// Exact basis of the right null space. Each basis vector is normalised
// so its first nonzero coordinate is 1; vectors are ordered by the free
// column they correspond to, which makes downstream integral choices
// deterministic.
inline std::vector<std::vector<Scalar>> kernel_basis(const LinMap& m) {
    auto ech = detail::reduced_echelon(m);
    const int cols = m.src_dim();
    std::vector<bool> is_pivot(cols, false);
    for (int pc : ech.pivot_cols) is_pivot[pc] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = Scalar(1);
        for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            const Scalar& x = ech.m.at(int(r), f);
            if (!x.is_zero()) v[ech.pivot_cols[r]] = -x;
        }
        int first = -1;
        for (int i = 0; i < cols; ++i)
            if (!v[i].is_zero()) { first = i; break; }
        Scalar inv = v[first].inverse();
        if (!inv.is_one())
            for (auto& x : v)
                if (!x.is_zero()) x *= inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of A x = b (free variables set to 0), or nullopt
// when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(const LinMap& a,
                                                       const std::vector<Scalar>& b) {
    if (int(b.size()) != a.dst_dim())
        throw DimensionMismatch("solve_linear: rhs length != dst dim");
    const int rows = a.dst_dim(), cols = a.src_dim();
    LinMap aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    auto ech = detail::reduced_echelon(std::move(aug));
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r)
        if (ech.pivot_cols[r] == cols) return std::nullopt;
    std::vector<Scalar> x(cols);
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.m.at(int(r), cols);
    return x;
}

// Exact inverse of a square map.
inline LinMap invert_matrix(const LinMap& m) {
    if (m.src_dim() != m.dst_dim()) throw DimensionMismatch("invert_matrix: not square");
    const int n = m.src_dim();
    LinMap aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    auto ech = detail::reduced_echelon(std::move(aug));
    if (int(ech.pivot_cols.size()) != n || ech.pivot_cols.back() != n - 1) throw Singular();
    LinMap inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = ech.m.at(i, n + j);
    return inv;
}

// Factor a rank-one map as m = u . v with u a column (first nonzero
// entry 1) and v a row.
inline std::pair<LinMap, LinMap> rank_one_factor(const LinMap& m) {
    int j0 = -1, i0 = -1;
    for (int j = 0; j < m.src_dim() && j0 < 0; ++j)
        for (int i = 0; i < m.dst_dim(); ++i)
            if (!m.at(i, j).is_zero()) {
                j0 = j;
                i0 = i;
                break;
            }
    if (j0 < 0) throw NotRankOne("matrix is zero");
    Scalar lead = m.at(i0, j0).inverse();
    LinMap u(m.dst_dim(), 1);
    for (int i = 0; i < m.dst_dim(); ++i)
        if (!m.at(i, j0).is_zero()) u.at(i, 0) = m.at(i, j0) * lead;
    LinMap v(1, m.src_dim());
    for (int j = 0; j < m.src_dim(); ++j) v.at(0, j) = m.at(i0, j) / u.at(i0, 0);
    // u.at(i0,0) = 1 by construction; verify the factorisation exactly
    for (int i = 0; i < m.dst_dim(); ++i)
        for (int j = 0; j < m.src_dim(); ++j)
            if (m.at(i, j) != u.at(i, 0) * v.at(0, j)) throw NotRankOne("rank exceeds one");
    return {u, v};
}

} // namespace hopfrob
