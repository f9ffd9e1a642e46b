#pragma once

#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "rephom/fq_dense.hpp"
#include "rephom/scalar.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom {

namespace detail {

// Fraction-free (one-step Bareiss) elimination with Markowitz pivot selection.
// Over Q and Q(zeta_N) all intermediate entries stay in the subring generated
// by the inputs, which is what keeps coefficient growth under control; over a
// finite field the division is just field division. Pivot choice minimizes
// (nnz(row)-1)*(nnz(col)-1) with deterministic (col, row) tie-breaking, so the
// elimination sequence does not depend on storage layout.
template <class F>
int bareiss_rank(const F& f, const SparseMat<typename F::Elem>& m) {
    using E = typename F::Elem;
    std::vector<std::map<int, E>> work(m.rows);
    std::vector<int> col_count(m.cols, 0);
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row[r]) {
            work[r][c] = v;
            ++col_count[c];
        }
    std::vector<char> row_active(m.rows, 1);
    E prev = f.one();
    int rank = 0;
    for (;;) {
        long long best_score = -1;
        int pr = -1, pc = -1;
        for (int r = 0; r < m.rows; ++r) {
            if (!row_active[r]) continue;
            const long long row_cost = static_cast<long long>(work[r].size()) - 1;
            for (const auto& [c, v] : work[r]) {
                long long score = row_cost * (col_count[c] - 1);
                if (best_score < 0 || score < best_score ||
                    (score == best_score && (c < pc || (c == pc && r < pr)))) {
                    best_score = score;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        ++rank;
        const E pivot = work[pr][pc];
        // One-step Bareiss: row_r := (pivot*row_r - row_r[pc]*row_pr) / prev
        // for every active row, including rows with row_r[pc] = 0 (pure
        // rescaling); the divisions stay exact, which is the point.
        for (int r = 0; r < m.rows; ++r) {
            if (!row_active[r] || r == pr) continue;
            auto hit = work[r].find(pc);
            const bool has_factor = hit != work[r].end();
            const E factor = has_factor ? hit->second : f.zero();
            if (has_factor) {
                for (const auto& [c, pv] : work[pr]) {
                    if (c == pc) continue;
                    auto it = work[r].find(c);
                    E cur = (it == work[r].end()) ? f.zero() : it->second;
                    E upd = f.div(f.sub(f.mul(pivot, cur), f.mul(factor, pv)), prev);
                    if (f.is_zero(upd)) {
                        if (it != work[r].end()) {
                            work[r].erase(it);
                            --col_count[c];
                        }
                    } else if (it == work[r].end()) {
                        work[r][c] = upd;
                        ++col_count[c];
                    } else {
                        it->second = upd;
                    }
                }
            }
            for (auto it = work[r].begin(); it != work[r].end(); ++it) {
                // entries not covered by the cross-term update just rescale
                if (it->first != pc &&
                    (!has_factor || work[pr].find(it->first) == work[pr].end()))
                    it->second = f.div(f.mul(pivot, it->second), prev);
            }
            if (has_factor) {
                work[r].erase(pc);
                --col_count[pc];
            }
        }
        for (const auto& [c, v] : work[pr]) --col_count[c];
        work[pr].clear();
        row_active[pr] = 0;
        prev = pivot;
    }
    return rank;
}

// Reduced row echelon form; unique, hence independent of pivot strategy and of
// any internal densification. Rows of the result are the nonzero RREF rows in
// pivot-column order.
template <class F>
struct RrefResult {
    std::vector<std::map<int, typename F::Elem>> rows;
    std::vector<int> pivot_cols;
};

template <class F>
RrefResult<F> rref_generic(const F& f, const SparseMat<typename F::Elem>& m) {
    using E = typename F::Elem;
    std::vector<std::map<int, E>> work(m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row[r]) work[r][c] = v;
    RrefResult<F> out;
    std::vector<char> used(m.rows, 0);
    for (int c = 0; c < m.cols; ++c) {
        int pr = -1;
        std::size_t best = 0;
        for (int r = 0; r < m.rows; ++r) {
            if (used[r]) continue;
            auto it = work[r].find(c);
            if (it == work[r].end()) continue;
            if (pr < 0 || work[r].size() < best) {
                pr = r;
                best = work[r].size();
            }
        }
        if (pr < 0) continue;
        used[pr] = 1;
        const E inv_pivot = f.inv(work[pr][c]);
        for (auto& [cc, v] : work[pr]) v = f.mul(v, inv_pivot);
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr) continue;
            auto hit = work[r].find(c);
            if (hit == work[r].end()) continue;
            const E factor = hit->second;
            for (const auto& [cc, pv] : work[pr]) {
                auto it = work[r].find(cc);
                E cur = (it == work[r].end()) ? f.zero() : it->second;
                E upd = f.sub(cur, f.mul(factor, pv));
                if (f.is_zero(upd)) {
                    if (it != work[r].end()) work[r].erase(it);
                } else if (it == work[r].end()) {
                    work[r][cc] = upd;
                } else {
                    it->second = upd;
                }
            }
        }
        out.pivot_cols.push_back(c);
        out.rows.push_back(work[pr]);
    }
    return out;
}

} // namespace detail

// Rank over the scalar field; deterministic. Prime fields take the dense
// kernel-backed path, everything else the generic sparse one; both are exposed
// directly below for cross-checking.
template <class F>
int rank(const F& f, const SparseMat<typename F::Elem>& m) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return fq_rank(f, m);
    else
        return detail::bareiss_rank(f, m);
}

template <class F>
int rank_generic(const F& f, const SparseMat<typename F::Elem>& m) {
    return detail::bareiss_rank(f, m);
}

// Columns form the canonical kernel basis derived from the RREF: one column
// per free column, with a 1 in that coordinate. Column count = cols - rank.
template <class F>
SparseMat<typename F::Elem> kernel_basis_generic(const F& f, const SparseMat<typename F::Elem>& m) {
    auto rref = detail::rref_generic(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rref.pivot_cols) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SparseMat<typename F::Elem> out(m.cols, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        out.set(f, fc, static_cast<int>(k), f.one());
        for (std::size_t p = 0; p < rref.pivot_cols.size(); ++p) {
            auto it = rref.rows[p].find(fc);
            if (it != rref.rows[p].end()) out.set(f, rref.pivot_cols[p], static_cast<int>(k), f.neg(it->second));
        }
    }
    return out;
}

template <class F>
SparseMat<typename F::Elem> kernel_basis(const F& f, const SparseMat<typename F::Elem>& m) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return fq_kernel_basis(f, m);
    else
        return kernel_basis_generic(f, m);
}

// Independent dense oracle: textbook Gaussian elimination with plain
// first-nonzero pivoting. Deliberately shares no code with the sparse path.
template <class F>
int dense_rank_oracle(const F& f, const SparseMat<typename F::Elem>& m) {
    using E = typename F::Elem;
    std::vector<std::vector<E>> a(m.rows, std::vector<E>(m.cols, f.zero()));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row[r]) a[r][c] = v;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pr = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!f.is_zero(a[r][c])) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[rank], a[pr]);
        const E inv_pivot = f.inv(a[rank][c]);
        for (int cc = c; cc < m.cols; ++cc) a[rank][cc] = f.mul(a[rank][cc], inv_pivot);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || f.is_zero(a[r][c])) continue;
            const E factor = a[r][c];
            for (int cc = c; cc < m.cols; ++cc)
                a[r][cc] = f.sub(a[r][cc], f.mul(factor, a[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

// Dense inverse for small matrices (group elements). Throws NotInvertible.
template <class F>
std::vector<std::vector<typename F::Elem>> dense_inverse(
    const F& f, const std::vector<std::vector<typename F::Elem>>& a) {
    using E = typename F::Elem;
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<E>> w(n, std::vector<E>(2 * n, f.zero()));
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(a[r].size()) != n) fail(ErrorCode::ConfigError, "inverse of non-square matrix");
        for (int c = 0; c < n; ++c) w[r][c] = a[r][c];
        w[r][n + r] = f.one();
    }
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (!f.is_zero(w[r][c])) {
                pr = r;
                break;
            }
        if (pr < 0) fail(ErrorCode::NotInvertible, "matrix is singular");
        std::swap(w[c], w[pr]);
        const E inv_pivot = f.inv(w[c][c]);
        for (int cc = 0; cc < 2 * n; ++cc) w[c][cc] = f.mul(w[c][cc], inv_pivot);
        for (int r = 0; r < n; ++r) {
            if (r == c || f.is_zero(w[r][c])) continue;
            const E factor = w[r][c];
            for (int cc = 0; cc < 2 * n; ++cc) w[r][cc] = f.sub(w[r][cc], f.mul(factor, w[c][cc]));
        }
    }
    std::vector<std::vector<E>> out(n, std::vector<E>(n, f.zero()));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r][c] = w[r][n + c];
    return out;
}

} // namespace rephom
