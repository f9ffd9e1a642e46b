#pragma once

#include <vector>

#include "rephom/scalar.hpp"
#include "rephom/simd/modq_kernels.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom {

// Dense prime-field elimination driven by the runtime-dispatched F_q kernels.
// Forward phase is fraction-free (axpby, no inversions); the Jordan phase
// normalizes to the unique RREF, so the output is identical to the generic
// sparse path regardless of backend or pivot order.
struct FqRref {
    std::vector<std::vector<std::uint32_t>> rows; // nonzero RREF rows, pivot order
    std::vector<int> pivot_cols;
};

inline FqRref fq_rref(const PrimeField& f, const SparseMat<std::uint32_t>& m) {
    const auto& k = simd::kernels();
    const std::uint32_t q = f.q();
    std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row[r]) a[r][c] = v;

    FqRref out;
    int next = 0;
    for (int c = 0; c < m.cols && next < m.rows; ++c) {
        int pr = -1;
        for (int r = next; r < m.rows; ++r)
            if (a[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[next], a[pr]);
        const std::uint32_t pivot = a[next][c];
        for (int r = next + 1; r < m.rows; ++r) {
            if (a[r][c] == 0) continue;
            // row_r := pivot*row_r - row_r[c]*row_next
            k.axpby(a[r].data(), a[next].data(), f.neg(a[r][c]), pivot,
                    static_cast<std::size_t>(m.cols), q);
        }
        out.pivot_cols.push_back(c);
        ++next;
    }
    // Jordan phase: normalize pivots, clear above.
    for (int p = static_cast<int>(out.pivot_cols.size()) - 1; p >= 0; --p) {
        const int c = out.pivot_cols[p];
        k.scale(a[p].data(), f.inv(a[p][c]), static_cast<std::size_t>(m.cols), q);
        for (int r = 0; r < p; ++r) {
            if (a[r][c] == 0) continue;
            k.axpy(a[r].data(), a[p].data(), f.neg(a[r][c]), static_cast<std::size_t>(m.cols), q);
        }
    }
    out.rows.assign(a.begin(), a.begin() + out.pivot_cols.size());
    return out;
}

inline int fq_rank(const PrimeField& f, const SparseMat<std::uint32_t>& m) {
    return static_cast<int>(fq_rref(f, m).pivot_cols.size());
}

inline SparseMat<std::uint32_t> fq_kernel_basis(const PrimeField& f,
                                                const SparseMat<std::uint32_t>& m) {
    FqRref rref = fq_rref(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rref.pivot_cols) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SparseMat<std::uint32_t> out(m.cols, static_cast<int>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const int fc = free_cols[j];
        out.set(f, fc, static_cast<int>(j), f.one());
        for (std::size_t p = 0; p < rref.pivot_cols.size(); ++p)
            if (rref.rows[p][fc] != 0)
                out.set(f, rref.pivot_cols[p], static_cast<int>(j), f.neg(rref.rows[p][fc]));
    }
    return out;
}

} // namespace rephom
