#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rephom/errors.hpp"

namespace rephom {

// Row-major sparse matrix. Rows hold (col, value) entries sorted by column;
// stored values are never zero.
template <class E>
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, E>>> row;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

    template <class F>
    void set(const F& f, int r, int c, const E& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            fail(ErrorCode::ConfigError, "sparse matrix index out of range");
        auto& entries = row[r];
        auto it = std::lower_bound(entries.begin(), entries.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != entries.end() && it->first == c) {
            if (f.is_zero(v))
                entries.erase(it);
            else
                it->second = v;
        } else if (!f.is_zero(v)) {
            entries.insert(it, {c, v});
        }
    }

    template <class F>
    E get(const F& f, int r, int c) const {
        const auto& entries = row[r];
        auto it = std::lower_bound(entries.begin(), entries.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != entries.end() && it->first == c) return it->second;
        return f.zero();
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : row) n += r.size();
        return n;
    }

    bool operator==(const SparseMat& o) const {
        return rows == o.rows && cols == o.cols && row == o.row;
    }
};

template <class F>
SparseMat<typename F::Elem> sparse_identity(const F& f, int n) {
    SparseMat<typename F::Elem> m(n, n);
    for (int i = 0; i < n; ++i) m.row[i] = {{i, f.one()}};
    return m;
}

template <class F>
SparseMat<typename F::Elem> sparse_transpose(const F&, const SparseMat<typename F::Elem>& m) {
    SparseMat<typename F::Elem> t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row[r]) t.row[c].push_back({r, v});
    return t; // columns were visited in row order, so each output row is sorted
}

template <class F>
SparseMat<typename F::Elem> sparse_add(const F& f, const SparseMat<typename F::Elem>& a,
                                       const SparseMat<typename F::Elem>& b) {
    if (a.rows != b.rows || a.cols != b.cols) fail(ErrorCode::ConfigError, "matrix shape mismatch in add");
    SparseMat<typename F::Elem> out(a.rows, a.cols);
    for (int r = 0; r < a.rows; ++r) {
        auto ia = a.row[r].begin(), ea = a.row[r].end();
        auto ib = b.row[r].begin(), eb = b.row[r].end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && ia->first < ib->first)) {
                out.row[r].push_back(*ia++);
            } else if (ia == ea || ib->first < ia->first) {
                out.row[r].push_back(*ib++);
            } else {
                auto v = f.add(ia->second, ib->second);
                if (!f.is_zero(v)) out.row[r].push_back({ia->first, v});
                ++ia;
                ++ib;
            }
        }
    }
    return out;
}

template <class F>
SparseMat<typename F::Elem> sparse_scale(const F& f, const typename F::Elem& s,
                                         const SparseMat<typename F::Elem>& a) {
    SparseMat<typename F::Elem> out(a.rows, a.cols);
    if (f.is_zero(s)) return out;
    for (int r = 0; r < a.rows; ++r)
        for (const auto& [c, v] : a.row[r]) out.row[r].push_back({c, f.mul(s, v)});
    return out;
}

template <class F>
SparseMat<typename F::Elem> sparse_mul(const F& f, const SparseMat<typename F::Elem>& a,
                                       const SparseMat<typename F::Elem>& b) {
    if (a.cols != b.rows) fail(ErrorCode::ConfigError, "matrix shape mismatch in mul");
    SparseMat<typename F::Elem> out(a.rows, b.cols);
    std::vector<typename F::Elem> acc(b.cols, f.zero());
    std::vector<int> touched;
    for (int r = 0; r < a.rows; ++r) {
        touched.clear();
        for (const auto& [k, av] : a.row[r]) {
            for (const auto& [c, bv] : b.row[k]) {
                if (f.is_zero(acc[c])) touched.push_back(c);
                acc[c] = f.add(acc[c], f.mul(av, bv));
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            if (!f.is_zero(acc[c])) out.row[r].push_back({c, acc[c]});
            acc[c] = f.zero();
        }
    }
    return out;
}

// Writes `block` into `dst` with its top-left corner at (r0, c0).
template <class F>
void sparse_place_block(const F&, SparseMat<typename F::Elem>& dst, int r0, int c0,
                        const SparseMat<typename F::Elem>& block) {
    if (r0 + block.rows > dst.rows || c0 + block.cols > dst.cols)
        fail(ErrorCode::ConfigError, "block placement out of range");
    for (int r = 0; r < block.rows; ++r)
        for (const auto& [c, v] : block.row[r]) dst.row[r0 + r].push_back({c0 + c, v});
    for (int r = r0; r < r0 + block.rows; ++r)
        std::sort(dst.row[r].begin(), dst.row[r].end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
}

template <class F>
bool sparse_is_zero(const F&, const SparseMat<typename F::Elem>& m) {
    for (const auto& r : m.row)
        if (!r.empty()) return false;
    return true;
}

} // namespace rephom
