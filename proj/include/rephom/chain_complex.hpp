#pragma once

#include <map>
#include <string>
#include <vector>

#include "rephom/elimination.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom {

// Per-degree Betti numbers, Euler characteristic, and the per-internal-weight
// table when the complex carries an internal grading.
struct HomologyReport {
    std::vector<int> dims;
    std::vector<int> betti;
    long long euler = 0;
    bool graded = false;
    // weight -> betti per homological degree (same length as dims)
    std::map<int, std::vector<int>> betti_by_weight;
};

// Finite chain complex: differentials[n] : C_n -> C_{n-1} has shape
// dims[n-1] x dims[n]; differentials[0] is the zero map out of C_0 (0 rows).
// Optional internal grading assigns a weight to each basis column per degree;
// differentials must preserve weights.
template <class E>
struct ChainComplexT {
    std::vector<int> dims;
    std::vector<SparseMat<E>> differentials;
    std::vector<std::vector<int>> weights; // empty if ungraded

    int top() const { return static_cast<int>(dims.size()) - 1; }
    bool graded() const { return !weights.empty(); }
};

template <class F>
ChainComplexT<typename F::Elem> make_complex(const F&, std::vector<int> dims,
                                             std::vector<SparseMat<typename F::Elem>> diffs) {
    ChainComplexT<typename F::Elem> c;
    c.dims = std::move(dims);
    if (c.dims.empty()) fail(ErrorCode::ConfigError, "chain complex needs at least one degree");
    if (diffs.size() == c.dims.size() - 1) {
        // caller supplied d_1..d_top; prepend the zero map out of C_0
        c.differentials.emplace_back(0, c.dims[0]);
        for (auto& m : diffs) c.differentials.push_back(std::move(m));
    } else {
        c.differentials = std::move(diffs);
    }
    return c;
}

// d o d = 0, matrix shapes, and weight preservation. Throws ComplexInvalid.
template <class F>
void validate_complex(const F& f, const ChainComplexT<typename F::Elem>& c) {
    const int n = static_cast<int>(c.dims.size());
    if (static_cast<int>(c.differentials.size()) != n)
        fail(ErrorCode::ComplexInvalid, "expected one differential per degree");
    for (int i = 0; i < n; ++i) {
        const auto& d = c.differentials[i];
        const int target = i == 0 ? 0 : c.dims[i - 1];
        if (d.cols != c.dims[i] || d.rows != target)
            fail(ErrorCode::ComplexInvalid, "differential " + std::to_string(i) + " has wrong shape");
    }
    for (int i = 1; i + 1 <= c.top(); ++i) {
        auto dd = sparse_mul(f, c.differentials[i], c.differentials[i + 1]);
        if (!sparse_is_zero(f, dd))
            fail(ErrorCode::ComplexInvalid,
                 "d_" + std::to_string(i) + " o d_" + std::to_string(i + 1) + " != 0");
    }
    if (!c.weights.empty()) {
        if (static_cast<int>(c.weights.size()) != n)
            fail(ErrorCode::ComplexInvalid, "weights must cover every degree");
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(c.weights[i].size()) != c.dims[i])
                fail(ErrorCode::ComplexInvalid, "weight count mismatch in degree " + std::to_string(i));
        for (int i = 1; i <= c.top(); ++i)
            for (int r = 0; r < c.differentials[i].rows; ++r)
                for (const auto& [col, v] : c.differentials[i].row[r])
                    if (c.weights[i][col] != c.weights[i - 1][r])
                        fail(ErrorCode::ComplexInvalid,
                             "differential " + std::to_string(i) + " does not preserve internal weight");
    }
}

namespace detail {

// Restriction of the complex to one internal weight.
template <class F>
ChainComplexT<typename F::Elem> weight_block(const F& f, const ChainComplexT<typename F::Elem>& c,
                                             int w) {
    using E = typename F::Elem;
    const int n = static_cast<int>(c.dims.size());
    std::vector<std::vector<int>> index(n); // old col -> new col or -1
    ChainComplexT<E> out;
    out.dims.resize(n, 0);
    for (int i = 0; i < n; ++i) {
        index[i].assign(c.dims[i], -1);
        for (int j = 0; j < c.dims[i]; ++j)
            if (c.weights[i][j] == w) index[i][j] = out.dims[i]++;
    }
    out.differentials.emplace_back(0, out.dims[0]);
    for (int i = 1; i < n; ++i) {
        SparseMat<E> d(out.dims[i - 1], out.dims[i]);
        const auto& src = c.differentials[i];
        for (int r = 0; r < src.rows; ++r) {
            if (index[i - 1][r] < 0) continue;
            for (const auto& [col, v] : src.row[r])
                if (index[i][col] >= 0) d.set(f, index[i - 1][r], index[i][col], v);
        }
        out.differentials.push_back(std::move(d));
    }
    return out;
}

} // namespace detail

// Exact Betti numbers: betti_n = dim C_n - rank d_n - rank d_{n+1}.
// Validates the complex first (ComplexInvalid on d o d != 0).
template <class F>
HomologyReport homology(const F& f, const ChainComplexT<typename F::Elem>& c) {
    validate_complex(f, c);
    HomologyReport rep;
    rep.dims = c.dims;
    const int n = static_cast<int>(c.dims.size());
    std::vector<int> ranks(n + 1, 0);
    for (int i = 1; i < n; ++i) ranks[i] = rank(f, c.differentials[i]);
    rep.betti.resize(n);
    for (int i = 0; i < n; ++i) {
        rep.betti[i] = c.dims[i] - ranks[i] - ranks[i + 1];
        rep.euler += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.betti[i]);
    }
    if (c.graded()) {
        rep.graded = true;
        std::vector<int> ws;
        for (const auto& per_degree : c.weights)
            for (int w : per_degree) ws.push_back(w);
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        for (int w : ws) {
            auto block = detail::weight_block(f, c, w);
            std::vector<int> branks(n + 1, 0);
            for (int i = 1; i < n; ++i) branks[i] = rank(f, block.differentials[i]);
            std::vector<int> betti(n);
            for (int i = 0; i < n; ++i) betti[i] = block.dims[i] - branks[i] - branks[i + 1];
            rep.betti_by_weight[w] = std::move(betti);
        }
    }
    return rep;
}

} // namespace rephom
