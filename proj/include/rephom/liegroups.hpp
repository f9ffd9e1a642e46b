#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rephom/elimination.hpp"
#include "rephom/scalar.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom {

// Catalog of the algebraic groups in play: GL(n), SL(n), split tori and finite
// products of these. Products act blockwise on the concatenated Lie-algebra
// basis; dim, rank and center dimension add.
struct AlgGroup {
    enum class Kind { GL, SL, Torus };
    struct Factor {
        Kind kind;
        int n; // matrix size for GL/SL, rank for Torus
    };
    std::vector<Factor> factors;

    int dim() const {
        int d = 0;
        for (const auto& fa : factors)
            d += fa.kind == Kind::GL ? fa.n * fa.n : fa.kind == Kind::SL ? fa.n * fa.n - 1 : fa.n;
        return d;
    }
    int rank() const {
        int r = 0;
        for (const auto& fa : factors) r += fa.kind == Kind::SL ? fa.n - 1 : fa.n;
        return r;
    }
    int center_dim() const {
        int z = 0;
        for (const auto& fa : factors) z += fa.kind == Kind::GL ? 1 : fa.kind == Kind::Torus ? fa.n : 0;
        return z;
    }
    // Matrix size of one factor's element block.
    static int block_size(const Factor& fa) { return fa.n; }

    std::string str() const;
};

// "GL2", "SL3", "T^2", and x-joined products like "GL2xT^1".
AlgGroup parse_group(const std::string& spec);

struct GroupData {
    int dim = 0;
    int rank = 0;
    int center_dim = 0;
    // Exponents of the semisimple part where the convention is standard
    // (SL(n): 1..n-1; tori contribute none). GL factors leave them undefined.
    std::optional<std::vector<int>> exponents;
};

GroupData group_data(const AlgGroup& g);

// A point of G(k): one square matrix per factor (tori store diagonals as
// diagonal matrices). Checked on construction: invertible, det = 1 for SL,
// nonzero diagonal for tori.
template <class F>
struct GroupElement {
    AlgGroup group;
    // blocks[i] is an n_i x n_i dense matrix over the field
    std::vector<std::vector<std::vector<typename F::Elem>>> blocks;
};

namespace detail {

template <class F>
typename F::Elem block_det(const F& f, const std::vector<std::vector<typename F::Elem>>& a) {
    // Fraction-free is overkill at n <= 4; plain elimination with division.
    auto w = a;
    const int n = static_cast<int>(w.size());
    auto det = f.one();
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (!f.is_zero(w[r][c])) {
                pr = r;
                break;
            }
        if (pr < 0) return f.zero();
        if (pr != c) {
            std::swap(w[c], w[pr]);
            det = f.neg(det);
        }
        det = f.mul(det, w[c][c]);
        const auto inv_pivot = f.inv(w[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (f.is_zero(w[r][c])) continue;
            const auto factor = f.mul(w[r][c], inv_pivot);
            for (int cc = c; cc < n; ++cc) w[r][cc] = f.sub(w[r][cc], f.mul(factor, w[c][cc]));
        }
    }
    return det;
}

} // namespace detail

template <class F>
GroupElement<F> make_element(const F& f, const AlgGroup& g,
                             std::vector<std::vector<std::vector<typename F::Elem>>> blocks) {
    if (blocks.size() != g.factors.size())
        fail(ErrorCode::ConfigError, "expected one matrix block per group factor");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& fa = g.factors[i];
        const int n = AlgGroup::block_size(fa);
        if (static_cast<int>(blocks[i].size()) != n)
            fail(ErrorCode::ConfigError, "matrix block has wrong size for " + g.str());
        for (const auto& row : blocks[i])
            if (static_cast<int>(row.size()) != n)
                fail(ErrorCode::ConfigError, "matrix block is not square");
        if (fa.kind == AlgGroup::Kind::Torus) {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    if (r == c && f.is_zero(blocks[i][r][c]))
                        fail(ErrorCode::NotInvertible, "torus entry is zero");
                    if (r != c && !f.is_zero(blocks[i][r][c]))
                        fail(ErrorCode::ConfigError, "torus elements are diagonal");
                }
        } else {
            const auto det = detail::block_det(f, blocks[i]);
            if (f.is_zero(det)) fail(ErrorCode::NotInvertible, "matrix is singular");
            if (fa.kind == AlgGroup::Kind::SL && !f.eq(det, f.one()))
                fail(ErrorCode::ConfigError, "SL element must have determinant 1");
        }
    }
    return GroupElement<F>{g, std::move(blocks)};
}

template <class F>
GroupElement<F> identity_element(const F& f, const AlgGroup& g) {
    std::vector<std::vector<std::vector<typename F::Elem>>> blocks;
    for (const auto& fa : g.factors) {
        const int n = AlgGroup::block_size(fa);
        std::vector<std::vector<typename F::Elem>> b(n, std::vector<typename F::Elem>(n, f.zero()));
        for (int i = 0; i < n; ++i) b[i][i] = f.one();
        blocks.push_back(std::move(b));
    }
    return GroupElement<F>{g, std::move(blocks)};
}

template <class F>
GroupElement<F> element_mul(const F& f, const GroupElement<F>& a, const GroupElement<F>& b) {
    GroupElement<F> out{a.group, a.blocks};
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        const int n = static_cast<int>(a.blocks[i].size());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                auto acc = f.zero();
                for (int k = 0; k < n; ++k)
                    acc = f.add(acc, f.mul(a.blocks[i][r][k], b.blocks[i][k][c]));
                out.blocks[i][r][c] = acc;
            }
    }
    return out;
}

template <class F>
GroupElement<F> element_inverse(const F& f, const GroupElement<F>& a) {
    GroupElement<F> out{a.group, {}};
    for (const auto& block : a.blocks) out.blocks.push_back(dense_inverse(f, block));
    return out;
}

template <class F>
bool element_is_identity(const F& f, const GroupElement<F>& a) {
    for (const auto& block : a.blocks) {
        const int n = static_cast<int>(block.size());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!f.eq(block[r][c], r == c ? f.one() : f.zero())) return false;
    }
    return true;
}

template <class F>
bool element_eq(const F& f, const GroupElement<F>& a, const GroupElement<F>& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        const int n = static_cast<int>(a.blocks[i].size());
        if (static_cast<int>(b.blocks[i].size()) != n) return false;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!f.eq(a.blocks[i][r][c], b.blocks[i][r][c])) return false;
    }
    return true;
}

// Matrix of u -> g u g^{-1} on the fixed Lie-algebra basis: for gl_n the
// matrix units E_ij in row-major order; for sl_n the E_ij (i != j) in
// row-major order followed by H_i = E_ii - E_{i+1,i+1}; for a torus of rank r
// the r coordinate lines (adjoint is trivial there). Products act blockwise.
template <class F>
SparseMat<typename F::Elem> adjoint(const F& f, const GroupElement<F>& g) {
    using E = typename F::Elem;
    const int dim = g.group.dim();
    SparseMat<E> out(dim, dim);
    int offset = 0;
    for (std::size_t bi = 0; bi < g.group.factors.size(); ++bi) {
        const auto& fa = g.group.factors[bi];
        const int n = AlgGroup::block_size(fa);
        if (fa.kind == AlgGroup::Kind::Torus) {
            for (int i = 0; i < n; ++i) out.set(f, offset + i, offset + i, f.one());
            offset += n;
            continue;
        }
        const auto& mat = g.blocks[bi];
        const auto inv = dense_inverse(f, mat);
        const int fdim = fa.kind == AlgGroup::Kind::GL ? n * n : n * n - 1;
        // basis index -> (i, j) of E_ij, or the H part for sl_n
        std::vector<std::pair<int, int>> units;
        if (fa.kind == AlgGroup::Kind::GL) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) units.push_back({i, j});
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) units.push_back({i, j});
        }
        for (int k = 0; k < fdim; ++k) {
            // u = basis vector #k as an n x n matrix
            std::vector<std::vector<E>> u(n, std::vector<E>(n, f.zero()));
            if (k < static_cast<int>(units.size())) {
                u[units[k].first][units[k].second] = f.one();
            } else {
                const int h = k - static_cast<int>(units.size()); // H_h
                u[h][h] = f.one();
                u[h + 1][h + 1] = f.neg(f.one());
            }
            // conj = mat * u * inv
            std::vector<std::vector<E>> conj(n, std::vector<E>(n, f.zero()));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    auto acc = f.zero();
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t)
                            acc = f.add(acc, f.mul(mat[r][s], f.mul(u[s][t], inv[t][c])));
                    conj[r][c] = acc;
                }
            // expand conj in the basis: column k of the adjoint block
            if (fa.kind == AlgGroup::Kind::GL) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        out.set(f, offset + i * n + j, offset + k, conj[i][j]);
            } else {
                int idx = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j) out.set(f, offset + idx++, offset + k, conj[i][j]);
                // diagonal part: coefficient of H_i is d_1 + ... + d_i
                auto partial = f.zero();
                for (int i = 0; i < n - 1; ++i) {
                    partial = f.add(partial, conj[i][i]);
                    out.set(f, offset + idx + i, offset + k, partial);
                }
            }
        }
        offset += fdim;
    }
    return out;
}

// Transpose-inverse of the adjoint: the matrix of the dual action on the
// coordinates dual to the Lie basis.
template <class F>
SparseMat<typename F::Elem> coadjoint(const F& f, const GroupElement<F>& g) {
    return sparse_transpose(f, adjoint(f, element_inverse(f, g)));
}

} // namespace rephom
