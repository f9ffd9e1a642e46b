#pragma once

#include <vector>

#include "rephom/cotangent.hpp"
#include "rephom/rng.hpp"

namespace rephom {

// Seeded exact-representation samplers. Every sampler returns assignments that
// satisfy the relevant relators by construction (asserted downstream), and the
// streams are split per sample index so parallel certification stays
// deterministic.

namespace detail {

// Random SL-style integer matrix: a short product of elementary matrices
// E_ij(k) with small k. Determinant 1, entries stay in a small box.
template <class F>
std::vector<std::vector<typename F::Elem>> random_unimodular(const F& f, int n, SplitMix64& rng,
                                                             int factors = 3) {
    std::vector<std::vector<typename F::Elem>> m(n, std::vector<typename F::Elem>(n, f.zero()));
    for (int i = 0; i < n; ++i) m[i][i] = f.one();
    for (int t = 0; t < factors; ++t) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (i == j) continue;
        const long k = rng.range(-2, 2);
        if (k == 0) continue;
        // row_i += k * row_j
        for (int c = 0; c < n; ++c)
            m[i][c] = f.add(m[i][c], f.mul(f.from_long(k), m[j][c]));
    }
    return m;
}

// Random diagonal element of the maximal torus of one factor; regular (all
// entries distinct) when `regular` is set, so the adjoint action is
// nontrivial for GL(n>=2)/SL(n>=2).
template <class F>
std::vector<std::vector<typename F::Elem>> random_torus_block(const F& f, AlgGroup::Factor fa,
                                                              SplitMix64& rng, bool regular) {
    const int n = fa.n;
    std::vector<std::vector<typename F::Elem>> m(n, std::vector<typename F::Elem>(n, f.zero()));
    static const long units[] = {1, -1, 2, 3, 5, -2};
    static const long distinct[] = {2, 3, 5, 7, 11, 13};
    if (fa.kind == AlgGroup::Kind::SL) {
        // diag(t_1, ..., t_{n-1}, (t_1...t_{n-1})^-1)
        auto prod = f.one();
        for (int i = 0; i < n - 1; ++i) {
            const long t = regular ? distinct[(2 * i + rng.below(2)) % 6] : units[rng.below(6)];
            m[i][i] = f.from_long(t);
            prod = f.mul(prod, m[i][i]);
        }
        m[n - 1][n - 1] = f.inv(prod);
        return m;
    }
    for (int i = 0; i < n; ++i) {
        const long t = regular ? distinct[(2 * i + rng.below(2)) % 6] : units[rng.below(6)];
        m[i][i] = f.from_long(t);
    }
    return m;
}

template <class F>
bool adjoint_trivial(const F& f, const GroupElement<F>& e) {
    return sparse_is_zero(
        f, sparse_add(f, adjoint(f, e),
                      sparse_scale(f, f.neg(f.one()), sparse_identity(f, e.group.dim()))));
}

template <class F>
GroupElement<F> random_torus_element(const F& f, const AlgGroup& g, SplitMix64& rng, bool regular) {
    std::vector<std::vector<std::vector<typename F::Elem>>> blocks;
    for (const auto& fa : g.factors) blocks.push_back(random_torus_block(f, fa, rng, regular));
    return make_element(f, g, std::move(blocks));
}

// Random group element with integer entries: unimodular product, and for GL
// factors optionally a diagonal unit thrown in.
template <class F>
GroupElement<F> random_element(const F& f, const AlgGroup& g, SplitMix64& rng) {
    std::vector<std::vector<std::vector<typename F::Elem>>> blocks;
    for (const auto& fa : g.factors) {
        if (fa.kind == AlgGroup::Kind::Torus) {
            blocks.push_back(random_torus_block(f, fa, rng, false));
            continue;
        }
        auto m = random_unimodular(f, fa.n, rng, 4);
        if (fa.kind == AlgGroup::Kind::GL && rng.below(2) == 0) {
            const long u = rng.below(2) == 0 ? -1 : 2;
            for (int c = 0; c < fa.n; ++c) m[0][c] = f.mul(f.from_long(u), m[0][c]);
        }
        blocks.push_back(std::move(m));
    }
    return GroupElement<F>{g, std::move(blocks)};
}

template <class F>
GroupElement<F> conjugate(const F& f, const GroupElement<F>& h, const GroupElement<F>& x) {
    return element_mul(f, element_mul(f, h, x), element_inverse(f, h));
}

} // namespace detail

// Commuting pair: two elements of a fixed maximal torus conjugated by a
// common random element. `index` 0 is reserved for the trivial pair.
template <class F>
RepPoint<F> sample_torus_rep(const F& f, const AlgGroup& g, std::uint64_t seed,
                             std::uint64_t index) {
    if (index == 0)
        return RepPoint<F>{g, {identity_element(f, g), identity_element(f, g)}};
    auto rng = SplitMix64::for_sample(seed, index);
    auto h = detail::random_element(f, g, rng);
    auto d1 = detail::random_torus_element(f, g, rng, true);
    auto d2 = detail::random_torus_element(f, g, rng, false);
    return RepPoint<F>{g, {detail::conjugate(f, h, d1), detail::conjugate(f, h, d2)}};
}

// Surface representation: mirrored commutator pairs (a, b, ..., b, a), whose
// relator product telescopes to the identity, plus an extra commuting pair
// for odd genus; optionally conjugated as a whole. `index` 0 is trivial.
template <class F>
RepPoint<F> sample_surface_rep(const F& f, const AlgGroup& g, int genus, std::uint64_t seed,
                               std::uint64_t index) {
    if (genus == 1) return sample_torus_rep(f, g, seed, index);
    RepAssignment<F> tuple(2 * static_cast<std::size_t>(genus), identity_element(f, g));
    if (index == 0) return RepPoint<F>{g, std::move(tuple)};
    auto rng = SplitMix64::for_sample(seed, index);
    const int style = static_cast<int>(rng.below(3));
    if (style == 0) {
        // all-diagonal tuple: abelian, every commutator dies; the first
        // element is regular so a nontrivial sample never looks central
        for (std::size_t i = 0; i < tuple.size(); ++i)
            tuple[i] = detail::random_torus_element(f, g, rng, i == 0);
    } else {
        const int mirrored = genus % 2 == 0 ? genus : genus - 1;
        for (int i = 0; i < mirrored / 2; ++i) {
            auto a = detail::random_element(f, g, rng);
            for (int attempt = 0; attempt < 16 && detail::adjoint_trivial(f, a); ++attempt)
                a = detail::random_element(f, g, rng);
            auto b = detail::random_element(f, g, rng);
            // pairs (a, b) ... (b, a): [a,b][b,a] = 1
            tuple[2 * static_cast<std::size_t>(i)] = a;
            tuple[2 * static_cast<std::size_t>(i) + 1] = b;
            tuple[2 * static_cast<std::size_t>(mirrored - 1 - i)] = a;
            tuple[2 * static_cast<std::size_t>(mirrored - 1 - i) + 1] = b;
        }
        if (mirrored < genus) {
            auto c = detail::random_torus_element(f, g, rng, true);
            auto d = detail::random_torus_element(f, g, rng, false);
            tuple[2 * static_cast<std::size_t>(genus) - 2] = c;
            tuple[2 * static_cast<std::size_t>(genus) - 1] = d;
        }
        if (style == 2) {
            auto h = detail::random_element(f, g, rng);
            for (auto& e : tuple) e = detail::conjugate(f, h, e);
        }
    }
    return RepPoint<F>{g, std::move(tuple)};
}

// Mirror tuples (a, b, b, a) with an irreducible pair {a, b}: the genus-2
// smooth-locus sampler. Rejection on irreducibility only (checked by the
// caller through the certificate rank).
template <class F>
RepPoint<F> sample_genus2_irreducible(const F& f, const AlgGroup& g, std::uint64_t seed,
                                      std::uint64_t index) {
    auto rng = SplitMix64::for_sample(seed, index);
    const bool rank2 = g.factors.size() == 1 && g.factors[0].n == 2 &&
                       g.factors[0].kind != AlgGroup::Kind::Torus;
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto a = detail::random_element(f, g, rng);
        auto b = detail::random_element(f, g, rng);
        if (element_eq(f, element_mul(f, a, b), element_mul(f, b, a))) continue;
        if (rank2) {
            // {a, b} in a rank-2 matrix group is irreducible iff the
            // commutator trace is not 2 (no common eigenvector)
            auto comm = element_mul(f, element_mul(f, a, b),
                                    element_inverse(f, element_mul(f, b, a)));
            auto tr = f.add(comm.blocks[0][0][0], comm.blocks[0][1][1]);
            if (f.eq(tr, f.from_long(2))) continue;
        }
        return RepPoint<F>{g, {a, b, b, a}};
    }
    fail(ErrorCode::ConfigError, "sampler failed to find an irreducible pair");
}

// Fixed points of the braid action: either one element on all strands, or a
// commuting (diagonal) family constant on the cycles of the underlying
// permutation. `index` 0 is trivial.
template <class F>
RepPoint<F> sample_link_rep(const F& f, const AlgGroup& g, const BraidWord& braid,
                            std::uint64_t seed, std::uint64_t index) {
    const int n = braid.strands;
    RepAssignment<F> tuple(static_cast<std::size_t>(n), identity_element(f, g));
    if (index == 0) return RepPoint<F>{g, std::move(tuple)};
    auto rng = SplitMix64::for_sample(seed, index);
    if (rng.below(2) == 0) {
        auto x = detail::random_element(f, g, rng);
        for (auto& e : tuple) e = x;
    } else {
        auto perm = braid_permutation(braid);
        std::vector<int> cycle_of(perm.size(), -1);
        int cycles = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (cycle_of[i] >= 0) continue;
            std::size_t j = i;
            while (cycle_of[j] < 0) {
                cycle_of[j] = cycles;
                j = static_cast<std::size_t>(perm[j]);
            }
            ++cycles;
        }
        std::vector<GroupElement<F>> values;
        for (int c = 0; c < cycles; ++c)
            values.push_back(detail::random_torus_element(f, g, rng, rng.below(2) == 0));
        for (std::size_t i = 0; i < tuple.size(); ++i) tuple[i] = values[static_cast<std::size_t>(cycle_of[i])];
    }
    return RepPoint<F>{g, std::move(tuple)};
}

// Diagonal p-th-root representation of Z_p given exponent choices a_i:
// gamma -> diag(zeta^{a_1}, ..., zeta^{a_n}). The field must expose zeta of
// order (a multiple of) p.
template <class F>
RepPoint<F> diagonal_root_rep(const F& f, const AlgGroup& g,
                              const typename F::Elem& zeta_p, const std::vector<int>& exps) {
    if (g.factors.size() != 1 || g.factors[0].kind == AlgGroup::Kind::Torus)
        fail(ErrorCode::ConfigError, "diagonal root representations target one GL/SL factor");
    const int n = g.factors[0].n;
    if (static_cast<int>(exps.size()) != n)
        fail(ErrorCode::ConfigError, "need one exponent per diagonal entry");
    std::vector<std::vector<typename F::Elem>> m(n, std::vector<typename F::Elem>(n, f.zero()));
    for (int i = 0; i < n; ++i) {
        auto v = f.one();
        for (int k = 0; k < exps[i]; ++k) v = f.mul(v, zeta_p);
        m[i][i] = v;
    }
    return RepPoint<F>{g, {make_element(f, g, {m})}};
}

// All diagonal p-th-root assignments up to permutation (exponent tuples
// nondecreasing); for SL the exponents are constrained to sum to 0 mod p.
std::vector<std::vector<int>> diagonal_root_exponents(int p, int n, bool det_one);

// Torus-knot pair: x -> A^q, y -> A^p satisfies x^p = y^q ( = A^{pq}).
template <class F>
RepPoint<F> sample_torus_knot_rep(const F& f, const AlgGroup& g, int p, int q,
                                  std::uint64_t seed, std::uint64_t index) {
    if (index == 0)
        return RepPoint<F>{g, {identity_element(f, g), identity_element(f, g)}};
    auto rng = SplitMix64::for_sample(seed, index);
    auto a = detail::random_element(f, g, rng);
    auto x = identity_element(f, g);
    for (int i = 0; i < q; ++i) x = element_mul(f, x, a);
    auto y = identity_element(f, g);
    for (int i = 0; i < p; ++i) y = element_mul(f, y, a);
    return RepPoint<F>{g, {x, y}};
}

} // namespace rephom
