#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rephom/chain_complex.hpp"
#include "rephom/fox.hpp"
#include "rephom/spaces.hpp"

namespace rephom {

template <class F>
struct RepPoint {
    AlgGroup group;
    RepAssignment<F> assignment;
};

struct EulerCheck {
    long long chi = 0;
    long long expected = 0;
    bool pass = false;
};

struct TangentDims {
    int z1 = 0;       // dim Z^1 = dim of the tangent space to the rep scheme
    int h1_group = 0; // dim H^1 of the group with adjoint coefficients
};

// Output of the executable vanishing theorem: per-representation homology of
// the cotangent complex disappears above some degree, and the bound is the
// dimension in degree 1 when everything higher dies.
struct Certificate {
    std::vector<int> h;
    std::optional<int> vanishing_bound;
    bool smooth_flag = false;
    EulerCheck euler; // meaningful only when the space has a finite model
    bool euler_supported = true;
};

namespace detail {

template <class F>
void require_valid(const F& f, const Presentation& p, const RepPoint<F>& rho) {
    if (static_cast<int>(rho.assignment.size()) != p.n_generators)
        fail(ErrorCode::ConfigError, "representation assigns " +
                                         std::to_string(rho.assignment.size()) + " generators, presentation has " +
                                         std::to_string(p.n_generators));
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        if (!element_is_identity(f, evaluate_word(f, p.relators[j], rho.assignment)))
            fail(ErrorCode::RelatorViolated, "relator #" + std::to_string(j) + " (" +
                                                 word_str(p.relators[j]) + ") is not satisfied");
}

// X^e via repeated multiplication; e >= 0 and desk-scale.
template <class F>
SparseMat<typename F::Elem> sparse_pow(const F& f, const SparseMat<typename F::Elem>& x, int e) {
    auto acc = sparse_identity(f, x.rows);
    for (int i = 0; i < e; ++i) acc = sparse_mul(f, acc, x);
    return acc;
}

} // namespace detail

// Valid chain complex of the derived cotangent space at rho. Cone templates
// give the two-term complex with the transposed Fox Jacobian; links use the
// cone of Id - Q(beta_*); lens spaces and B Z_p use the periodic cell
// differentials acting through the coadjoint.
template <class F>
ChainComplexT<typename F::Elem> cotangent_complex(const F& f, const SpaceModel& x,
                                                  const RepPoint<F>& rho, int bz_cutoff = 6) {
    using E = typename F::Elem;
    const int dim = rho.group.dim();
    auto templ = build_template(x, bz_cutoff);

    if (auto* cone = std::get_if<ConeTemplate>(&templ)) {
        detail::require_valid(f, cone->presentation, rho);
        const int gens = cone->presentation.n_generators;
        const int rels = static_cast<int>(cone->presentation.relators.size());
        if (rels == 0) {
            return make_complex(f, {gens * dim}, std::vector<SparseMat<E>>{});
        }
        auto jac = fox_jacobian(f, cone->presentation, rho.assignment);
        return make_complex(f, {gens * dim, rels * dim}, {sparse_transpose(f, jac)});
    }

    if (auto* link = std::get_if<LinkConeTemplate>(&templ)) {
        const int n = link->braid.strands;
        auto images = artin_image(link->braid);
        if (static_cast<int>(rho.assignment.size()) != n)
            fail(ErrorCode::ConfigError, "link representation needs one element per strand");
        // rho must be a fixed point of the braid action.
        for (int i = 0; i < n; ++i) {
            auto lhs = evaluate_word(f, images[i], rho.assignment);
            if (!element_eq(f, lhs, rho.assignment[i]))
                fail(ErrorCode::RelatorViolated,
                     "representation is not fixed by the braid at strand " + std::to_string(i + 1));
        }
        // Q(beta_*) = transpose of the block matrix A_{ij} = evaluate(d_j beta(x_i)).
        SparseMat<E> a(n * dim, n * dim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto block = evaluate(f, fox_derivative(images[i], j), rho.assignment);
                sparse_place_block(f, a, i * dim, j * dim, block);
            }
        auto d1 = sparse_add(f, sparse_identity(f, n * dim),
                             sparse_scale(f, f.neg(f.one()), sparse_transpose(f, a)));
        return make_complex(f, {n * dim, n * dim}, {d1});
    }

    if (auto* lens = std::get_if<LensTemplate>(&templ)) {
        if (rho.assignment.size() != 1)
            fail(ErrorCode::ConfigError, "lens representation assigns the single rotation gamma");
        GroupElement<F> power = identity_element(f, rho.group);
        for (int i = 0; i < lens->p; ++i) power = element_mul(f, power, rho.assignment[0]);
        if (!element_is_identity(f, power))
            fail(ErrorCode::OrderViolated, "rho(gamma)^p != identity for p = " + std::to_string(lens->p));
        const auto xc = coadjoint(f, rho.assignment[0]);
        const int m = static_cast<int>(lens->q.size());
        // norm = sum_{r<p} Xc^r
        SparseMat<E> norm(dim, dim), acc = sparse_identity(f, dim);
        for (int r = 0; r < lens->p; ++r) {
            norm = sparse_add(f, norm, acc);
            acc = sparse_mul(f, acc, xc);
        }
        std::vector<int> dims(2 * m - 1, dim);
        std::vector<SparseMat<E>> diffs;
        // degree n term receives the cell differential of chain degree n+1:
        // even chain degrees act by the norm, odd chain degrees 2k-1 by
        // Xc^{l_k} - Id.
        for (int n = 1; n <= 2 * m - 2; ++n) {
            const int chain_degree = n + 1;
            if (chain_degree % 2 == 0) {
                diffs.push_back(norm);
            } else {
                const int k = (chain_degree + 1) / 2; // chain degree 2k-1
                auto xl = detail::sparse_pow(f, xc, lens->l[static_cast<std::size_t>(k) - 1]);
                diffs.push_back(sparse_add(f, xl, sparse_scale(f, f.neg(f.one()),
                                                                sparse_identity(f, dim))));
            }
        }
        return make_complex(f, std::move(dims), std::move(diffs));
    }

    const auto& periodic = std::get<PeriodicTemplate>(templ);
    if (rho.assignment.size() != 1)
        fail(ErrorCode::ConfigError, "B Z_p representation assigns the single generator gamma");
    GroupElement<F> power = identity_element(f, rho.group);
    for (int i = 0; i < periodic.p; ++i) power = element_mul(f, power, rho.assignment[0]);
    if (!element_is_identity(f, power))
        fail(ErrorCode::OrderViolated, "rho(gamma)^p != identity for p = " + std::to_string(periodic.p));
    const auto xc = coadjoint(f, rho.assignment[0]);
    SparseMat<E> norm(dim, dim), acc = sparse_identity(f, dim);
    for (int r = 0; r < periodic.p; ++r) {
        norm = sparse_add(f, norm, acc);
        acc = sparse_mul(f, acc, xc);
    }
    auto xminus1 = sparse_add(f, xc, sparse_scale(f, f.neg(f.one()), sparse_identity(f, dim)));
    // One guard term beyond the cutoff keeps the top reported degree honest.
    const int top = periodic.cutoff + 1;
    std::vector<int> dims(top + 1, dim);
    std::vector<SparseMat<E>> diffs;
    for (int n = 1; n <= top; ++n) diffs.push_back(n % 2 == 1 ? xminus1 : norm);
    return make_complex(f, std::move(dims), std::move(diffs));
}

// Betti numbers of the cotangent complex. For B Z_p the report is truncated
// to degrees <= cutoff.
template <class F>
HomologyReport cotangent_homology(const F& f, const SpaceModel& x, const RepPoint<F>& rho,
                                  int bz_cutoff = 6) {
    auto complex = cotangent_complex(f, x, rho, bz_cutoff);
    auto rep = homology(f, complex);
    if (std::holds_alternative<CyclicGroupSpace>(x)) {
        rep.dims.resize(bz_cutoff + 1);
        rep.betti.resize(bz_cutoff + 1);
        rep.euler = 0;
        for (std::size_t i = 0; i < rep.betti.size(); ++i)
            rep.euler += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.betti[i]);
    }
    return rep;
}

// chi computed from the report against (1 - chi_top(X)) * dim G.
template <class F>
EulerCheck euler_check(const F& f, const SpaceModel& x, const RepPoint<F>& rho) {
    auto rep = cotangent_homology(f, x, rho);
    EulerCheck out;
    out.chi = rep.euler;
    out.expected = (1 - euler_top(x)) * rho.group.dim();
    out.pass = out.chi == out.expected;
    return out;
}

// z1 = dim H_0 of the cotangent complex = dim of the cocycle space;
// h1_group = z1 - (dim G - dim of the joint fixed space of the adjoints).
template <class F>
TangentDims tangent_dims(const F& f, const SpaceModel& x, const RepPoint<F>& rho) {
    auto info = presentation_of(x);
    if (!info.models_space)
        fail(ErrorCode::Unsupported, "tangent dims need a presentation that models the space");
    detail::require_valid(f, info.presentation, rho);
    const int dim = rho.group.dim();
    const int gens = info.presentation.n_generators;
    TangentDims out;
    int jac_rank = 0;
    if (!info.presentation.relators.empty())
        jac_rank = rank(f, fox_jacobian(f, info.presentation, rho.assignment));
    out.z1 = gens * dim - jac_rank;
    // dim B^1 = dim G - dim of the joint fixed space: stack (Ad(rho(g_i)) - Id).
    SparseMat<typename F::Elem> stacked(gens * dim, dim);
    for (int i = 0; i < gens; ++i) {
        auto block = sparse_add(f, adjoint(f, rho.assignment[i]),
                                sparse_scale(f, f.neg(f.one()), sparse_identity(f, dim)));
        sparse_place_block(f, stacked, i * dim, 0, block);
    }
    const int fixed = dim - rank(f, stacked);
    out.h1_group = out.z1 - (dim - fixed);
    return out;
}

template <class F>
Certificate vanishing_certificate(const F& f, const SpaceModel& x, const RepPoint<F>& rho,
                                  std::optional<int> declared_local_dim = std::nullopt,
                                  int bz_cutoff = 6) {
    auto rep = cotangent_homology(f, x, rho, bz_cutoff);
    Certificate cert;
    cert.h = rep.betti;
    bool higher_vanish = true;
    for (std::size_t i = 2; i < cert.h.size(); ++i)
        if (cert.h[i] != 0) higher_vanish = false;
    if (higher_vanish) cert.vanishing_bound = cert.h.size() > 1 ? cert.h[1] : 0;
    cert.smooth_flag = declared_local_dim && !cert.h.empty() && cert.h[0] == *declared_local_dim;
    if (std::holds_alternative<CyclicGroupSpace>(x)) {
        cert.euler_supported = false;
    } else {
        cert.euler.chi = rep.euler;
        cert.euler.expected = (1 - euler_top(x)) * rho.group.dim();
        cert.euler.pass = cert.euler.chi == cert.euler.expected;
    }
    return cert;
}

// Homology of Z_p with coefficients in the coadjoint representation, reported
// for degrees 0..cutoff. All higher dims vanish over char-0 fields; over F_q
// the same holds whenever gamma has invertible order, which q = 1 (mod p)
// guarantees.
template <class F>
std::vector<int> cyclic_cohomology(const F& f, int p, const GroupElement<F>& gamma, int cutoff) {
    RepPoint<F> rho{gamma.group, {gamma}};
    auto rep = cotangent_homology(f, SpaceModel{CyclicGroupSpace{p}}, rho, cutoff);
    return rep.betti;
}

} // namespace rephom
