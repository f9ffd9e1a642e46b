#pragma once

#include <vector>

#include "rephom/liegroups.hpp"
#include "rephom/words.hpp"

namespace rephom {

// A representation point: one group element per free generator.
template <class F>
using RepAssignment = std::vector<GroupElement<F>>;

template <class F>
GroupElement<F> evaluate_word(const F& f, const Word& w, const RepAssignment<F>& rep) {
    if (rep.empty()) fail(ErrorCode::ConfigError, "empty representation assignment");
    GroupElement<F> acc = identity_element(f, rep[0].group);
    for (const auto& [g, e] : w.letters) {
        if (g < 0 || g >= static_cast<int>(rep.size()))
            fail(ErrorCode::ConfigError, "word uses generator " + std::to_string(g) +
                                             " outside the assignment");
        acc = element_mul(f, acc, e == 1 ? rep[g] : element_inverse(f, rep[g]));
    }
    return acc;
}

// Sum of coeff * adjoint(rho(word)) over the terms: the image of a group-ring
// element under Ad o rho on the Lie-basis coordinates.
template <class F>
SparseMat<typename F::Elem> evaluate(const F& f, const GroupRingElement& e,
                                     const RepAssignment<F>& rep) {
    if (rep.empty()) fail(ErrorCode::ConfigError, "empty representation assignment");
    const int dim = rep[0].group.dim();
    SparseMat<typename F::Elem> out(dim, dim);
    for (const auto& [w, coeff] : e.terms) {
        auto ad = adjoint(f, evaluate_word(f, w, rep));
        out = sparse_add(f, out, sparse_scale(f, f.from_long(coeff), ad));
    }
    return out;
}

template <class F>
bool check_representation(const F& f, const Presentation& p, const RepAssignment<F>& rep) {
    if (static_cast<int>(rep.size()) != p.n_generators)
        fail(ErrorCode::ConfigError, "assignment size does not match generator count");
    for (const auto& r : p.relators)
        if (!element_is_identity(f, evaluate_word(f, r, rep))) return false;
    return true;
}

// Block matrix of the derivation condition: block (j, i) = evaluate of the
// Fox derivative of relator j with respect to generator i. Shape
// (#relators * dim G) x (#generators * dim G). The assignment must satisfy
// every relator; the first violation is reported.
template <class F>
SparseMat<typename F::Elem> fox_jacobian(const F& f, const Presentation& p,
                                         const RepAssignment<F>& rep) {
    if (static_cast<int>(rep.size()) != p.n_generators)
        fail(ErrorCode::ConfigError, "assignment size does not match generator count");
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        if (!element_is_identity(f, evaluate_word(f, p.relators[j], rep)))
            fail(ErrorCode::RelatorViolated,
                 "relator #" + std::to_string(j) + " (" + word_str(p.relators[j]) +
                     ") is not satisfied");
    const int dim = rep.empty() ? 0 : rep[0].group.dim();
    SparseMat<typename F::Elem> out(static_cast<int>(p.relators.size()) * dim,
                                    p.n_generators * dim);
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (int i = 0; i < p.n_generators; ++i) {
            auto block = evaluate(f, fox_derivative(p.relators[j], i), rep);
            sparse_place_block(f, out, static_cast<int>(j) * dim, i * dim, block);
        }
    return out;
}

} // namespace rephom
