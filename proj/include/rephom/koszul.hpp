#pragma once

#include <map>
#include <string>
#include <vector>

#include "rephom/liegroups.hpp"
#include "rephom/multipoly.hpp"

namespace rephom {

// Koszul DG-algebra: a polynomial ring on the even variables tensored with an
// exterior algebra on the odd ones; each odd generator maps to its relation
// polynomial. Internal grading: even variables have weight 1, odd variables
// carry the (homogeneous) degree of their relation. Determinant localizations
// are metadata only - truncated homology is computed pre-localization.
struct KoszulModel {
    int n_even = 0;
    int n_odd = 0;
    std::vector<MultiPoly> relations; // d(theta_i), polynomials in the even vars
    int odd_weight = 2;
    std::vector<std::string> even_names;
    std::vector<std::string> odd_names;
    std::vector<std::string> localized_dets; // flagged invertible, not enforced
    std::string cleared_factor;              // surface models: the det monomial cleared
};

// Commutator model for the 2-torus: d(theta) = [X, Y] expressed in the Lie
// basis coordinates of the group (GL(n), SL(n), or a torus of rank r, where
// the relations vanish).
KoszulModel torus_model(const AlgGroup& g);

// Genus-g surface model for GL(n): d(Theta) = prod_i X_i Y_i X_i^-1 Y_i^-1 - Id
// with the inverses written as adjugate/determinant pairs and the single
// determinant monomial cleared.
KoszulModel surface_model(const AlgGroup& g, int genus);

struct GradedBetti {
    // (homological degree, internal degree) -> dim
    std::map<std::pair<int, int>, int> betti;
    std::map<std::pair<int, int>, long long> piece_dims;
    int max_internal_degree = 0;
};

// Exact Betti table of the non-localized complex for internal degrees up to
// the cutoff. Distinct internal degrees run in parallel; deterministic
// assembly. Throws BudgetExceeded when a graded piece outgrows the budget.
GradedBetti truncated_homology(const KoszulModel& m, int max_internal_degree,
                               long long budget = 20000);

// HR_i(Sigma_g, (C*)^r) is free of rank C(r, i); zero above r.
std::vector<long long> hr_torus_closed_form(int r, int g);

// Symbolic d^2 = 0 on pairs of odd generators (relation polynomials commute).
bool koszul_d_squared_zero(const KoszulModel& m);

} // namespace rephom
