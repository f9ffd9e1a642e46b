#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rephom {

// Finite-support dimension table, degree -> dim (cotangent homology dims).
using GradedDims = std::map<int, long long>;

// Weight-p piece of the free graded-commutative algebra on the input: over a
// characteristic-zero field every complex of vector spaces splits, so the
// derived symmetric power depends only on the homology dims. Even-degree
// generators contribute polynomially, odd-degree ones exterior-algebraically.
GradedDims derived_sym_dims(const GradedDims& h, int p);

struct E2Page {
    int p_max = 0;
    int n_max = 0;
    // (weight p, q = n - p) -> dim, nonzero entries only
    std::map<std::pair<int, int>, long long> entries;
    // Largest d >= 2 dividing every nonzero total degree, when one exists and
    // some positive-degree entry is present.
    std::optional<int> lacunary_modulus;
    bool has_positive_degree = false;

    long long at(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }
};

E2Page e2_page(const GradedDims& h, int p_max, int n_max);

struct DegenerationReport {
    bool degenerate = false;
    std::string reason;
    std::vector<int> predicted_nonzero_degrees;
};

// Differentials shift total degree by -1, so a page whose nonzero entries sit
// in one congruence class mod d >= 2 admits none.
DegenerationReport degeneration_report(const E2Page& page);

} // namespace rephom
