#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rephom/liegroups.hpp"
#include "rephom/spaces.hpp"

namespace rephom {

// Closed-form answers exposed as formula evaluators for cross-checks and
// documentation tables.

struct PoincareSeries {
    std::vector<std::pair<int, long long>> dims; // (degree, dim) up to the cutoff
    std::string generators;                      // symbolic description
};

// Free graded-commutative algebra on odd generators xi^{(i)}_{2s-1} of degree
// 2*r*m_i + 2s - 1 for s = 1..r, one family per exponent m_i. All generators
// are odd, so this is an exterior algebra.
PoincareSeries cpr_char_homology(const std::vector<int>& exponents, int r, int cutoff);

// Degree -> dim G at i = 1, 3, ..., 2r-1; zero elsewhere.
std::map<int, int> cpr_local_system_homology(const AlgGroup& g, int r);

struct GlobalBounds {
    int proven = 0;
    std::string proven_source;
    std::optional<int> conjectural; // always carries the CONJECTURAL flag downstream
    std::string conjectural_source;
};

// Proven vanishing bound plus any sharper conjectural bound, each labeled.
GlobalBounds global_bounds(const SpaceModel& x, const AlgGroup& g);

} // namespace rephom
