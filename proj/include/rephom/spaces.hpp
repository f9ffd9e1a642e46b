#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rephom/words.hpp"

namespace rephom {

// The space models the tool knows how to turn into cotangent-complex
// templates and topological Euler characteristics.
struct Surface {
    int genus = 1; // orientable, genus >= 1
};
struct LinkComplement {
    BraidWord braid;
};
struct LensSpace {
    int p = 2;
    std::vector<int> q; // m >= 2 integers coprime to p
};
struct WedgeCircles {
    int n = 1;
};
struct CyclicGroupSpace { // B Z_p, the infinite lens space
    int p = 2;
};
struct FinitePresentationSpace {
    Presentation presentation;
    std::optional<long long> declared_euler;
};
struct ComplexProjective {
    int r = 1;
};

using SpaceModel = std::variant<Surface, LinkComplement, LensSpace, WedgeCircles,
                                CyclicGroupSpace, FinitePresentationSpace, ComplexProjective>;

// "surface:g=2", "link:braid=s1 s1 s1,strands=2", "lens:p=5,q=1 2",
// "wedge:n=3", "bz:p=7", "pres:gens=3;rels=a b A B, a c A C", "cp:r=2".
SpaceModel parse_space(const std::string& spec);
std::string space_str(const SpaceModel& x);

struct PresentationInfo {
    Presentation presentation;
    // False when the presentation 2-complex does not model the space (lens
    // spaces, B Z_p): the fundamental group is right but the cotangent
    // complex must come from the space's own template.
    bool models_space = true;
};

// Fundamental-group presentation. Unsupported for ComplexProjective.
PresentationInfo presentation_of(const SpaceModel& x);

// Topological Euler characteristic of the finite model.
// Unsupported for CyclicGroupSpace (infinite complex).
long long euler_top(const SpaceModel& x);

// ------------------------------------------------------------------ templates

// Two-term complex: relator blocks in degree 1, generator blocks in degree 0;
// differential = transpose of the Fox Jacobian in dual coordinates.
struct ConeTemplate {
    Presentation presentation;
};

// Cone of Id - Q(beta_*) on n copies of the dual Lie algebra.
struct LinkConeTemplate {
    BraidWord braid;
};

// 2m-1 terms in degrees 0..2m-2; differentials alternate between the norm and
// X^{l_k} - 1 where q_k l_k = 1 (mod p), l_k in [1, p).
struct LensTemplate {
    int p = 2;
    std::vector<int> q;
    std::vector<int> l; // l[k] solves q[k]*l[k] = 1 mod p
};

// Truncation of the periodic resolution of Z_p; homology is reported through
// `cutoff` (one extra guard term is built internally).
struct PeriodicTemplate {
    int p = 2;
    int cutoff = 6;
};

using CotangentTemplate =
    std::variant<ConeTemplate, LinkConeTemplate, LensTemplate, PeriodicTemplate>;

CotangentTemplate build_template(const SpaceModel& x, int bz_cutoff = 6);

// Surface group presentation <a_1, b_1, ..., a_g, b_g | prod [a_i, b_i]>.
Presentation surface_presentation(int genus);

// Link-complement presentation <x_1..x_n | x_i (beta(x_i))^-1>, freely reduced.
Presentation link_presentation(const BraidWord& braid);

int modular_inverse(int a, int p);

} // namespace rephom
