#include "rephom/catalog.hpp"

#include <sstream>

namespace rephom {

PoincareSeries cpr_char_homology(const std::vector<int>& exponents, int r, int cutoff) {
    if (r < 1) fail(ErrorCode::ConfigError, "cpr needs r >= 1");
    if (cutoff < 0) fail(ErrorCode::ConfigError, "cutoff must be >= 0");
    std::vector<int> degrees;
    std::ostringstream desc;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        for (int s = 1; s <= r; ++s) {
            const int deg = 2 * r * exponents[i] + 2 * s - 1;
            degrees.push_back(deg);
            if (!desc.str().empty()) desc << ", ";
            desc << "xi_" << (2 * s - 1) << "^(" << (i + 1) << ") in degree " << deg;
        }
    }
    if (degrees.empty()) desc << "none (constant series)";
    // exterior algebra dims: subset-sum
    std::vector<long long> dims(static_cast<std::size_t>(cutoff) + 1, 0);
    dims[0] = 1;
    for (int d : degrees)
        for (int n = cutoff; n >= d; --n) dims[n] += dims[n - d];
    PoincareSeries out;
    for (int n = 0; n <= cutoff; ++n) out.dims.push_back({n, dims[n]});
    out.generators = desc.str();
    return out;
}

std::map<int, int> cpr_local_system_homology(const AlgGroup& g, int r) {
    if (r < 1) fail(ErrorCode::ConfigError, "cpr needs r >= 1");
    std::map<int, int> out;
    for (int i = 1; i <= 2 * r - 1; i += 2) out[i] = g.dim();
    return out;
}

GlobalBounds global_bounds(const SpaceModel& x, const AlgGroup& g) {
    GlobalBounds out;
    if (const auto* s = std::get_if<Surface>(&x)) {
        out.proven = g.dim();
        out.proven_source = "surface vanishing above dim G";
        if (s->genus == 1) {
            out.conjectural = g.rank();
            out.conjectural_source = "torus vanishing above rank G (conjectural globally)";
        } else {
            out.conjectural = g.center_dim();
            out.conjectural_source =
                "higher-genus vanishing above dim of the center (conjectural globally)";
        }
        return out;
    }
    if (const auto* l = std::get_if<LinkComplement>(&x)) {
        out.proven = l->braid.strands * g.dim();
        out.proven_source = "link-complement bound n * dim G";
        return out;
    }
    if (std::holds_alternative<WedgeCircles>(x)) {
        out.proven = 0;
        out.proven_source = "free groups are virtually free: all higher homology vanishes";
        return out;
    }
    if (std::holds_alternative<CyclicGroupSpace>(x)) {
        out.proven = 0;
        out.proven_source = "finite groups are virtually free: all higher homology vanishes";
        return out;
    }
    fail(ErrorCode::Unsupported, "no global bound is catalogued for " + space_str(x));
}

} // namespace rephom
