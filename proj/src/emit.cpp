#include "rephom/emit.hpp"

#include <sstream>

namespace rephom {

Json homology_json(const HomologyReport& rep) {
    Json j;
    j["dims"] = rep.dims;
    j["betti"] = rep.betti;
    j["euler"] = rep.euler;
    if (rep.graded) {
        Json table = Json::object();
        for (const auto& [w, betti] : rep.betti_by_weight) table[std::to_string(w)] = betti;
        j["betti_by_weight"] = table;
    }
    return j;
}

std::string homology_table(const HomologyReport& rep) {
    std::ostringstream os;
    os << "degree:";
    for (std::size_t i = 0; i < rep.betti.size(); ++i) os << " " << i;
    os << "\nbetti: ";
    for (int b : rep.betti) os << " " << b;
    os << "\neuler:  " << rep.euler << "\n";
    if (rep.graded) {
        os << "internal-degree table (weight: betti per degree)\n";
        for (const auto& [w, betti] : rep.betti_by_weight) {
            os << "  " << w << ":";
            for (int b : betti) os << " " << b;
            os << "\n";
        }
    }
    return os.str();
}

Json certificate_json(const Certificate& cert, const CertificateContext& ctx,
                      std::uint64_t index) {
    Json j;
    j["space"] = ctx.space;
    j["group"] = ctx.group;
    j["field"] = ctx.field;
    if (!ctx.sampler.empty()) {
        j["sampler"] = ctx.sampler;
        j["seed"] = ctx.seed;
        j["sample_index"] = index;
    }
    j["h"] = cert.h;
    if (cert.vanishing_bound)
        j["vanishing_bound"] = *cert.vanishing_bound;
    else
        j["vanishing_bound"] = nullptr;
    j["smooth_flag"] = cert.smooth_flag;
    if (cert.euler_supported) {
        j["euler"] = Json{{"chi", cert.euler.chi},
                          {"expected", cert.euler.expected},
                          {"pass", cert.euler.pass}};
    }
    j["quantifier"] = "SAMPLED";
    return j;
}

Json certificate_batch_json(const std::vector<Certificate>& certs, const CertificateContext& ctx) {
    Json j;
    j["space"] = ctx.space;
    j["group"] = ctx.group;
    j["field"] = ctx.field;
    j["sampler"] = ctx.sampler;
    j["seed"] = ctx.seed;
    j["quantifier"] = "SAMPLED";
    Json items = Json::array();
    std::optional<int> max_bound;
    bool all_euler_pass = true;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        items.push_back(certificate_json(certs[i], CertificateContext{}, i));
        items.back().erase("space");
        items.back().erase("group");
        items.back().erase("field");
        if (certs[i].vanishing_bound)
            max_bound = std::max(max_bound.value_or(0), *certs[i].vanishing_bound);
        if (certs[i].euler_supported && !certs[i].euler.pass) all_euler_pass = false;
    }
    j["samples"] = std::move(items);
    if (max_bound)
        j["max_bound_sampled"] = *max_bound;
    else
        j["max_bound_sampled"] = nullptr;
    j["all_euler_pass"] = all_euler_pass;
    return j;
}

std::string certificate_batch_table(const std::vector<Certificate>& certs,
                                    const CertificateContext& ctx) {
    std::ostringstream os;
    os << "certificates for " << ctx.space << ", " << ctx.group << " over " << ctx.field
       << " (sampler " << (ctx.sampler.empty() ? "explicit" : ctx.sampler) << ", seed "
       << ctx.seed << ", SAMPLED quantifier)\n";
    for (std::size_t i = 0; i < certs.size(); ++i) {
        os << "  #" << i << " h =";
        for (int h : certs[i].h) os << " " << h;
        if (certs[i].vanishing_bound)
            os << "  bound " << *certs[i].vanishing_bound;
        else
            os << "  bound none";
        if (certs[i].euler_supported)
            os << "  euler " << (certs[i].euler.pass ? "ok" : "FAIL");
        os << "\n";
    }
    return os.str();
}

Json e2_json(const E2Page& page, const DegenerationReport& rep) {
    Json j;
    j["p_max"] = page.p_max;
    j["n_max"] = page.n_max;
    Json entries = Json::array();
    for (const auto& [key, dim] : page.entries) {
        entries.push_back(Json{{"p", key.first},
                               {"q", key.second},
                               {"total_degree", key.first + key.second},
                               {"dim", dim}});
    }
    j["entries"] = std::move(entries);
    if (page.lacunary_modulus)
        j["lacunary_modulus"] = *page.lacunary_modulus;
    else
        j["lacunary_modulus"] = nullptr;
    j["degenerate"] = rep.degenerate;
    j["reason"] = rep.reason;
    j["predicted_nonzero_degrees"] = rep.predicted_nonzero_degrees;
    j["formality"] = "E2 computed from homology dims; valid over char-0 fields";
    return j;
}

std::string e2_table(const E2Page& page, const DegenerationReport& rep) {
    std::ostringstream os;
    os << "E2 page (weight p, q = n - p), nonzero entries\n";
    for (const auto& [key, dim] : page.entries)
        os << "  p=" << key.first << " q=" << key.second << " n=" << key.first + key.second
           << " dim=" << dim << "\n";
    if (page.lacunary_modulus)
        os << "lacunary modulus: " << *page.lacunary_modulus << "\n";
    else
        os << "lacunary modulus: none\n";
    os << "degenerate: " << (rep.degenerate ? "true" : "false") << " (" << rep.reason << ")\n";
    if (!rep.predicted_nonzero_degrees.empty()) {
        os << "predicted nonzero degrees:";
        for (int d : rep.predicted_nonzero_degrees) os << " " << d;
        os << "\n";
    }
    return os.str();
}

std::string e2_csv(const E2Page& page) {
    std::ostringstream os;
    os << "p,q,total_degree,dim\n";
    for (const auto& [key, dim] : page.entries)
        os << key.first << "," << key.second << "," << key.first + key.second << "," << dim << "\n";
    return os.str();
}

Json koszul_json(const KoszulModel& model, const GradedBetti& betti) {
    Json j;
    j["even_vars"] = model.n_even;
    j["odd_vars"] = model.n_odd;
    j["odd_weight"] = model.odd_weight;
    j["localized_dets"] = model.localized_dets;
    j["localization"] = "pre-localization";
    j["max_internal_degree"] = betti.max_internal_degree;
    Json table = Json::array();
    for (const auto& [key, dim] : betti.betti)
        table.push_back(Json{{"homological_degree", key.first},
                             {"internal_degree", key.second},
                             {"dim", dim}});
    j["betti"] = std::move(table);
    return j;
}

std::string koszul_table(const KoszulModel& model, const GradedBetti& betti) {
    std::ostringstream os;
    os << "Koszul betti table (pre-localization), " << model.n_even << " even / " << model.n_odd
       << " odd variables, internal degrees 0.." << betti.max_internal_degree << "\n";
    int max_a = 0;
    for (const auto& [key, dim] : betti.betti) max_a = std::max(max_a, key.first);
    for (int a = 0; a <= max_a; ++a) {
        os << "  H_" << a << ":";
        for (int w = 0; w <= betti.max_internal_degree; ++w) {
            auto it = betti.betti.find({a, w});
            os << " " << (it == betti.betti.end() ? 0 : it->second);
        }
        os << "\n";
    }
    return os.str();
}

std::string koszul_csv(const GradedBetti& betti) {
    std::ostringstream os;
    os << "homological_degree,internal_degree,dim,localization\n";
    for (const auto& [key, dim] : betti.betti)
        os << key.first << "," << key.second << "," << dim << ",pre-localization\n";
    return os.str();
}

Json bounds_json(const GlobalBounds& bounds, const std::string& space, const std::string& group) {
    Json j;
    j["space"] = space;
    j["group"] = group;
    j["proven_bound"] = bounds.proven;
    j["proven_source"] = bounds.proven_source;
    if (bounds.conjectural) {
        j["conjectural_bound"] = *bounds.conjectural;
        j["conjectural_source"] = bounds.conjectural_source;
        j["conjectural_flag"] = "CONJECTURAL";
    } else {
        j["conjectural_bound"] = nullptr;
    }
    return j;
}

std::string bounds_markdown(const GlobalBounds& bounds, const std::string& space,
                            const std::string& group) {
    std::ostringstream os;
    os << "| space | group | proven bound | conjectural bound |\n";
    os << "|---|---|---|---|\n";
    os << "| " << space << " | " << group << " | " << bounds.proven << " | ";
    if (bounds.conjectural)
        os << *bounds.conjectural << " (CONJECTURAL)";
    else
        os << "-";
    os << " |\n";
    return os.str();
}

Json poincare_json(const PoincareSeries& series) {
    Json j;
    j["generators"] = series.generators;
    Json dims = Json::array();
    for (const auto& [deg, dim] : series.dims)
        dims.push_back(Json{{"degree", deg}, {"dim", dim}});
    j["dims"] = std::move(dims);
    return j;
}

std::string poincare_table(const PoincareSeries& series) {
    std::ostringstream os;
    os << "generators: " << series.generators << "\ndims:";
    for (const auto& [deg, dim] : series.dims) os << " " << dim;
    os << "\n";
    return os.str();
}

Json error_json(const std::string& code, const std::string& message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    return j;
}

} // namespace rephom
