#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rephom/catalog.hpp"
#include "rephom/chain_complex.hpp"
#include "rephom/cotangent.hpp"
#include "rephom/koszul.hpp"
#include "rephom/specseq.hpp"

namespace rephom {

// All machine-readable output goes through ordered_json: field order is fixed
// by construction, so byte-identical runs stay byte-identical.
using Json = nlohmann::ordered_json;

Json homology_json(const HomologyReport& rep);
std::string homology_table(const HomologyReport& rep);

struct CertificateContext {
    std::string space;
    std::string group;
    std::string field;
    std::string sampler;
    std::uint64_t seed = 0;
};

Json certificate_json(const Certificate& cert, const CertificateContext& ctx, std::uint64_t index);
Json certificate_batch_json(const std::vector<Certificate>& certs, const CertificateContext& ctx);
std::string certificate_batch_table(const std::vector<Certificate>& certs,
                                    const CertificateContext& ctx);

Json e2_json(const E2Page& page, const DegenerationReport& rep);
std::string e2_table(const E2Page& page, const DegenerationReport& rep);
std::string e2_csv(const E2Page& page);

Json koszul_json(const KoszulModel& model, const GradedBetti& betti);
std::string koszul_table(const KoszulModel& model, const GradedBetti& betti);
std::string koszul_csv(const GradedBetti& betti);

Json bounds_json(const GlobalBounds& bounds, const std::string& space, const std::string& group);
std::string bounds_markdown(const GlobalBounds& bounds, const std::string& space,
                            const std::string& group);

Json poincare_json(const PoincareSeries& series);
std::string poincare_table(const PoincareSeries& series);

Json error_json(const std::string& code, const std::string& message);

} // namespace rephom
