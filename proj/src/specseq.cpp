#include "rephom/specseq.hpp"

#include <numeric>

#include "rephom/errors.hpp"

namespace rephom {

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

GradedDims derived_sym_dims(const GradedDims& h, int p) {
    if (p < 0) fail(ErrorCode::ConfigError, "weight must be >= 0");
    // dp[(weight, degree)] built one generator degree at a time.
    std::map<std::pair<int, int>, long long> dp{{{0, 0}, 1}};
    for (const auto& [d, hd] : h) {
        if (d < 0) fail(ErrorCode::ConfigError, "homology degrees must be >= 0");
        if (hd < 0) fail(ErrorCode::ConfigError, "dims must be >= 0");
        if (hd == 0) continue;
        std::map<std::pair<int, int>, long long> next;
        for (const auto& [key, count] : dp) {
            const auto [w, n] = key;
            if (d % 2 == 0) {
                for (int k = 0; w + k <= p; ++k)
                    next[{w + k, n + k * d}] += count * binomial(hd + k - 1, k);
            } else {
                for (int k = 0; k <= hd && w + k <= p; ++k)
                    next[{w + k, n + k * d}] += count * binomial(hd, k);
            }
        }
        dp = std::move(next);
    }
    GradedDims out;
    for (const auto& [key, count] : dp)
        if (key.first == p && count != 0) out[key.second] += count;
    return out;
}

E2Page e2_page(const GradedDims& h, int p_max, int n_max) {
    if (p_max < 0 || n_max < 0) fail(ErrorCode::ConfigError, "page bounds must be >= 0");
    E2Page page;
    page.p_max = p_max;
    page.n_max = n_max;
    int degree_gcd = 0;
    for (int p = 0; p <= p_max; ++p) {
        auto dims = derived_sym_dims(h, p);
        for (const auto& [n, dim] : dims) {
            if (n > n_max || dim == 0) continue;
            page.entries[{p, n - p}] = dim;
            if (n > 0) {
                page.has_positive_degree = true;
                degree_gcd = std::gcd(degree_gcd, n);
            }
        }
    }
    if (page.has_positive_degree && degree_gcd >= 2) page.lacunary_modulus = degree_gcd;
    return page;
}

DegenerationReport degeneration_report(const E2Page& page) {
    DegenerationReport rep;
    if (!page.has_positive_degree) {
        rep.degenerate = true;
        rep.reason = "page concentrated in total degree 0";
        rep.predicted_nonzero_degrees = {0};
        return rep;
    }
    if (page.lacunary_modulus && *page.lacunary_modulus >= 2) {
        rep.degenerate = true;
        rep.reason = "lacunary with modulus " + std::to_string(*page.lacunary_modulus) +
                     ": differentials drop total degree by 1";
        for (int n = 0; n <= page.n_max; n += *page.lacunary_modulus)
            rep.predicted_nonzero_degrees.push_back(n);
        return rep;
    }
    rep.degenerate = false;
    rep.reason = "differentials not excluded";
    return rep;
}

} // namespace rephom
