#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "rephom/rng.hpp"
#include "rephom/specseq.hpp"

using namespace rephom;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficient-wise product of truncated bivariate series in (s, t):
// map (weight, degree) -> coefficient.
using Series = std::map<std::pair<int, int>, long long>;

Series series_mul(const Series& a, const Series& b, int wmax, int dmax) {
    Series out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            int w = ka.first + kb.first, d = ka.second + kb.second;
            if (w <= wmax && d <= dmax) out[{w, d}] += va * vb;
        }
    return out;
}

} // namespace

TEST_CASE("derived_sym_dims matches the two-degree closed form") {
    // Sym(H_0 + H_1[1]) at weight p, total degree n: C(h1, n) * C(h0+p-n-1, p-n)
    for (int h0 : {1, 2, 4})
        for (int h1 : {0, 1, 3})
            for (int p : {0, 1, 2, 3, 5}) {
                GradedDims h;
                if (h0) h[0] = h0;
                if (h1) h[1] = h1;
                auto dims = derived_sym_dims(h, p);
                for (int n = 0; n <= p; ++n) {
                    long long expected = binom(h1, n) * binom(h0 + p - n - 1, p - n);
                    auto it = dims.find(n);
                    long long got = it == dims.end() ? 0 : it->second;
                    CHECK(got == expected);
                }
            }
}

TEST_CASE("mixed term: h = {0:1, 1:1}, weight 2, degree 1 has dim 1") {
    GradedDims h{{0, 1}, {1, 1}};
    auto dims = derived_sym_dims(h, 2);
    CHECK(dims.at(1) == 1);
}

TEST_CASE("lens input {0:2, 2:2} at weight 2: degrees 0,2,4 with dims 3,4,3") {
    GradedDims h{{0, 2}, {2, 2}};
    auto dims = derived_sym_dims(h, 2);
    CHECK(dims.at(0) == 3);
    CHECK(dims.at(2) == 4);
    CHECK(dims.at(4) == 3);
    CHECK(dims.size() == 3);
}

TEST_CASE("Poincare-series identity for random graded dims") {
    // sum_p sum_n dim t^n s^p = prod_{even d} (1 - s t^d)^{-h_d}
    //                           * prod_{odd d} (1 + s t^d)^{h_d}
    SplitMix64 rng(311);
    const int wmax = 5, dmax = 14;
    for (int trial = 0; trial < 12; ++trial) {
        GradedDims h;
        const int entries = 1 + static_cast<int>(rng.below(3));
        for (int e = 0; e < entries; ++e)
            h[static_cast<int>(rng.below(4))] += 1 + static_cast<int>(rng.below(3));

        Series expected{{{0, 0}, 1}};
        for (const auto& [d, hd] : h) {
            for (long long copy = 0; copy < hd; ++copy) {
                Series factor;
                if (d % 2 == 1) {
                    factor[{0, 0}] = 1;
                    factor[{1, d}] = 1; // (1 + s t^d)
                } else {
                    for (int k = 0; k * std::max(d, 0) <= dmax && k <= wmax; ++k)
                        factor[{k, k * d}] = 1; // geometric series of s t^d
                }
                expected = series_mul(expected, factor, wmax, dmax);
            }
        }
        for (int p = 0; p <= wmax; ++p) {
            auto dims = derived_sym_dims(h, p);
            for (int n = 0; n <= dmax; ++n) {
                auto it = dims.find(n);
                long long got = it == dims.end() ? 0 : it->second;
                auto jt = expected.find({p, n});
                long long want = jt == expected.end() ? 0 : jt->second;
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("weight 0 and the empty input") {
    GradedDims h{{0, 3}, {1, 2}};
    auto w0 = derived_sym_dims(h, 0);
    CHECK(w0.size() == 1);
    CHECK(w0.at(0) == 1);
    auto empty = derived_sym_dims(GradedDims{}, 3);
    CHECK(empty.empty());
}

TEST_CASE("e2 page: lens pattern is lacunary with modulus 2m-2") {
    // m = 2
    auto page = e2_page(GradedDims{{0, 2}, {2, 2}}, 4, 12);
    REQUIRE(page.lacunary_modulus.has_value());
    CHECK(*page.lacunary_modulus == 2);
    auto rep = degeneration_report(page);
    CHECK(rep.degenerate);
    CHECK(rep.predicted_nonzero_degrees == std::vector<int>{0, 2, 4, 6, 8, 10, 12});

    // m = 3: dims in degrees 0 and 4
    auto page3 = e2_page(GradedDims{{0, 1}, {4, 2}}, 4, 12);
    REQUIRE(page3.lacunary_modulus.has_value());
    CHECK(*page3.lacunary_modulus == 4);
    CHECK(degeneration_report(page3).degenerate);
}

TEST_CASE("e2 page: exterior algebra on one odd generator") {
    auto page = e2_page(GradedDims{{1, 1}}, 4, 8);
    // single class at weight 1, total degree 1, plus the unit
    CHECK(page.at(0, 0) == 1);
    CHECK(page.at(1, 0) == 1); // p = 1, q = 0 -> n = 1
    long long total = 0;
    for (const auto& [k, v] : page.entries) total += v;
    CHECK(total == 2);
}

TEST_CASE("e2 page: discrete input concentrates in degree 0") {
    auto page = e2_page(GradedDims{{0, 3}}, 4, 8);
    for (const auto& [k, v] : page.entries) CHECK(k.first + k.second == 0);
    CHECK_FALSE(page.has_positive_degree);
    auto rep = degeneration_report(page);
    CHECK(rep.degenerate);
    CHECK(rep.predicted_nonzero_degrees == std::vector<int>{0});
}

TEST_CASE("adjacent degrees block degeneration") {
    auto page = e2_page(GradedDims{{0, 1}, {1, 1}, {2, 1}}, 4, 8);
    CHECK_FALSE(page.lacunary_modulus.has_value());
    auto rep = degeneration_report(page);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.reason == "differentials not excluded");
}

TEST_CASE("entries stay in the region q >= -p with weight >= 0") {
    auto page = e2_page(GradedDims{{0, 2}, {2, 1}, {3, 1}}, 5, 10);
    for (const auto& [k, v] : page.entries) {
        CHECK(k.first >= 0);            // weight
        CHECK(k.first + k.second >= 0); // total degree
        CHECK(v > 0);
    }
}
