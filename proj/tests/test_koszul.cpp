#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rephom/koszul.hpp"

using namespace rephom;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("torus model GL(1): one odd variable with zero relation") {
    auto m = torus_model(parse_group("GL1"));
    CHECK(m.n_even == 2);
    CHECK(m.n_odd == 1);
    CHECK(m.relations[0].is_zero()); // 1x1 matrices commute
}

TEST_CASE("torus model GL(2): 8 even, 4 odd, quadratic commutator relations") {
    auto m = torus_model(parse_group("GL2"));
    CHECK(m.n_even == 8);
    CHECK(m.n_odd == 4);
    for (const auto& rel : m.relations) {
        int deg = 0;
        CHECK(rel.homogeneous(&deg));
        if (!rel.is_zero()) CHECK(deg == 2);
    }
    // [X,Y]_11 + [X,Y]_22 = 0 (trace-free commutator)
    CHECK((m.relations[0] + m.relations[3]).is_zero());
    CHECK(koszul_d_squared_zero(m));
}

TEST_CASE("torus model SL(2): three odd variables dual to sl2") {
    auto m = torus_model(parse_group("SL2"));
    CHECK(m.n_even == 8);
    CHECK(m.n_odd == 3);
    CHECK(koszul_d_squared_zero(m));
    // the sl2-projected relations are the off-diagonal commutator entries
    auto gl = torus_model(parse_group("GL2"));
    CHECK(m.relations[0] == gl.relations[1]); // E12 entry
    CHECK(m.relations[1] == gl.relations[2]); // E21 entry
    CHECK(m.relations[2] == gl.relations[0]); // H coordinate = [X,Y]_11
}

TEST_CASE("torus model T^r: relations vanish") {
    auto m = torus_model(parse_group("T^3"));
    CHECK(m.n_even == 6);
    CHECK(m.n_odd == 3);
    for (const auto& rel : m.relations) CHECK(rel.is_zero());
}

TEST_CASE("surface model GL(1): relation is zero after clearing") {
    auto m1 = surface_model(parse_group("GL1"), 1);
    CHECK(m1.n_even == 2);
    CHECK(m1.n_odd == 1);
    CHECK(m1.relations[0].is_zero());
    auto m2 = surface_model(parse_group("GL1"), 2);
    CHECK(m2.n_even == 4);
    CHECK(m2.relations[0].is_zero());
}

TEST_CASE("surface model GL(2), g=1: relations equal commutator times adjugate") {
    auto m = surface_model(parse_group("GL2"), 1);
    CHECK(m.n_even == 8);
    CHECK(m.n_odd == 4);
    CHECK(m.odd_weight == 4);
    // R = (XY - YX) * adj(YX), the cleared form of (X Y X^-1 Y^-1 - Id)
    const int nv = 8;
    auto var = [&](int k) { return MultiPoly::variable(nv, k); };
    std::vector<std::vector<MultiPoly>> X = {{var(0), var(1)}, {var(2), var(3)}};
    std::vector<std::vector<MultiPoly>> Y = {{var(4), var(5)}, {var(6), var(7)}};
    auto mul = [&](const auto& A, const auto& B) {
        std::vector<std::vector<MultiPoly>> out(2, std::vector<MultiPoly>(2, MultiPoly(nv)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out[i][j] = out[i][j] + A[i][k] * B[k][j];
        return out;
    };
    auto XY = mul(X, Y), YX = mul(Y, X);
    std::vector<std::vector<MultiPoly>> comm(2, std::vector<MultiPoly>(2, MultiPoly(nv)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) comm[i][j] = XY[i][j] - YX[i][j];
    // adj(YX) for 2x2: [[d, -b], [-c, a]]
    std::vector<std::vector<MultiPoly>> adj = {{YX[1][1], YX[0][1] * -1},
                                               {YX[1][0] * -1, YX[0][0]}};
    auto expected = mul(comm, adj);
    CHECK(m.relations[0] == expected[0][0]);
    CHECK(m.relations[1] == expected[0][1]);
    CHECK(m.relations[2] == expected[1][0]);
    CHECK(m.relations[3] == expected[1][1]);
    CHECK(koszul_d_squared_zero(m));
}

TEST_CASE("truncated homology of GL(1): exterior algebra over k[x,y]") {
    auto m = torus_model(parse_group("GL1"));
    auto betti = truncated_homology(m, 6);
    for (int w = 0; w <= 6; ++w) {
        // H_0 at weight w: monomials of degree w in 2 variables
        auto it0 = betti.betti.find({0, w});
        CHECK((it0 == betti.betti.end() ? 0 : it0->second) == w + 1);
        // H_1 at weight w: shifted by the odd weight 2
        auto it1 = betti.betti.find({1, w});
        int expected = w >= 2 ? w - 1 : 0;
        CHECK((it1 == betti.betti.end() ? 0 : it1->second) == expected);
    }
    // nothing above homological degree 1
    for (const auto& [key, dim] : betti.betti) CHECK(key.first <= 1);
}

TEST_CASE("rank-r abelian models match the closed form C(r, i)") {
    for (int r : {1, 2, 3}) {
        AlgGroup g{{{AlgGroup::Kind::Torus, r}}};
        auto m = torus_model(g);
        auto betti = truncated_homology(m, 6);
        auto ranks = hr_torus_closed_form(r, 1);
        REQUIRE(static_cast<int>(ranks.size()) == r + 1);
        for (int a = 0; a <= r; ++a)
            for (int w = 0; w <= 6; ++w) {
                const int poly_deg = w - 2 * a;
                long long expected =
                    poly_deg < 0 ? 0 : ranks[static_cast<std::size_t>(a)] *
                                           binom(poly_deg + 2 * r - 1, 2 * r - 1);
                auto it = betti.betti.find({a, w});
                CHECK((it == betti.betti.end() ? 0 : it->second) == expected);
            }
        // zero above homological degree r
        for (const auto& [key, dim] : betti.betti) CHECK(key.first <= r);
    }
}

TEST_CASE("per-weight euler characteristic is relation-independent") {
    // chi_w = sum_a (-1)^a dim(Lambda^a (x) poly piece) depends only on the
    // dimensions, so the GL2 torus model must match the zero-relation count.
    auto m = torus_model(parse_group("GL2"));
    auto betti = truncated_homology(m, 4);
    for (int w = 0; w <= 4; ++w) {
        long long chi_betti = 0, chi_dims = 0;
        for (int a = 0; a <= m.n_odd; ++a) {
            auto it = betti.betti.find({a, w});
            if (it != betti.betti.end()) chi_betti += (a % 2 ? -1 : 1) * it->second;
            const int poly_deg = w - 2 * a;
            if (poly_deg >= 0)
                chi_dims += (a % 2 ? -1 : 1) * binom(m.n_odd, a) *
                            count_monomials(m.n_even, poly_deg);
        }
        CHECK(chi_betti == chi_dims);
    }
}

TEST_CASE("GL(2) torus homology vanishes above degree 2 in the window") {
    auto m = torus_model(parse_group("GL2"));
    auto betti = truncated_homology(m, 4);
    for (const auto& [key, dim] : betti.betti) {
        CHECK(key.first <= 2);
        CHECK(dim > 0);
    }
    // degree-0 row: coordinate ring of the commuting variety in low degrees
    CHECK(betti.betti.at({0, 0}) == 1);
    CHECK(betti.betti.at({0, 1}) == 8);
}

TEST_CASE("budget violations are reported with the offending dimensions") {
    auto m = torus_model(parse_group("GL2"));
    CHECK_THROWS_AS(truncated_homology(m, 6, 100), Error);
    try {
        truncated_homology(m, 6, 100);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
        CHECK(std::string(e.what()).find("dimension") != std::string::npos);
    }
}

TEST_CASE("closed form values") {
    CHECK(hr_torus_closed_form(1, 1) == std::vector<long long>{1, 1});
    CHECK(hr_torus_closed_form(3, 2) == std::vector<long long>{1, 3, 3, 1});
}
