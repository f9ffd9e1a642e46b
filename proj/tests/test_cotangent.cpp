#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rephom/cotangent.hpp"
#include "rephom/samplers.hpp"
#include "rephom/snf.hpp"

using namespace rephom;

namespace {

RationalField Q;

template <class F>
RepPoint<F> trivial_rep(const F& f, const AlgGroup& g, int gens) {
    RepAssignment<F> a(static_cast<std::size_t>(gens), identity_element(f, g));
    return RepPoint<F>{g, std::move(a)};
}

RepPoint<RationalField> diag_pair(const AlgGroup& g, long a, long b, long c, long d) {
    auto m1 = make_element(Q, g, {{{mpq_class(a), mpq_class(0)}, {mpq_class(0), mpq_class(b)}}});
    auto m2 = make_element(Q, g, {{{mpq_class(c), mpq_class(0)}, {mpq_class(0), mpq_class(d)}}});
    return RepPoint<RationalField>{g, {m1, m2}};
}

} // namespace

TEST_CASE("torus complex at the trivial representation has zero differential") {
    auto gl2 = parse_group("GL2");
    auto rho = trivial_rep(Q, gl2, 2);
    auto c = cotangent_complex(Q, parse_space("surface:g=1"), rho);
    CHECK(c.dims == std::vector<int>{8, 4});
    CHECK(sparse_is_zero(Q, c.differentials[1]));
    auto rep = cotangent_homology(Q, parse_space("surface:g=1"), rho);
    CHECK(rep.betti == std::vector<int>{8, 4});
    CHECK(rep.euler == 4);
}

TEST_CASE("lens complex (5;1,2) at diag(z5,1): differentials and betti (2,0,2)") {
    CyclotomicField C5(5);
    auto gl2 = parse_group("GL2");
    auto g = make_element(C5, gl2, {{{C5.zeta(1), C5.zero()}, {C5.zero(), C5.one()}}});
    RepPoint<CyclotomicField> rho{gl2, {g}};
    auto space = parse_space("lens:p=5,q=1 2");
    auto c = cotangent_complex(C5, space, rho);
    REQUIRE(c.dims == std::vector<int>{4, 4, 4});
    // d_1 is the norm (rank 2), d_2 is Xc^3 - 1 (rank 2)
    CHECK(rank(C5, c.differentials[1]) == 2);
    CHECK(rank(C5, c.differentials[2]) == 2);
    auto rep = cotangent_homology(C5, space, rho);
    CHECK(rep.betti == std::vector<int>{2, 0, 2});
    CHECK(rep.euler == 4);

    // cross-check both ranks against the dense oracle
    CHECK(dense_rank_oracle(C5, c.differentials[1]) == 2);
    CHECK(dense_rank_oracle(C5, c.differentials[2]) == 2);
}

TEST_CASE("lens complexes over F_q with q = 1 mod p agree with char 0") {
    // modular evidence path: F_11 contains 5th roots of unity (11 = 2*5 + 1)
    PrimeField F11(11, 5);
    auto gl2 = parse_group("GL2");
    auto z = F11.zeta();
    std::vector<std::vector<std::uint32_t>> m = {{z, 0}, {0, 1}};
    RepPoint<PrimeField> rho{gl2, {make_element(F11, gl2, {m})}};
    auto rep = cotangent_homology(F11, parse_space("lens:p=5,q=1 2"), rho);
    CHECK(rep.betti == std::vector<int>{2, 0, 2});
}

TEST_CASE("link complement of sigma_1 at the trivial rep: Id minus a permutation") {
    auto sl2 = parse_group("SL2");
    auto rho = trivial_rep(Q, sl2, 2);
    auto space = parse_space("link:braid=s1,strands=2");
    auto c = cotangent_complex(Q, space, rho);
    REQUIRE(c.dims == std::vector<int>{6, 6});
    // blocks swap the two g* summands
    auto rep = cotangent_homology(Q, space, rho);
    CHECK(rep.euler == 0);
    CHECK(rep.betti == std::vector<int>{3, 3}); // dim G * n(beta) with n = 1 cycle
    // the differential is Id - P for the transposition P
    auto d = c.differentials[1];
    for (int i = 0; i < 3; ++i) {
        CHECK(d.get(Q, i, i) == 1);
        CHECK(d.get(Q, i, i + 3) == -1);
        CHECK(d.get(Q, i + 3, i) == -1);
        CHECK(d.get(Q, i + 3, i + 3) == 1);
    }
}

TEST_CASE("link fixed-point validation rejects non-fixed assignments") {
    auto gl2 = parse_group("GL2");
    auto a = make_element(Q, gl2, {{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    auto b = make_element(Q, gl2, {{{mpq_class(3), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    RepPoint<RationalField> rho{gl2, {a, b}}; // sigma_1 needs equal entries
    CHECK_THROWS_AS(cotangent_complex(Q, parse_space("link:braid=s1,strands=2"), rho), Error);
}

TEST_CASE("lens order validation") {
    auto gl2 = parse_group("GL2");
    auto g = make_element(Q, gl2, {{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    RepPoint<RationalField> rho{gl2, {g}};
    CHECK_THROWS_AS(cotangent_complex(Q, parse_space("lens:p=5,q=1 2"), rho), Error);
    try {
        cotangent_complex(Q, parse_space("lens:p=5,q=1 2"), rho);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderViolated);
    }
}

TEST_CASE("euler check is representation-independent on surfaces") {
    auto gl2 = parse_group("GL2");
    auto e1 = euler_check(Q, parse_space("surface:g=1"), trivial_rep(Q, gl2, 2));
    CHECK(e1.chi == 4);
    CHECK(e1.expected == 4);
    CHECK(e1.pass);

    auto e2 = euler_check(Q, parse_space("surface:g=1"), diag_pair(gl2, 2, 1, 3, 1));
    CHECK(e2.chi == 4);
    CHECK(e2.pass);

    auto sl2 = parse_group("SL2");
    auto e3 = euler_check(Q, parse_space("surface:g=2"), trivial_rep(Q, sl2, 4));
    CHECK(e3.chi == 9);
    CHECK(e3.expected == 9);
    CHECK(e3.pass);
}

TEST_CASE("tangent dims: torus knot, wedges, and the torus") {
    auto sl2 = parse_group("SL2");
    SpaceModel knot = parse_space("pres:gens=2;rels=a a B B B");
    auto td = tangent_dims(Q, knot, trivial_rep(Q, sl2, 2));
    CHECK(td.z1 == 3);

    auto wedge = parse_space("wedge:n=3");
    CHECK(tangent_dims(Q, wedge, trivial_rep(Q, sl2, 3)).z1 == 9);

    auto gl2 = parse_group("GL2");
    CHECK(tangent_dims(Q, parse_space("surface:g=1"), trivial_rep(Q, gl2, 2)).z1 == 8);
}

TEST_CASE("vanishing certificates: torus pair, wedge, and lens") {
    auto gl2 = parse_group("GL2");
    auto cert = vanishing_certificate(Q, parse_space("surface:g=1"), diag_pair(gl2, 2, 1, 3, 1));
    REQUIRE(cert.vanishing_bound.has_value());
    CHECK(*cert.vanishing_bound == 2); // rank GL2
    CHECK(cert.euler.pass);

    auto sl2 = parse_group("SL2");
    auto wedge_cert = vanishing_certificate(Q, parse_space("wedge:n=4"), trivial_rep(Q, sl2, 4));
    REQUIRE(wedge_cert.vanishing_bound.has_value());
    CHECK(*wedge_cert.vanishing_bound == 0);

    CyclotomicField C5(5);
    auto g = make_element(C5, gl2, {{{C5.zeta(1), C5.zero()}, {C5.zero(), C5.one()}}});
    RepPoint<CyclotomicField> rho{gl2, {g}};
    auto lens_cert = vanishing_certificate(C5, parse_space("lens:p=5,q=1 2"), rho);
    CHECK_FALSE(lens_cert.vanishing_bound.has_value()); // H_2 is nonzero
}

TEST_CASE("smooth flag compares H_0 against the declared local dimension") {
    auto gl2 = parse_group("GL2");
    // dim G + rank G = 6 is the expected local dimension for the torus
    auto cert = vanishing_certificate(Q, parse_space("surface:g=1"), diag_pair(gl2, 2, 1, 3, 1), 6);
    CHECK(cert.smooth_flag);
    auto cert2 = vanishing_certificate(Q, parse_space("surface:g=1"), diag_pair(gl2, 2, 1, 3, 1), 5);
    CHECK_FALSE(cert2.smooth_flag);
}

TEST_CASE("cyclic cohomology: diagonal roots, trivial, and -Id") {
    CyclotomicField C5(5);
    auto gl2 = parse_group("GL2");
    auto g = make_element(C5, gl2, {{{C5.zeta(1), C5.zero()}, {C5.zero(), C5.one()}}});
    CHECK(cyclic_cohomology(C5, 5, g, 6) == std::vector<int>{2, 0, 0, 0, 0, 0, 0});

    CHECK(cyclic_cohomology(Q, 3, identity_element(Q, gl2), 6) ==
          std::vector<int>{4, 0, 0, 0, 0, 0, 0});

    auto minus =
        make_element(Q, gl2, {{{mpq_class(-1), mpq_class(0)}, {mpq_class(0), mpq_class(-1)}}});
    CHECK(cyclic_cohomology(Q, 2, minus, 4) == std::vector<int>{4, 0, 0, 0, 0});

    // order violation: diag(2,1) has infinite order
    auto bad = make_element(Q, gl2, {{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    CHECK_THROWS_AS(cyclic_cohomology(Q, 5, bad, 4), Error);
}

TEST_CASE("Heisenberg representation: H^0 and H^1 both vanish") {
    CyclotomicField C4(4);
    auto sl2 = parse_group("SL2");
    auto I = C4.zeta(1);
    auto alpha = make_element(
        C4, sl2, {{{C4.from_long(-1), C4.zero()}, {C4.zero(), C4.from_long(-1)}}});
    auto beta = make_element(C4, sl2, {{{I, C4.zero()}, {C4.zero(), C4.neg(I)}}});
    auto gamma = make_element(C4, sl2, {{{C4.zero(), C4.from_long(-1)}, {C4.one(), C4.zero()}}});
    SpaceModel heis = parse_space("pres:gens=3;rels=a b A B, a c A C, c b C B A");
    RepPoint<CyclotomicField> rho{sl2, {alpha, beta, gamma}};
    auto td = tangent_dims(C4, heis, rho);
    CHECK(td.z1 == 3);
    CHECK(td.h1_group == 0);
    // H^0 = joint fixed space: z1 - h1 = dim G - dim H^0 gives dim H^0 = 0
    CHECK(td.z1 - td.h1_group == 3);
}

TEST_CASE("cone homology dims survive integer clearing through the SNF oracle") {
    auto gl2 = parse_group("GL2");
    auto rho = diag_pair(gl2, 2, 1, 3, 1);
    auto c = cotangent_complex(Q, parse_space("surface:g=1"), rho);
    // d_1 has integer entries here; SNF rank must match the sparse rank
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(c.differentials[1].rows),
                                          std::vector<mpz_class>(
                                              static_cast<std::size_t>(c.differentials[1].cols), 0));
    for (int r = 0; r < c.differentials[1].rows; ++r)
        for (const auto& [col, v] : c.differentials[1].row[r]) {
            REQUIRE(v.get_den() == 1);
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = v.get_num();
        }
    CHECK(static_cast<int>(snf_oracle(a).size()) == rank(Q, c.differentials[1]));
}
