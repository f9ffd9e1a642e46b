#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rephom/spaces.hpp"

using namespace rephom;

TEST_CASE("surface presentations") {
    auto info = presentation_of(parse_space("surface:g=1"));
    CHECK(info.models_space);
    CHECK(info.presentation.n_generators == 2);
    REQUIRE(info.presentation.relators.size() == 1);
    CHECK(word_str(info.presentation.relators[0]) == "abAB");

    auto g3 = presentation_of(parse_space("surface:g=3")).presentation;
    CHECK(g3.n_generators == 6);
    CHECK(word_str(g3.relators[0]) == "abABcdCDefEF");
}

TEST_CASE("wedge and finite presentations") {
    auto wedge = presentation_of(parse_space("wedge:n=3")).presentation;
    CHECK(wedge.n_generators == 3);
    CHECK(wedge.relators.empty());

    auto pres = parse_space("pres:gens=3;rels=a b A B, a c A C");
    auto p = presentation_of(pres).presentation;
    CHECK(p.n_generators == 3);
    REQUIRE(p.relators.size() == 2);
    CHECK(word_str(p.relators[1]) == "acAC");
}

TEST_CASE("link presentations normalize x_i beta(x_i)^-1") {
    auto link = parse_space("link:braid=s1,strands=2");
    auto p = presentation_of(link).presentation;
    REQUIRE(p.relators.size() == 2);
    // x1 (x1 x2 x1^-1)^-1 = x1 x1 x2^-1 x1^-1
    CHECK(word_str(p.relators[0]) == "aaBA");
    CHECK(word_str(p.relators[1]) == "bA");
}

TEST_CASE("lens and bz presentations exist but do not model the space") {
    auto lens = presentation_of(parse_space("lens:p=5,q=1 2"));
    CHECK_FALSE(lens.models_space);
    CHECK(lens.presentation.n_generators == 1);
    CHECK(word_str(lens.presentation.relators[0]) == "aaaaa");

    auto bz = presentation_of(parse_space("bz:p=3"));
    CHECK_FALSE(bz.models_space);

    CHECK_THROWS_AS(presentation_of(parse_space("cp:r=2")), Error);
}

TEST_CASE("euler_top values") {
    CHECK(euler_top(parse_space("surface:g=1")) == 0);
    CHECK(euler_top(parse_space("surface:g=3")) == -4);
    CHECK(euler_top(parse_space("wedge:n=5")) == -4);
    CHECK(euler_top(parse_space("lens:p=7,q=1 3 2")) == 0);
    CHECK(euler_top(parse_space("link:braid=s1 s1 s1,strands=2")) == 0);
    CHECK(euler_top(parse_space("pres:gens=3;rels=a b A B")) == -1);
    CHECK(euler_top(parse_space("cp:r=2")) == 3);
    CHECK_THROWS_AS(euler_top(parse_space("bz:p=5")), Error);
}

TEST_CASE("cycle counts of braid closures") {
    CHECK(cycle_count(parse_braid("s1", 2)) == 1);
    BraidWord empty;
    empty.strands = 3;
    CHECK(cycle_count(empty) == 3);
    CHECK(cycle_count(parse_braid("s1 s2 s1 s2 s1 s2", 3)) == 3); // (s1 s2)^3
    CHECK(cycle_count(parse_braid("s1 s1 s1", 2)) == 1);          // trefoil: one component
}

TEST_CASE("templates carry the advertised shapes") {
    auto cone = build_template(parse_space("surface:g=2"));
    const auto& c = std::get<ConeTemplate>(cone);
    CHECK(c.presentation.n_generators == 4);
    CHECK(c.presentation.relators.size() == 1);

    auto link = build_template(parse_space("link:braid=s1 s1,strands=2"));
    CHECK(std::get<LinkConeTemplate>(link).braid.strands == 2);

    auto lens = build_template(parse_space("lens:p=5,q=1 2"));
    const auto& lt = std::get<LensTemplate>(lens);
    CHECK(lt.q == std::vector<int>{1, 2});
    CHECK(lt.l == std::vector<int>{1, 3}); // 2 * 3 = 6 = 1 mod 5

    auto periodic = build_template(parse_space("bz:p=7"), 6);
    CHECK(std::get<PeriodicTemplate>(periodic).cutoff == 6);

    CHECK_THROWS_AS(build_template(parse_space("cp:r=1")), Error);
}

TEST_CASE("lens parameter validation") {
    CHECK_THROWS_AS(parse_space("lens:p=6,q=2 3"), Error); // 2 shares a factor with 6
    CHECK_THROWS_AS(parse_space("lens:p=5,q=1"), Error);   // m >= 2 required
    CHECK_THROWS_AS(parse_space("surface:g=0"), Error);
    CHECK_THROWS_AS(parse_space("unknown:x=1"), Error);
}

TEST_CASE("space round trip through strings") {
    for (const char* spec : {"surface:g=2", "wedge:n=3", "lens:p=5,q=1 2", "bz:p=7",
                             "link:braid=s1 s1 s1,strands=2"}) {
        auto space = parse_space(spec);
        CHECK(space_str(space) == spec);
    }
}
