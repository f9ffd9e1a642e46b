#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rephom/fox.hpp"
#include "rephom/rng.hpp"
#include "rephom/samplers.hpp"

using namespace rephom;

namespace {

Word random_word(SplitMix64& rng, int rank, int max_len) {
    Word w;
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    for (int i = 0; i < len; ++i)
        w.letters.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(rank))),
                             rng.below(2) == 0 ? 1 : -1});
    return w;
}

// Right-hand side of the fundamental identity: sum_i d_i(w) * (x_i - 1).
GroupRingElement fundamental_rhs(const Word& w, int rank) {
    GroupRingElement rhs;
    for (int i = 0; i < rank; ++i) {
        auto xi = GroupRingElement::of_word(Word::generator(i)) - GroupRingElement::unit();
        rhs += fox_derivative(w, i) * xi;
    }
    return rhs;
}

} // namespace

TEST_CASE("fox derivatives of the commutator") {
    Word comm = parse_word("abAB");
    // d_a [a,b] = 1 - aba^-1
    auto da = fox_derivative(comm, 0);
    auto expected_a = GroupRingElement::unit() - GroupRingElement::of_word(parse_word("abA"));
    CHECK(da == expected_a);
    // d_b [a,b] = a - aba^-1b^-1
    auto db = fox_derivative(comm, 1);
    auto expected_b =
        GroupRingElement::of_word(parse_word("a")) - GroupRingElement::of_word(parse_word("abAB"));
    CHECK(db == expected_b);
}

TEST_CASE("fundamental identity holds for 200+ random words") {
    SplitMix64 rng(71);
    int checked = 0;
    while (checked < 220) {
        const int rank = 2 + static_cast<int>(rng.below(3)); // up to 4 generators
        Word w = random_word(rng, rank, 20);
        auto lhs = GroupRingElement::of_word(w) - GroupRingElement::unit();
        CHECK(lhs == fundamental_rhs(w, rank));
        ++checked;
    }
}

TEST_CASE("fox derivative is reduction-invariant") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(rng, 3, 12);
        // pad with a cancelling pair in the middle
        Word padded;
        const std::size_t cut = w.letters.size() / 2;
        padded.letters.assign(w.letters.begin(), w.letters.begin() + cut);
        padded.letters.push_back({1, 1});
        padded.letters.push_back({1, -1});
        padded.letters.insert(padded.letters.end(), w.letters.begin() + cut, w.letters.end());
        for (int i = 0; i < 3; ++i) CHECK(fox_derivative(w, i) == fox_derivative(padded, i));
    }
}

TEST_CASE("evaluate: trivial representations kill Fox Jacobians") {
    RationalField Q;
    auto gl2 = parse_group("GL2");
    RepAssignment<RationalField> triv = {identity_element(Q, gl2), identity_element(Q, gl2)};
    // e = 1 - x at the trivial rep
    auto e1 = GroupRingElement::unit() - GroupRingElement::of_word(parse_word("a"));
    CHECK(sparse_is_zero(Q, evaluate(Q, e1, triv)));
    // e = 1 - aba^-1 at the trivial rep
    auto e2 = GroupRingElement::unit() - GroupRingElement::of_word(parse_word("abA"));
    CHECK(sparse_is_zero(Q, evaluate(Q, e2, triv)));
}

TEST_CASE("evaluate is multiplicative on words and linear on sums") {
    RationalField Q;
    SplitMix64 rng(79);
    auto sl2 = parse_group("SL2");
    RepAssignment<RationalField> rep = {detail::random_element(Q, sl2, rng),
                                        detail::random_element(Q, sl2, rng)};
    Word u = random_word(rng, 2, 6), v = random_word(rng, 2, 6);
    auto eu = evaluate(Q, GroupRingElement::of_word(u), rep);
    auto ev = evaluate(Q, GroupRingElement::of_word(v), rep);
    auto euv = evaluate(Q, GroupRingElement::of_word(u * v), rep);
    CHECK(sparse_mul(Q, eu, ev) == euv);
    auto sum = evaluate(Q, GroupRingElement::of_word(u) + GroupRingElement::of_word(v), rep);
    CHECK(sum == sparse_add(Q, eu, ev));
}

TEST_CASE("evaluate of the norm element has rank 2 at the diagonal root") {
    CyclotomicField C5(5);
    auto gl2 = parse_group("GL2");
    auto g = make_element(C5, gl2, {{{C5.zeta(1), C5.zero()}, {C5.zero(), C5.one()}}});
    GroupRingElement norm;
    Word power;
    for (int r = 0; r < 5; ++r) {
        norm += GroupRingElement::of_word(power);
        power = power * Word::generator(0);
    }
    auto m = evaluate(C5, norm, {g});
    CHECK(rank(C5, m) == 2);
}

TEST_CASE("torus Fox Jacobian matches the closed form (Id - Ad y | -(Id - Ad x))") {
    RationalField Q;
    auto gl2 = parse_group("GL2");
    auto x = make_element(Q, gl2, {{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    auto y = make_element(Q, gl2, {{{mpq_class(3), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}});
    Presentation torus{2, {parse_word("abAB")}};
    auto jac = fox_jacobian(Q, torus, {x, y});
    REQUIRE(jac.rows == 4);
    REQUIRE(jac.cols == 8);
    auto idm = sparse_identity(Q, 4);
    auto expected_left = sparse_add(Q, idm, sparse_scale(Q, mpq_class(-1), adjoint(Q, y)));
    auto expected_right = sparse_add(Q, adjoint(Q, x), sparse_scale(Q, mpq_class(-1), idm));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            CHECK(jac.get(Q, r, c) == expected_left.get(Q, r, c));
            CHECK(jac.get(Q, r, c + 4) == expected_right.get(Q, r, c));
        }
    CHECK(rank(Q, jac) == 2); // off-diagonal adjoint eigenvalues 2, 1/2, 3, 1/3
}

TEST_CASE("torus Jacobian at the trivial representation is the zero 4x8 block") {
    RationalField Q;
    auto gl2 = parse_group("GL2");
    Presentation torus{2, {parse_word("abAB")}};
    auto jac = fox_jacobian(Q, torus, {identity_element(Q, gl2), identity_element(Q, gl2)});
    CHECK(jac.rows == 4);
    CHECK(jac.cols == 8);
    CHECK(sparse_is_zero(Q, jac));
}

TEST_CASE("fox_jacobian reports the first violated relator") {
    RationalField Q;
    auto gl2 = parse_group("GL2");
    SplitMix64 rng(83);
    // non-commuting pair violates the torus relator
    auto a = make_element(Q, gl2, {{{mpq_class(1), mpq_class(1)}, {mpq_class(0), mpq_class(1)}}});
    auto b = make_element(Q, gl2, {{{mpq_class(1), mpq_class(0)}, {mpq_class(1), mpq_class(1)}}});
    Presentation torus{2, {parse_word("abAB")}};
    CHECK_FALSE(check_representation(Q, torus, {a, b}));
    CHECK_THROWS_AS(fox_jacobian(Q, torus, {a, b}), Error);
    try {
        fox_jacobian(Q, torus, {a, b});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RelatorViolated);
    }
}

TEST_CASE("artin: generator rule, identity braid, and sigma_1 squared") {
    auto img = artin_image(parse_braid("s1", 2));
    CHECK(word_str(img[0]) == "abA");
    CHECK(word_str(img[1]) == "a");

    BraidWord empty;
    empty.strands = 3;
    auto id3 = artin_image(empty);
    CHECK(word_str(id3[0]) == "a");
    CHECK(word_str(id3[1]) == "b");
    CHECK(word_str(id3[2]) == "c");

    auto sq = artin_image(parse_braid("s1 s1", 2));
    CHECK(word_str(sq[0]) == "abaBA");
    CHECK(word_str(sq[1]) == "abA");
}

TEST_CASE("artin: inverse letters invert and composition matches letters") {
    auto both = artin_image(parse_braid("s1 S1", 2));
    CHECK(word_str(both[0]) == "a");
    CHECK(word_str(both[1]) == "b");

    SplitMix64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        // compose a random braid one letter at a time via substitution
        const int strands = 3;
        BraidWord braid;
        braid.strands = strands;
        const int len = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < len; ++i)
            braid.letters.push_back({1 + static_cast<int>(rng.below(strands - 1)),
                                     rng.below(2) == 0 ? 1 : -1});
        auto whole = artin_image(braid);

        std::vector<Word> acc(strands);
        for (int i = 0; i < strands; ++i) acc[i] = Word::generator(i);
        for (const auto& letter : braid.letters) {
            BraidWord single;
            single.strands = strands;
            single.letters = {letter};
            auto step = artin_image(single);
            // acc := acc o step
            std::vector<Word> next(strands);
            for (int i = 0; i < strands; ++i) {
                Word out;
                for (const auto& [g, e] : step[i].letters)
                    out = out * (e == 1 ? acc[g] : acc[g].inverse());
                next[i] = normalize(out);
            }
            acc = next;
        }
        for (int i = 0; i < strands; ++i) CHECK(whole[i] == acc[i]);
    }
}

TEST_CASE("artin images fix the product of the generators") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        const int strands = 2 + static_cast<int>(rng.below(3));
        BraidWord braid;
        braid.strands = strands;
        const int len = static_cast<int>(rng.below(8));
        for (int i = 0; i < len; ++i)
            braid.letters.push_back({1 + static_cast<int>(rng.below(strands - 1)),
                                     rng.below(2) == 0 ? 1 : -1});
        auto img = artin_image(braid);
        Word prod, expected;
        for (int i = 0; i < strands; ++i) {
            prod = prod * img[i];
            expected = expected * Word::generator(i);
        }
        CHECK(normalize(prod) == expected);
    }
}

TEST_CASE("check_representation on the Heisenberg matrices over Q(i)") {
    CyclotomicField C4(4);
    auto sl2 = parse_group("SL2");
    auto I = C4.zeta(1);
    auto alpha = make_element(C4, sl2, {{{C4.from_long(-1), C4.zero()},
                                          {C4.zero(), C4.from_long(-1)}}});
    auto beta = make_element(C4, sl2, {{{I, C4.zero()}, {C4.zero(), C4.neg(I)}}});
    auto gamma = make_element(C4, sl2, {{{C4.zero(), C4.from_long(-1)},
                                          {C4.one(), C4.zero()}}});
    Presentation heis{3, {parse_word("abAB"), parse_word("acAC"), parse_word("cbCBA")}};
    CHECK(check_representation(C4, heis, {alpha, beta, gamma}));
    // swapping beta and gamma breaks the last relator
    CHECK_FALSE(check_representation(C4, heis, {alpha, gamma, beta}));
}
