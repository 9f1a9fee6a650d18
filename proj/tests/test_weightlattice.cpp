#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pwlie/weightlattice.hpp"

using namespace pwlie;

namespace {

FiniteWeight fw(std::vector<Int> c) { return FiniteWeight(std::move(c)); }

}  // namespace

TEST_CASE("canonical form min-normalizes") {
    CHECK(fw({0, 1, 0, 0, 0, -1}).coords() == std::vector<Int>{1, 2, 1, 1, 1, 0});
    CHECK(fw({3, 3}).coords() == std::vector<Int>{0, 0});
    CHECK(fw({5, 4, 3, 2, 1, 0}).coords() == std::vector<Int>{5, 4, 3, 2, 1, 0});
}

TEST_CASE("inner products") {
    AlgebraContext ctx(5);
    CHECK(inner(fw({1, 0, 0, 0, 0, 0}), fw({1, 0, 0, 0, 0, 0}), ctx) == Rational(5, 6));
    CHECK(inner(FiniteWeight::zero(ctx), fw({3, 1, 1, 1, 1, 0}), ctx) == 0);
    CHECK(inner(fw({2, 2, 1, 1, 1, 0}), fw({2, 2, 1, 1, 1, 0}), ctx) == Rational(17, 6));
    CHECK_THROWS_AS(inner(fw({1, 0}), fw({1, 0, 0, 0, 0, 0}), ctx), std::invalid_argument);
}

TEST_CASE("inner product properties") {
    AlgebraContext ctx(3);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<Int> coord(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> a(4), b(4);
        for (auto& x : a) x = coord(rng);
        for (auto& x : b) x = coord(rng);
        FiniteWeight wa(a), wb(b);
        // symmetry
        CHECK(inner(wa, wb, ctx) == inner(wb, wa, ctx));
        // shift invariance: the constructor normalizes, so any shifted input
        // collapses to the same value
        Int m = coord(rng);
        std::vector<Int> shifted = a;
        for (auto& x : shifted) x += m;
        CHECK(inner(FiniteWeight(shifted), wb, ctx) == inner(wa, wb, ctx));
        // positive semidefinite, zero only at the zero weight
        Rational norm = inner(wa, wa, ctx);
        CHECK(norm >= 0);
        CHECK((norm == 0) == wa.is_zero());
    }
}

TEST_CASE("dynkin labels") {
    CHECK(to_dynkin(fw({2, 1, 1, 1, 1, 0})) == std::vector<Int>{1, 0, 0, 0, 1});
    CHECK(to_dynkin(fw({5, 4, 3, 2, 1, 0})) == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(to_dynkin(fw({0, 0, 0, 0, 0, 0})) == std::vector<Int>{0, 0, 0, 0, 0});

    std::vector<Int> labels{1, 0, 0, 0, 1};
    CHECK(from_dynkin(labels).coords() == std::vector<Int>{2, 1, 1, 1, 1, 0});

    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> label(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> l(4);
        for (auto& x : l) x = label(rng);
        FiniteWeight w = from_dynkin(l);
        CHECK(to_dynkin(w) == l);
        CHECK(w.is_dominant());
    }
}

TEST_CASE("dominant representative and parity") {
    auto [rep, parity] = dominant_representative(fw({0, 1, 0, 0, 0, -1}));
    CHECK(rep == fw({2, 1, 1, 1, 1, 0}));
    CHECK(parity == 0);  // repeated coordinates

    auto [rep2, parity2] = dominant_representative(fw({5, 3, 1, 0}));
    CHECK(rep2 == fw({5, 3, 1, 0}));
    CHECK(parity2 == 1);

    auto [rep3, parity3] = dominant_representative(fw({0, 1}));
    CHECK(rep3 == fw({1, 0}));
    CHECK(parity3 == -1);
}

TEST_CASE("congruence classes") {
    AlgebraContext ctx(5);
    CHECK(class_of(fw({1, 0, 0, 0, 0, 0}), ctx) == 1);
    CHECK(class_of(fw({2, 1, 1, 1, 1, 0}), ctx) == 0);
    CHECK(class_of(FiniteWeight::zero(ctx), ctx) == 0);

    std::mt19937 rng(99);
    std::uniform_int_distribution<Int> coord(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> a(6), b(6);
        for (auto& x : a) x = coord(rng);
        for (auto& x : b) x = coord(rng);
        FiniteWeight wa(a), wb(b);
        CHECK(class_of(wa + wb, ctx) == (class_of(wa, ctx) + class_of(wb, ctx)) % 6);
    }
}

TEST_CASE("weyl vectors") {
    AlgebraContext a5(5), a1(1);
    CHECK(weyl_vector(a5) == fw({5, 4, 3, 2, 1, 0}));
    CHECK(weyl_vector(a1) == fw({1, 0}));
    AffineDominant rho = affine_weyl_vector(a5);
    CHECK(rho.labels() == std::vector<Int>{1, 1, 1, 1, 1, 1});
    CHECK(rho.level() == 6);
    CHECK(rho.is_strictly_dominant());
}

TEST_CASE("affine dominant weights") {
    AlgebraContext ctx(5);
    AffineDominant w(ctx, {2, 2, 1, 1, 1, 1});
    CHECK(w.level() == 8);
    CHECK(w.finite_part() == fw({6, 4, 3, 2, 1, 0}));
    CHECK(w.is_strictly_dominant());

    AffineDominant l0(ctx, {1, 0, 0, 0, 0, 0});
    CHECK(l0.finite_part().is_zero());
    CHECK_FALSE(l0.is_strictly_dominant());

    CHECK_THROWS_AS(AffineDominant(ctx, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(AffineDominant(ctx, {1, -1, 0, 0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(AffineDominant(ctx, {1, 0}), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(fw({1, 0, 0, 0, 0, 0})) == fw({1, 1, 1, 1, 1, 0}));
    CHECK(conjugate(fw({5, 4, 3, 2, 1, 0})) == fw({5, 4, 3, 2, 1, 0}));
    std::mt19937 rng(11);
    std::uniform_int_distribution<Int> coord(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> a(6);
        for (auto& x : a) x = coord(rng);
        FiniteWeight w(a);
        CHECK(conjugate(conjugate(w)) == w);
    }
}

TEST_CASE("display format and parsing") {
    AlgebraContext ctx(5);
    CHECK(display(fw({5, 4, 3, 2, 1, 0}), 0) == "(5,4,3,2,1)_0");
    CHECK(display(fw({2, 1, 1, 1, 1, 0}), 1) == "(2,1,1,1,1)_1");

    auto [w, d] = parse_display("(7,5,4,3,2)_1", ctx);
    CHECK(w == fw({7, 5, 4, 3, 2, 0}));
    CHECK(d == 1);

    CHECK_THROWS_AS(parse_display("(,4,2,1,1,0)_5", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_display("(1,2)_0", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_display("1,2,3,4,5", ctx), std::invalid_argument);

    CHECK(parse_int_list("1,0,0,0,0,0") == std::vector<Int>{1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
}
