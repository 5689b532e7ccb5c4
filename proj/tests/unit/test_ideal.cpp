#include <doctest.h>

#include <random>

#include "boolring/errors.hpp"
#include "boolring/fixtures.hpp"
#include "boolring/ideal.hpp"
#include "boolring/variety.hpp"
#include "helpers.hpp"

using namespace boolring;
using testutil::bp;
using testutil::points;

namespace {

BooleanIdeal ideal_of(const char* text, unsigned n) { return BooleanIdeal(bp(text, n)); }

}  // namespace

TEST_CASE("reduction of a system to one defining polynomial") {
    PolySystem two_vars(2, {bp("x1", 2), bp("x2", 2)});
    CHECK(defining_ideal(two_vars).defining() == bp("x1*x2 + x1 + x2", 2));

    BoolPoly f = bp("x1*x2 + x3 + 1", 3);
    CHECK(defining_ideal(PolySystem(3, {f})).defining() == f);

    PolySystem three(3, {bp("x1*x2 + x3", 3), bp("x1*x3 + x2", 3), bp("x3 + 1", 3)});
    BooleanIdeal reduced = defining_ideal(three);
    CHECK(reduced.defining() == bp("x1*x2*x3 + 1", 3));
    CHECK(variety_bruteforce(reduced.defining()) == points({"111"}));
    CHECK(common_zeros(three) == points({"111"}));

    CHECK(defining_ideal(PolySystem(4)).defining().is_zero());
}

TEST_CASE("defining polynomial ignores generator order") {
    std::mt19937_64 rng(421);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
        std::vector<BoolPoly> gens;
        for (unsigned g = 0; g < 3; ++g) gens.push_back(random_poly(n, 4, rng));
        BoolPoly forward = defining_ideal(PolySystem(n, gens)).defining();
        std::reverse(gens.begin(), gens.end());
        CHECK(defining_ideal(PolySystem(n, gens)).defining() == forward);
        CHECK(defining_ideal(PolySystem(n, gens), FactorOrder::size_sorted).defining() == forward);
    }
}

TEST_CASE("defining product respects the term guard") {
    PolySystem pairs = fixture_pair_family(4);
    CHECK_THROWS_AS(defining_product(pairs, FactorOrder::input, nullptr, 10), guard_error);
    std::size_t high = 0;
    BoolPoly product = defining_product(pairs, FactorOrder::input, &high);
    CHECK(product.support_size() == 81);  // 3^4
    CHECK(high == 81);
}

TEST_CASE("normal forms") {
    BooleanIdeal ideal = ideal_of("x1*x2*x3 + x3 + 1", 3);
    CHECK(normal_form(bp("x1*x3 + 1", 3), ideal) == bp("x1*x3 + x3", 3));
    CHECK(normal_form(ideal.defining(), ideal).is_zero());
    CHECK(normal_form(bp("x3 + 1", 3), ideal, BoolPoly::one(3)) == BoolPoly::one(3));
}

TEST_CASE("normal form is constant on cosets") {
    std::mt19937_64 rng(422);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
        BooleanIdeal ideal(random_poly(n, 5, rng));
        BoolPoly g = random_poly(n, 5, rng);
        BoolPoly r = random_poly(n, 5, rng);
        BoolPoly h = random_poly(n, 5, rng);
        CHECK(normal_form(g, ideal, h) == normal_form(g + ideal.defining() * r, ideal, h));
    }
}

TEST_CASE("membership") {
    BooleanIdeal ideal = ideal_of("x1*x2*x3 + x3 + 1", 3);
    CHECK(contains(ideal, bp("x3 + 1", 3)));
    CHECK_FALSE(contains(ideal, bp("x1*x3 + 1", 3)));
    CHECK(contains(ideal, BoolPoly::zero(3)));
    CHECK(contains(ideal_of("x1 + x2", 4), BoolPoly::zero(4)));
}

TEST_CASE("the ten equivalent membership conditions") {
    BooleanIdeal ideal = ideal_of("x1*x2*x3 + x3 + 1", 3);
    auto member = equivalences_report(ideal, bp("x3 + 1", 3));
    for (bool bit : member) CHECK(bit);
    auto non_member = equivalences_report(ideal, bp("x1*x3 + 1", 3));
    for (bool bit : non_member) CHECK_FALSE(bit);
    auto zero = equivalences_report(ideal, BoolPoly::zero(3));
    for (bool bit : zero) CHECK(bit);

    std::mt19937_64 rng(423);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
        BooleanIdeal lhs(random_poly(n, 5, rng));
        auto bits = equivalences_report(lhs, random_poly(n, 5, rng));
        for (bool bit : bits) CHECK(bit == bits[0]);
    }

    CHECK_THROWS_AS(equivalences_report(ideal_of("x1", 13), BoolPoly::zero(13)), guard_error);
}

TEST_CASE("colon quotients") {
    BooleanIdeal lhs = ideal_of("x1*x2*x3 + x3 + 1", 3);
    BooleanIdeal rhs = ideal_of("x3 + 1", 3);
    CHECK(colon(lhs, rhs).is_unit());
    BooleanIdeal reverse = colon(rhs, lhs);
    CHECK(reverse.defining() == bp("x1*x2*x3 + 1", 3));
    CHECK(variety_bruteforce(reverse.defining()) == points({"111"}));
    CHECK(colon(lhs, lhs).is_unit());
}

TEST_CASE("ideal sum") {
    CHECK(sum(ideal_of("x1", 2), ideal_of("x2", 2)).defining() == bp("x1*x2 + x1 + x2", 2));
    BooleanIdeal ideal = ideal_of("x1*x2 + x3", 3);
    CHECK(sum(ideal, ideal) == ideal);
}

TEST_CASE("ideal intersection") {
    BooleanIdeal lhs = ideal_of("x1*x2*x3 + x3 + 1", 3);
    BooleanIdeal rhs = ideal_of("x1*x3 + 1", 3);
    CHECK(intersect(lhs, rhs).defining() == bp("x3 + 1", 3));
    CHECK(intersect(lhs, BooleanIdeal::unit(3)) == lhs);
}

TEST_CASE("ideal operations match their set semantics by oracle") {
    std::mt19937_64 rng(424);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
        BoolPoly f = random_poly(n, 6, rng);
        BoolPoly g = random_poly(n, 6, rng);
        BooleanIdeal lhs(f), rhs(g);
        auto vf = variety_bruteforce(f);
        auto vg = variety_bruteforce(g);
        CHECK(variety_bruteforce(sum(lhs, rhs).defining()) == point_intersection(vf, vg));
        CHECK(variety_bruteforce(intersect(lhs, rhs).defining()) == point_union(vf, vg));
        CHECK(variety_bruteforce(colon(lhs, rhs).defining()) == point_difference(vf, vg));
    }
}

TEST_CASE("sum and intersection are commutative, associative, idempotent") {
    std::mt19937_64 rng(425);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
        BooleanIdeal a(random_poly(n, 5, rng));
        BooleanIdeal b(random_poly(n, 5, rng));
        BooleanIdeal c(random_poly(n, 5, rng));
        CHECK(sum(a, b) == sum(b, a));
        CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
        CHECK(sum(a, a) == a);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, a) == a);
    }
}
