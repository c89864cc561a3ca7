#include <catch2/catch_amalgamated.hpp>

#include "blowup/closures.hpp"
#include "helpers.hpp"

using namespace blowup;

TEST_CASE("ratliff_rush of the classical quartic example") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^4", "x^3*y", "x*y^3", "y^4"});
    ClosureResult rr = ratliff_rush(I);
    // the closure picks up x^2 y^2 and becomes (x, y)^4
    CHECK(ideal_equal(rr.closed, ideal_power(maximal_ideal(ctx), 4)));
    CHECK(rr.mu_closed == 5);
    CHECK(rr.lambda_closed == 10);
    CHECK(ideal_contains(rr.closed, I));
}

TEST_CASE("ratliff_rush is idempotent and fixes stable ideals") {
    auto ctx = make_ring({"x", "y"}, 32003);
    // a parameter ideal is Ratliff-Rush closed
    Ideal P = make_ideal(ctx, {"x^3", "y^5"});
    CHECK(ideal_equal(ratliff_rush(P).closed, P));
    // idempotence on the quartic example
    Ideal I = make_ideal(ctx, {"x^4", "x^3*y", "x*y^3", "y^4"});
    Ideal C = ratliff_rush(I).closed;
    CHECK(ideal_equal(ratliff_rush(C).closed, C));
}

TEST_CASE("ratliff_rush preserves the Hilbert function in high powers") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^4", "x^3*y", "x*y^3", "y^4"});
    Ideal C = ratliff_rush(I).closed;
    for (int m = 2; m <= 4; ++m) {
        auto a = length_of_quotient(ideal_power(I, m));
        auto b = length_of_quotient(ideal_power(C, m));
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }
}

TEST_CASE("ratliff_rush rejects non-primary input") {
    auto ctx = make_ring({"x", "y"}, 32003);
    CHECK_THROWS_AS(ratliff_rush(make_ideal(ctx, {"x"})), error);
}

TEST_CASE("reduction numbers") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal m2 = ideal_power(maximal_ideal(ctx), 2);
    Ideal J = make_ideal(ctx, {"x^2", "y^2"});
    CHECK(reduction_number(m2, J) == 1);           // m^4 = J m^2
    CHECK(reduction_number(m2, m2) == 0);
    CHECK_THROWS_AS(reduction_number(J, m2), error); // m2 not inside J
    // (x^2, xy) is not a reduction of m^2: the cap is exhausted
    CHECK_THROWS_AS(reduction_number(m2, make_ideal(ctx, {"x^2", "x*y"}), 5),
                    cap_exceeded_error);
}

TEST_CASE("minimal_reduction is deterministic per seed and certified") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal m2 = ideal_power(maximal_ideal(ctx), 2);
    ReductionResult a = minimal_reduction(m2, 5);
    ReductionResult b = minimal_reduction(m2, 5);
    CHECK(a.r == b.r);
    CHECK(a.r == 1);
    CHECK(a.J.gens.size() == 2);
    for (const auto& g : a.J.gens) CHECK(poly_to_string(*ctx, g) ==
                                         poly_to_string(*ctx, b.J.gens[&g - a.J.gens.data()]));
    // two-generated input is its own reduction
    Ideal P = make_ideal(ctx, {"x^3", "y^4"});
    CHECK(minimal_reduction(P, 1).r == 0);
}

TEST_CASE("s2_ideal on the planar fixture family") {
    auto ctx = make_ring({"x", "y"}, 32003);
    // for a parameter ideal nothing moves
    Ideal P = make_ideal(ctx, {"x^2", "y^3"});
    ClosureResult c = s2_ideal(P);
    CHECK(ideal_equal(c.closed, P));
    CHECK(c.reduction_number_used == 0);
    // integrally closed ideals are fixed: m^2
    Ideal m2 = ideal_power(maximal_ideal(ctx), 2);
    ClosureResult cm = s2_ideal(m2);
    CHECK(ideal_equal(cm.closed, m2));
    // dimension restriction
    auto ctx3 = make_ring({"x", "y", "z"}, 32003);
    CHECK_THROWS_AS(s2_ideal(make_ideal(ctx3, {"x", "y", "z"})), error);
}

TEST_CASE("closure chain I <= rr <= s2 <= integral closure") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^8", "x^3*y^2", "x^2*y^4", "y^8"});
    Ideal rr = ratliff_rush(I).closed;
    Ideal s2 = s2_ideal(I).closed;
    Ideal bar = integral_closure(I).closed;
    CHECK(ideal_contains(rr, I));
    CHECK(ideal_contains(s2, rr));
    CHECK(ideal_contains(bar, s2));
}

TEST_CASE("integral_closure task rejects non-monomial input") {
    auto ctx = make_ring({"x", "y"}, 32003);
    CHECK_THROWS_AS(integral_closure(make_ideal(ctx, {"x^2 + y^3", "y^4"})), error);
}
