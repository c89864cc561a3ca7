#include <catch2/catch_amalgamated.hpp>

#include "blowup/invariants.hpp"
#include "helpers.hpp"

using namespace blowup;

TEST_CASE("binomial and exact interpolation") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-3, 1) == -3); // generalized, for interpolation off-window
    CHECK(binomial(-2, 2) == 3);
    CHECK(binomial(4, -1) == 0);
    // newton_eval reproduces a cubic
    auto cube = [](std::int64_t m) { return 2 * m * m * m - m + 5; };
    std::vector<std::int64_t> v = {cube(3), cube(4), cube(5), cube(6)};
    for (int x = 0; x < 12; ++x)
        CHECK(detail::newton_eval(v, 3, x) == cube(x));
}

TEST_CASE("binomial basis extraction round-trips") {
    // P(m) = 4*C(m+1,2) - 1*C(m,1) + 3 has coefficients (4, 1, -3)
    auto P = [](std::int64_t m) { return 4 * binomial(m + 1, 2) - binomial(m, 1) + 3; };
    std::vector<std::int64_t> window = {P(2), P(3), P(4)};
    auto c = detail::binomial_basis_coeffs(window, 2, 2);
    CHECK(c == std::vector<std::int64_t>{4, 1, 3});
}

TEST_CASE("one variable: I = (t^3)") {
    auto ctx = make_ring({"t"}, 32003);
    Ideal I = make_ideal(ctx, {"t^3"});
    InvariantReport rep = bounds_report(I);
    CHECK(rep.d == 1);
    CHECK(rep.e == std::vector<std::int64_t>{3, 0});
    CHECK(rep.f == std::vector<std::int64_t>{1});
    CHECK(rep.r_J == 0);
    CHECK(rep.lambda == 3);
    CHECK(rep.mu == 1);
    CHECK(rep.fiber_cm.cm);
}

TEST_CASE("the square of the maximal ideal in two variables") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = ideal_power(maximal_ideal(ctx), 2);
    ReportOptions opt;
    opt.closure_bounds = 0;
    InvariantReport rep = bounds_report(I, opt);
    // closed forms: lambda(R/I^m) = C(2m+1,2), mu(I^m) = 2m+1
    CHECK(rep.e == std::vector<std::int64_t>{4, 1, 0});
    CHECK(rep.f[0] == 2);
    CHECK(rep.lambda == 3);
    CHECK(rep.mu == 3);
    CHECK(rep.sally == 0);
    CHECK(rep.r_J == 1);
    CHECK(rep.fiber_cm.cm);
    for (int m = 1; m <= 4; ++m) {
        CHECK(rep.lambda_samples.values[static_cast<size_t>(m - 1)].second ==
              binomial(2 * m + 1, 2));
        CHECK(rep.mu_samples.values[static_cast<size_t>(m - 1)].second == 2 * m + 1);
    }
    bool sally_eq = false, exact_r1 = false;
    for (const auto& b : rep.bounds) {
        if (b.name == "f0_le_sally_bound") sally_eq = (b.status == "equality");
        if (b.name == "r1_forces_f0_eq_mu_minus_d_plus_1") {
            exact_r1 = true;
            CHECK(b.relation == "==");
            CHECK(b.status == "equality");
        }
    }
    CHECK(sally_eq);
    CHECK(exact_r1);
    // the Veronese fiber has minimal multiplicity here: f0 = e1 + 1
    CHECK(rep.goto_min_mult);
}

TEST_CASE("parameter ideals have Sally degree zero and trivial fiber") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^2", "y^2"});
    ReportOptions opt;
    opt.closure_bounds = 0;
    InvariantReport rep = bounds_report(I, opt);
    CHECK(rep.e[0] == 4);
    CHECK(rep.sally == 0);
    CHECK(rep.f[0] == 1);
    CHECK(rep.r_J == 0);
    CHECK(rep.fiber_cm.cm);
}

TEST_CASE("a user-supplied reduction is certified before use") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = ideal_power(maximal_ideal(ctx), 2);
    Ideal J = make_ideal(ctx, {"x^2", "y^2"});
    InvariantReport rep = bounds_report(I, {}, &J);
    CHECK(rep.J_user_given);
    CHECK(rep.r_J == 1);
    Ideal bad = make_ideal(ctx, {"x^2", "x*y"});
    ReportOptions tight;
    tight.cap = 4;
    CHECK_THROWS_AS(bounds_report(I, tight, &bad), cap_exceeded_error);
}

TEST_CASE("closure-backed bounds appear for planar monomial ideals") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^4", "x^3*y", "x*y^3", "y^4"});
    InvariantReport rep = bounds_report(I); // auto: on in 2 polynomial variables
    CHECK(rep.has_rr);
    CHECK(rep.has_s2);
    CHECK(rep.has_ibar);
    std::int64_t rr_rhs = 0, base_rhs = 0;
    for (const auto& b : rep.bounds) {
        if (b.name == "f0_le_sally_bound") base_rhs = b.rhs;
        if (b.name == "f0_le_rr_sally_bound") rr_rhs = b.rhs;
        CHECK(b.status != "violated");
    }
    // the closure-based right-hand side can only sharpen the plain one
    CHECK(rr_rhs <= base_rhs);
}

TEST_CASE("non-primary input is rejected") {
    auto ctx = make_ring({"x", "y"}, 32003);
    CHECK_THROWS_AS(bounds_report(make_ideal(ctx, {"x"})), error);
}

TEST_CASE("random planar monomial ideals satisfy every unconditional bound") {
    auto ctx = make_ring({"x", "y"}, 32003);
    std::mt19937_64 rng(53);
    ReportOptions opt;
    opt.closure_bounds = 0;
    for (int t = 0; t < 10; ++t) {
        Ideal I = testutil::random_primary_monomial_ideal(rng, ctx, 6, 2);
        opt.seed = 100 + static_cast<std::uint64_t>(t);
        InvariantReport rep = bounds_report(I, opt); // throws on any violation
        CHECK(rep.e[0] >= 1);
        CHECK(rep.f[0] >= 1);
        CHECK(rep.f[0] <= std::min(rep.e[0], rep.e[1] + 1));
    }
}
