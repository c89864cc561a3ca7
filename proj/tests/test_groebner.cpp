#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace blowup;

namespace {

// Buchberger criterion, checked directly: every S-polynomial of the basis
// reduces to zero.  Independent of the pair-pruning logic in the engine.
bool is_groebner(const RingCtx& R, const std::vector<Polynomial>& G) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            Monomial l = Monomial::lcm(G[i].lm(), G[j].lm());
            Polynomial s = poly_sub(
                R, poly_mul_term(R, G[i], l.div(G[i].lm()), R.field.inv(G[i].lc())),
                poly_mul_term(R, G[j], l.div(G[j].lm()), R.field.inv(G[j].lc())));
            if (!detail::reduce_full(R, s, G).is_zero()) return false;
        }
    return true;
}

} // namespace

TEST_CASE("groebner basis of textbook examples") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"});
    const GroebnerBasis& G = gb(I);
    CHECK(is_groebner(*ctx, G.elems));
    // classical result: the reduced degrevlex basis is {x^2, x*y, y^2 - x/2}
    REQUIRE(G.elems.size() == 3);
    CHECK(poly_to_string(*ctx, G.elems[0]) == "y^2 + 16001*x"); // y^2 - x/2
    CHECK(poly_to_string(*ctx, G.elems[1]) == "x*y");
    CHECK(poly_to_string(*ctx, G.elems[2]) == "x^2");
}

TEST_CASE("normal forms are canonical and membership is decided") {
    auto ctx = make_ring({"x", "y", "z"}, 32003);
    Ideal I = make_ideal(ctx, {"x^2 + y", "y^2 + z", "z^2 + x"});
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = testutil::random_poly(rng, *ctx, 4, 3);
        Polynomial g = testutil::random_poly(rng, *ctx, 3, 2);
        // f and f + (element of I) have the same normal form
        Polynomial elem = poly_mul(*ctx, g, I.gens[t % I.gens.size()]);
        CHECK(normal_form(f, gb(I)) == normal_form(poly_add(*ctx, f, elem), gb(I)));
        CHECK(ideal_contains(I, elem));
        // the normal form itself is a fixed point
        Polynomial nf = normal_form(f, gb(I));
        CHECK(normal_form(nf, gb(I)) == nf);
    }
}

TEST_CASE("buchberger output passes the S-pair criterion on random ideals") {
    auto ctx = make_ring({"x", "y", "z"}, 32003);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        std::vector<Polynomial> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(testutil::random_poly(rng, *ctx, 3, 3));
        auto G = detail::buchberger(*ctx, gens);
        if (G.size() == 1 && G[0].lm().is_one()) continue;
        CHECK(is_groebner(*ctx, G));
        // reduced: no term of any element divisible by another lead
        for (size_t i = 0; i < G.size(); ++i)
            for (size_t j = 0; j < G.size(); ++j) {
                if (i == j) continue;
                for (const auto& [m, c] : G[i].terms) CHECK_FALSE(G[j].lm().divides(m));
            }
        // generator order must not matter
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(detail::buchberger(*ctx, gens) == G);
    }
}

TEST_CASE("unit ideal detection") {
    auto ctx = make_ring({"x", "y"}, 32003);
    Ideal I = make_ideal(ctx, {"x + 1", "x"});
    CHECK(gb(I).is_unit());
    CHECK(ideal_contains(I, Polynomial::constant(2, 1)));
}

TEST_CASE("quotient rings fold the defining relations into every basis") {
    auto ctx = make_ring({"x", "y"}, 32003, MonomialOrder::degrevlex(), {"y^2 - x^3"});
    CHECK(ctx->dim == 1);
    Ideal I = make_ideal(ctx, {"x"});
    CHECK(ideal_contains(I, parse_poly(*ctx, "y^2"))); // y^2 = x^3 in the quotient
    CHECK_FALSE(ideal_contains(I, parse_poly(*ctx, "y")));
    auto len = length_of_quotient(I);
    REQUIRE(len.has_value());
    CHECK(*len == 2); // R/(x) = k[y]/(y^2)
}

TEST_CASE("combinatorial dimension") {
    auto ctx = make_ring({"x", "y", "z"}, 32003);
    CHECK(krull_dim(make_ideal(ctx, {"x"})) == 2);
    CHECK(krull_dim(make_ideal(ctx, {"x*y", "x*z"})) == 2); // V(x) union V(y,z)
    CHECK(krull_dim(make_ideal(ctx, {"x", "y", "z"})) == 0);
    CHECK(krull_dim(make_ideal(ctx, {"x - y^2"})) == 2);
}

TEST_CASE("elimination computes intersections with subrings") {
    // twisted cubic: eliminate t from (x - t, y - t^2, z - t^3)
    auto ctx = make_ring({"t", "x", "y", "z"}, 32003);
    Ideal I = make_ideal(ctx, {"x - t", "y - t^2", "z - t^3"});
    Ideal E = ideal_eliminate(I, {1, 2, 3});
    for (const auto& g : E.gens)
        for (const auto& [m, c] : g.terms) CHECK(m.e[0] == 0);
    CHECK(ideal_contains(E, parse_poly(*ctx, "y - x^2")));
    CHECK(ideal_contains(E, parse_poly(*ctx, "z - x*y")));
    CHECK(ideal_contains(E, parse_poly(*ctx, "x*z - y^2")));
    CHECK_FALSE(ideal_contains(E, parse_poly(*ctx, "x")));
}

TEST_CASE("make_ring input validation") {
    CHECK_THROWS_AS(make_ring({"x", "x"}, 32003), error);
    CHECK_THROWS_AS(make_ring({}, 32003), error);
    CHECK_THROWS_AS(make_ring({"a", "b", "c", "d", "e", "f", "g", "h", "i"}, 32003), error);
    CHECK_THROWS_AS(make_ring({"x"}, 32003, MonomialOrder::degrevlex(), {"1 + x - x"}), error);
}
