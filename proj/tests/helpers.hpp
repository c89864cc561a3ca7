#ifndef BLOWUP_TEST_HELPERS_HPP
#define BLOWUP_TEST_HELPERS_HPP

#include <random>

#include "blowup/ideal.hpp"
#include "blowup/monomial_ideal.hpp"

namespace testutil {

using namespace blowup;

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    Monomial m;
    m.n = nvars;
    for (int i = 0; i < nvars; ++i) {
        m.e[i] = d(rng);
        m.deg += m.e[i];
    }
    return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingCtx& R, int terms,
                              int max_exp) {
    std::uniform_int_distribution<std::uint32_t> c(0, R.field.p - 1);
    Polynomial f;
    for (int t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::term(random_monomial(rng, R.nvars(), max_exp), c(rng));
        f = poly_add(R, f, mono);
    }
    return f;
}

// random m-primary monomial ideal: one pure power per variable plus extras
inline Ideal random_primary_monomial_ideal(std::mt19937_64& rng, const RingPtr& ctx,
                                           int max_exp, int extras) {
    std::uniform_int_distribution<int> e(1, max_exp);
    std::vector<Polynomial> gens;
    for (int i = 0; i < ctx->nvars(); ++i) {
        Monomial m = Monomial::one(ctx->nvars());
        m.e[i] = e(rng);
        m.deg = m.e[i];
        gens.push_back(Polynomial::term(m, 1));
    }
    for (int t = 0; t < extras; ++t) {
        Monomial m = random_monomial(rng, ctx->nvars(), max_exp);
        if (m.deg == 0) continue;
        gens.push_back(Polynomial::term(m, 1));
    }
    return Ideal(ctx, std::move(gens));
}

} // namespace testutil

#endif
