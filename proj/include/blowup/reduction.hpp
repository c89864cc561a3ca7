#ifndef BLOWUP_REDUCTION_HPP
#define BLOWUP_REDUCTION_HPP

#include <random>

#include "blowup/ideal.hpp"

namespace blowup {

struct cap_exceeded_error : error {
    using error::error;
};

// least r <= cap with I^{r+1} = J * I^r in the localization at the origin.
// J*I^r <= I^{r+1} locally, so equal local colengths certify local equality;
// global comparison would be wrong whenever J has zeros away from the origin.
// Replacing J by its component at the origin keeps both sides m-primary, so
// plain colengths are the local ones.
inline int reduction_number(const Ideal& I, const Ideal& J, int cap = 12) {
    require_same_ctx(I.ctx, J.ctx);
    if (!ideal_contains(I, J))
        throw error("reduction_number: J is not contained in I");
    Ideal Jloc = is_only_origin(J) ? J : local_part(J);
    Ideal power = unit_ideal(I.ctx); // I^r
    for (int r = 0; r <= cap; ++r) {
        Ideal lhs = ideal_product(power, I); // I^{r+1}
        Ideal rhs = ideal_product(Jloc, power);
        auto ll = length_of_quotient(lhs);
        auto lr = length_of_quotient(rhs);
        if (ll && lr && *ll == *lr) return r;
        power = std::move(lhs);
    }
    throw cap_exceeded_error("reduction_number: no r <= " + std::to_string(cap) +
                             " with I^{r+1} = J*I^r (J may not be a reduction)");
}

struct ReductionResult {
    Ideal J;
    int r = 0;
    int attempts = 1;
};

// J generated by d random F_p-combinations of I's generators, certified by
// reduction_number within the cap; deterministic for a fixed seed.
inline ReductionResult minimal_reduction(const Ideal& I, std::uint64_t seed,
                                         int cap = 12, int retries = 8) {
    const RingCtx& R = *I.ctx;
    int d = R.dim;
    if (d < 1) throw error("minimal_reduction: ring dimension must be >= 1");
    if (static_cast<int>(I.gens.size()) <= d) {
        // already generated by <= d elements: I is its own minimal reduction
        return {I, 0, 0};
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, R.field.p - 1);
    for (int attempt = 1; attempt <= retries; ++attempt) {
        std::vector<Polynomial> jgens;
        for (int i = 0; i < d; ++i) {
            Polynomial g;
            for (const auto& f : I.gens)
                g = poly_add(R, g, poly_scale(R, dist(rng), f));
            jgens.push_back(g);
        }
        Ideal J(I.ctx, std::move(jgens));
        try {
            int r = reduction_number(I, J, cap);
            return {J, r, attempt};
        } catch (const cap_exceeded_error&) {
            continue;
        } catch (const error&) {
            continue; // degenerate draw (e.g. a zero combination)
        }
    }
    throw cap_exceeded_error(
        "minimal_reduction: retry limit exhausted (raise the cap or the prime)");
}

} // namespace blowup

#endif
