#ifndef BLOWUP_CLOSURES_HPP
#define BLOWUP_CLOSURES_HPP

#include "blowup/monomial_ideal.hpp"
#include "blowup/reduction.hpp"

namespace blowup {

struct stabilization_error : error {
    using error::error;
};

enum class ClosureKind { RatliffRush, S2Ideal, IntegralMonomial };

inline const char* closure_kind_name(ClosureKind k) {
    switch (k) {
    case ClosureKind::RatliffRush: return "ratliff_rush";
    case ClosureKind::S2Ideal: return "s2_ideal";
    case ClosureKind::IntegralMonomial: return "integral_monomial";
    }
    return "?";
}

struct ClosureResult {
    Ideal input;
    Ideal closed;
    ClosureKind kind;
    int iterations = 0;     // colon iterations used (Ratliff-Rush only)
    int stabilized_at = 0;  // index where successive colons agreed
    std::int64_t mu_closed = 0;
    std::int64_t lambda_closed = 0;
    int reduction_number_used = 0; // s2_ideal only
};

namespace detail {

inline void fill_closed_stats(ClosureResult& res) {
    auto lam = length_of_quotient(res.closed);
    res.lambda_closed = lam ? *lam : -1;
    res.mu_closed = min_gens(res.closed);
}

} // namespace detail

// Ratliff-Rush closure by iterated colons C_n = (I^{n+1} : I^n), returning
// the first C_n that repeats for `confirm` further steps.  The stabilization
// certificate is heuristic: the paper gives no effective bound, so agreement
// over a finite window is what the result records.
inline ClosureResult ratliff_rush(const Ideal& I, int n_max = 12, int confirm = 2) {
    if (!is_only_origin(I))
        throw error("ratliff_rush: ideal is not supported only at the origin");
    ClosureResult res;
    res.input = I;
    res.kind = ClosureKind::RatliffRush;

    std::vector<Ideal> colons; // C_1, C_2, ...
    Ideal power = I; // I^n
    int agree = 0;
    for (int n = 1; n <= n_max + confirm; ++n) {
        Ideal next = ideal_product(power, I); // I^{n+1}
        Ideal C = ideal_colon(next, power);
        if (!colons.empty() && ideal_equal(colons.back(), C)) {
            ++agree;
        } else {
            agree = 0;
        }
        colons.push_back(C);
        res.iterations = n;
        if (agree >= confirm) {
            res.stabilized_at = n - confirm;
            res.closed = colons[static_cast<size_t>(res.stabilized_at - 1)];
            if (!ideal_contains(res.closed, I))
                throw error("ratliff_rush: closure does not contain the input");
            detail::fill_closed_stats(res);
            return res;
        }
        power = std::move(next);
    }
    throw stabilization_error("ratliff_rush: no stabilization within n_max = " +
                              std::to_string(n_max));
}

// Degree-one component of the S2-ification of the Rees algebra, in the
// 2-dimensional regular case: J : (J^r : I^r) with r = r_J(I).
inline ClosureResult s2_ideal(const Ideal& I, const Ideal* J_opt = nullptr,
                              std::uint64_t seed = 1, int cap = 12) {
    const RingCtx& R = *I.ctx;
    if (R.nvars() != 2 || !R.quotient.empty())
        throw error("s2_ideal: requires a 2-variable polynomial ring");
    if (!is_only_origin(I))
        throw error("s2_ideal: ideal is not supported only at the origin");

    Ideal J;
    int r;
    if (J_opt) {
        J = *J_opt;
        if (trim_generators(J).gens.size() > 2)
            throw error("s2_ideal: J is not 2-generated");
        r = reduction_number(I, J, cap); // throws if J is not a reduction
    } else {
        ReductionResult red = minimal_reduction(I, seed, cap);
        J = red.J;
        r = red.r;
    }

    ClosureResult res;
    res.input = I;
    res.kind = ClosureKind::S2Ideal;
    res.reduction_number_used = r;
    if (r == 0) {
        res.closed = I;
    } else {
        // J is a reduction only locally; its component at the origin has the
        // same localization, and keeping every colon over m-primary ideals
        // with compact staircases avoids the blowup of the global computation
        Ideal Jloc = local_part(J);
        Ideal Jr = ideal_power(Jloc, r);
        Ideal Ir = ideal_power(I, r);
        Ideal inner = colon_primary(Jr, Ir);
        res.closed = colon_primary(Jloc, inner);
    }
    if (!ideal_contains(res.closed, I))
        throw error("s2_ideal: closure does not contain the input");
    detail::fill_closed_stats(res);
    return res;
}

// integral closure, delegated to the Newton-polyhedron path; monomial only
inline ClosureResult integral_closure(const Ideal& I) {
    auto M = as_monomial_ideal(I);
    if (!M)
        throw error("integral_closure: only monomial ideals in polynomial rings "
                    "are supported");
    ClosureResult res;
    res.input = I;
    res.kind = ClosureKind::IntegralMonomial;
    res.closed = to_ideal(integral_closure_monomial(*M));
    detail::fill_closed_stats(res);
    return res;
}

} // namespace blowup

#endif
