#ifndef BLOWUP_INVARIANTS_HPP
#define BLOWUP_INVARIANTS_HPP

#include "blowup/closures.hpp"
#include "blowup/semigroup.hpp"

namespace blowup {

struct bound_violation : error {
    std::string bound_name;
    bound_violation(std::string name, const std::string& diag)
        : error("bound violated: " + name + " (" + diag + ")"), bound_name(std::move(name)) {}
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n < 0) return (k % 2 == 0 ? 1 : -1) * binomial(k - n - 1, k);
    if (n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sampled Hilbert function values with the accepted fit window.
struct HilbertSamples {
    std::vector<std::pair<int, std::int64_t>> values; // (m, value), m = 1,2,...
    int n0 = 0;     // least index where the polynomial fit starts
    int degree = 0; // degree of the fitted polynomial
};

namespace detail {

// evaluate the polynomial interpolating (x0 + i, v[i]) at x, exactly
inline std::int64_t newton_eval(const std::vector<std::int64_t>& v, int x0, std::int64_t x) {
    std::vector<std::int64_t> diff = v;
    std::int64_t result = 0;
    for (size_t k = 0; k < v.size(); ++k) {
        result += diff[0] * binomial(x - x0, static_cast<std::int64_t>(k));
        for (size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    return result;
}

// least n0 such that the degree-`deg` polynomial through the samples at
// n0..n0+deg also reproduces the next `confirm` samples
inline int find_stable_window(const std::vector<std::int64_t>& vals /* vals[m-1] = f(m) */,
                              int deg, int confirm) {
    int M = static_cast<int>(vals.size());
    for (int n0 = 1; n0 + deg + confirm <= M; ++n0) {
        std::vector<std::int64_t> window(vals.begin() + (n0 - 1),
                                         vals.begin() + (n0 - 1) + deg + 1);
        bool ok = true;
        for (int j = 1; j <= confirm && ok; ++j) {
            int m = n0 + deg + j;
            if (newton_eval(window, n0, m) != vals[static_cast<size_t>(m - 1)]) ok = false;
        }
        if (ok) return n0;
    }
    return -1;
}

// Coefficients c_0..c_D of P(m) = sum_i (-1)^i c_i binom(m + D - 1 - i, D - i),
// from the window values v[i] = P(n0 + i), i = 0..D.
inline std::vector<std::int64_t> binomial_basis_coeffs(std::vector<std::int64_t> v,
                                                       int n0, int D) {
    std::vector<std::int64_t> c(static_cast<size_t>(D) + 1, 0);
    for (int i = 0; i <= D; ++i) {
        int di = D - i;
        // forward difference of order di at the window start
        std::vector<std::int64_t> diff = v;
        for (int k = 0; k < di; ++k)
            for (size_t t = 0; t + 1 < diff.size(); ++t) diff[t] = diff[t + 1] - diff[t];
        std::int64_t signed_c = diff[0];
        c[static_cast<size_t>(i)] = (i % 2 == 0) ? signed_c : -signed_c;
        for (int t = 0; t <= D; ++t) {
            std::int64_t m = n0 + t;
            v[static_cast<size_t>(t)] -= signed_c * binomial(m + D - 1 - i, di);
        }
    }
    return c;
}

} // namespace detail

// Incrementally computed powers of an ideal; each power's interreduced
// generators and Groebner basis are kept for reuse across the pipeline.
class PowerTower {
public:
    explicit PowerTower(Ideal I) { pw_.push_back(std::move(I)); }

    const Ideal& base() const { return pw_.front(); }

    const Ideal& power(int m) {
        if (m < 1) throw error("PowerTower: exponent must be >= 1");
        while (static_cast<int>(pw_.size()) < m)
            pw_.push_back(ideal_product(pw_.back(), pw_.front()));
        return pw_[static_cast<size_t>(m - 1)];
    }

    std::int64_t lambda(int m) {
        auto l = length_of_quotient(power(m));
        if (!l) throw error("PowerTower: quotient length is not finite");
        return *l;
    }

    std::int64_t mu(int m) {
        const Ideal& P = power(m);
        Ideal mP = ideal_product(maximal_ideal(P.ctx), P);
        auto lm = length_of_quotient(mP);
        if (!lm) throw error("PowerTower: quotient length is not finite");
        return *lm - lambda(m);
    }

private:
    std::vector<Ideal> pw_;
};

struct HilbertFit {
    std::vector<std::int64_t> coeffs; // binomial-basis coefficients
    HilbertSamples samples;
};

// (e_0, ..., e_d) of lambda(R/I^m); cross-checks e_0 = lambda(R/J)
inline HilbertFit hilbert_samuel_coeffs(PowerTower& T, const Ideal& J,
                                        int budget = -1, int confirm = 2) {
    int d = T.base().ctx->dim;
    if (budget < 0) budget = d + 6;
    std::vector<std::int64_t> vals;
    HilbertFit out;
    for (int m = 1; m <= budget; ++m) {
        vals.push_back(T.lambda(m));
        out.samples.values.emplace_back(m, vals.back());
    }
    int n0 = detail::find_stable_window(vals, d, confirm);
    if (n0 < 0)
        throw error("hilbert_samuel_coeffs: no stabilization within the sampling budget");
    out.samples.n0 = n0;
    out.samples.degree = d;
    std::vector<std::int64_t> window(vals.begin() + (n0 - 1), vals.begin() + (n0 - 1) + d + 1);
    out.coeffs = detail::binomial_basis_coeffs(window, n0, d);
    auto lj = local_length(J);
    if (!lj || *lj != out.coeffs[0])
        throw error("hilbert_samuel_coeffs: e0 = " + std::to_string(out.coeffs[0]) +
                    " does not match the local length of R/J" +
                    (lj ? " = " + std::to_string(*lj) : " (infinite)"));
    return out;
}

// (f_0, ..., f_{d-1}) of mu(I^m)
inline HilbertFit fiber_multiplicity(PowerTower& T, int budget = -1, int confirm = 2) {
    int d = T.base().ctx->dim;
    if (budget < 0) budget = d + 5;
    std::vector<std::int64_t> vals;
    HilbertFit out;
    for (int m = 1; m <= budget; ++m) {
        vals.push_back(T.mu(m));
        out.samples.values.emplace_back(m, vals.back());
    }
    int n0 = detail::find_stable_window(vals, d - 1, confirm);
    if (n0 < 0)
        throw error("fiber_multiplicity: no stabilization within the sampling budget");
    out.samples.n0 = n0;
    out.samples.degree = d - 1;
    std::vector<std::int64_t> window(vals.begin() + (n0 - 1), vals.begin() + (n0 - 1) + d);
    out.coeffs = detail::binomial_basis_coeffs(window, n0, d - 1);
    return out;
}

inline std::int64_t sally_degree(std::int64_t e0, std::int64_t e1, std::int64_t lambda) {
    std::int64_t s = e1 - e0 + lambda;
    if (s < 0)
        throw error("sally_degree: negative value " + std::to_string(s) +
                    " (implementation bug)");
    return s;
}

struct FiberCmResult {
    bool cm = false;
    std::int64_t lhs = 0; // f0
    std::int64_t rhs = 0; // 1 + sum mu(I^j / J I^{j-1})
    std::vector<std::int64_t> summands;
};

// Cohen-Macaulayness of the fiber cone from generator counts:
// f0 <= 1 + sum_{j=1..r} mu(I^j/JI^{j-1}), with equality iff CM
inline FiberCmResult fiber_cm_test(PowerTower& T, const Ideal& J, int r, std::int64_t f0) {
    FiberCmResult res;
    res.lhs = f0;
    res.rhs = 1;
    const RingPtr& ctx = T.base().ctx;
    Ideal m = maximal_ideal(ctx);
    for (int j = 1; j <= r; ++j) {
        Ideal JI = j == 1 ? J : ideal_product(J, T.power(j - 1));
        Ideal denom = ideal_sum(JI, ideal_product(m, T.power(j)));
        auto ld = length_of_quotient(denom);
        if (!ld) throw error("fiber_cm_test: quotient length is not finite");
        std::int64_t summand = *ld - T.lambda(j);
        res.summands.push_back(summand);
        res.rhs += summand;
    }
    if (res.lhs > res.rhs)
        throw bound_violation("fiber_generator_bound",
                              "f0 = " + std::to_string(res.lhs) + " > " +
                              std::to_string(res.rhs));
    res.cm = (res.lhs == res.rhs);
    return res;
}

// ---- full report ----

struct BoundRecord {
    std::string name;
    std::int64_t lhs = 0, rhs = 0;
    std::string relation = "<=";
    bool applicable = true;
    std::string status; // holds | equality | violated | hypothesis_not_met
    std::string note;
};

inline BoundRecord eval_bound(const std::string& name, std::int64_t lhs, std::int64_t rhs,
                              bool applicable = true, const std::string& note = "") {
    BoundRecord b;
    b.name = name;
    b.lhs = lhs;
    b.rhs = rhs;
    b.applicable = applicable;
    b.note = note;
    if (!applicable)
        b.status = "hypothesis_not_met";
    else if (lhs == rhs)
        b.status = "equality";
    else if (lhs < rhs)
        b.status = "holds";
    else
        b.status = "violated";
    return b;
}

struct ReportOptions {
    std::uint64_t seed = 1;
    int cap = 12;
    int lambda_budget = -1; // default d + 6
    int mu_budget = -1;     // default d + 5
    int confirm = 2;
    bool char0_assert = false;
    // closure-backed bounds (Ratliff-Rush / S2 / integral closure) are only
    // evaluated where they are cheap and defined; 0 = off, 1 = on, -1 = auto
    int closure_bounds = -1;
};

struct InvariantReport {
    int d = 0;
    int ell = 0; // analytic spread, = d for ideals supported only at the origin
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::vector<std::int64_t> e; // e_0..e_d
    std::vector<std::int64_t> f; // f_0..f_{d-1}
    std::vector<std::string> J_gens;
    bool J_user_given = false;
    int r_J = 0;
    std::int64_t sally = 0;
    FiberCmResult fiber_cm;
    std::vector<BoundRecord> bounds;
    bool goto_min_mult = false;
    bool normally_flat = false;
    std::vector<std::string> notes;
    HilbertSamples lambda_samples;
    HilbertSamples mu_samples;
    // closure data, when evaluated
    bool has_rr = false;
    std::int64_t rr_lambda = 0, rr_mu = 0;
    bool has_s2 = false;
    std::int64_t s2_lambda = 0, s2_mu = 0;
    std::vector<std::string> s2_gens;
    bool has_ibar = false;
    std::int64_t ibar_lambda = 0;
};

inline void check_violations(const InvariantReport& rep) {
    for (const auto& b : rep.bounds)
        if (b.status == "violated")
            throw bound_violation(b.name, "lhs = " + std::to_string(b.lhs) +
                                              ", rhs = " + std::to_string(b.rhs));
}

inline InvariantReport bounds_report(const Ideal& I, const ReportOptions& opt = {},
                                     const Ideal* J_user = nullptr) {
    const RingCtx& R = *I.ctx;
    if (!is_only_origin(I))
        throw error("bounds_report: ideal is not supported only at the origin "
                    "(not accepted for local length computations)");
    int d = R.dim;
    if (d < 1) throw error("bounds_report: ring dimension must be >= 1");

    InvariantReport rep;
    rep.d = d;
    rep.ell = d;

    Ideal J;
    int r;
    if (J_user) {
        J = *J_user;
        r = reduction_number(I, J, opt.cap);
        rep.J_user_given = true;
    } else {
        ReductionResult red = minimal_reduction(I, opt.seed, opt.cap);
        J = red.J;
        r = red.r;
    }
    rep.r_J = r;
    for (const auto& g : J.gens) rep.J_gens.push_back(poly_to_string(R, g));

    PowerTower T(I);
    HilbertFit hs = hilbert_samuel_coeffs(T, J, opt.lambda_budget, opt.confirm);
    HilbertFit fib = fiber_multiplicity(T, opt.mu_budget, opt.confirm);
    rep.e = hs.coeffs;
    rep.f = fib.coeffs;
    rep.lambda_samples = hs.samples;
    rep.mu_samples = fib.samples;
    rep.lambda = T.lambda(1);
    rep.mu = T.mu(1);

    std::int64_t e0 = rep.e[0], e1 = rep.e[1], f0 = rep.f[0];
    std::int64_t lam = rep.lambda, mu = rep.mu;
    rep.sally = sally_degree(e0, e1, lam);
    rep.fiber_cm = fiber_cm_test(T, J, r, f0);

    // --- bounds ---
    auto& B = rep.bounds;
    B.push_back(eval_bound("f0_le_min_e0_e1plus1", f0, std::min(e0, e1 + 1)));
    std::int64_t sally_rhs = e1 - e0 + lam + mu - d + 1;
    B.push_back(eval_bound("f0_le_sally_bound", f0, sally_rhs));
    if (B.back().status == "equality")
        rep.notes.push_back("equality in the Sally-module bound: the fiber cone is "
                            "unmixed (paper-asserted implication, not computed)");

    // lower bound e0 <= lambda * f0
    B.push_back(eval_bound("e0_le_lambda_f0", e0, lam * f0));
    if (B.back().status == "equality") {
        rep.normally_flat = true;
        rep.notes.push_back("e0 = lambda(R/I)*f0: normal flatness along I "
                            "(paper-asserted implication, not computed)");
    }

    B.push_back(eval_bound("two_e0_minus_e1_bound", 2 * e0 - e1, lam * (mu - d + 2)));

    // fiber generator count bound (always true; equality iff fiber cone CM)
    B.push_back(eval_bound("f0_le_fiber_gen_count", rep.fiber_cm.lhs, rep.fiber_cm.rhs));
    if (rep.fiber_cm.cm)
        rep.notes.push_back("fiber cone is Cohen-Macaulay (generator-count criterion)");

    bool sally_equality = (f0 == sally_rhs);
    B.push_back(eval_bound("r_le_sally_bound_minus_1", r, sally_rhs - 1,
                           opt.char0_assert && sally_equality,
                           "requires char 0 (user-asserted) and equality in the "
                           "Sally-module bound"));
    B.push_back(eval_bound("r_le_f0_minus_mu_plus_d", r, f0 - mu + d, rep.fiber_cm.cm,
                           "requires a Cohen-Macaulay fiber cone"));
    B.push_back(eval_bound("r_le_e1_minus_e0_plus_lambda_plus_1", r, e1 - e0 + lam + 1,
                           rep.fiber_cm.cm || d <= 2,
                           d <= 2 ? "unconditional in dimension <= 2 (Rossi)"
                                  : "requires a Cohen-Macaulay fiber cone"));
    if (r == 1) {
        BoundRecord rb = eval_bound("r1_forces_f0_eq_mu_minus_d_plus_1", f0, mu - d + 1);
        rb.relation = "==";
        if (rb.status == "holds") rb.status = "violated"; // must be exact
        B.push_back(rb);
    }

    // Goto minimal multiplicity: f0 = e1 + 1 forces mI = mJ
    if (f0 == e1 + 1) {
        Ideal m = maximal_ideal(I.ctx);
        auto lmi = local_length(ideal_product(m, I));
        auto lmj = local_length(ideal_product(m, J)); // mJ <= mI, so lengths decide
        if (!lmi || !lmj || *lmi != *lmj)
            throw bound_violation("goto_minimal_multiplicity",
                                  "f0 = e1 + 1 but mI != mJ locally");
        rep.goto_min_mult = true;
        rep.notes.push_back("minimal multiplicity (Goto): mI = mJ");
    }

    // --- closure-backed bounds ---
    bool closures_on = opt.closure_bounds == 1 ||
                       (opt.closure_bounds == -1 && R.nvars() <= 2 && R.quotient.empty());
    if (closures_on) {
        ClosureResult rr = ratliff_rush(I, std::max(opt.cap, 12), opt.confirm);
        rep.has_rr = true;
        rep.rr_lambda = rr.lambda_closed;
        rep.rr_mu = rr.mu_closed;
        B.push_back(eval_bound("f0_le_rr_sally_bound", f0,
                               e1 - e0 + rr.lambda_closed + rr.mu_closed - d + 1));

        // the colon formula for the S2 column works in dim_k(R/J^r) =
        // e0 * binom(r+1, 2) dimensions; keep the optional column to sizes
        // where that stays cheap (it is always available as an explicit task)
        bool s2_cheap = e0 * (static_cast<std::int64_t>(r) * (r + 1) / 2) <= 800;
        if (R.nvars() == 2 && R.quotient.empty() && s2_cheap) {
            const Ideal* J2 = nullptr;
            if (trim_generators(J).gens.size() <= 2) J2 = &J;
            ClosureResult s2 = s2_ideal(I, J2, opt.seed, opt.cap);
            rep.has_s2 = true;
            rep.s2_lambda = s2.lambda_closed;
            rep.s2_mu = s2.mu_closed;
            for (const auto& g : trim_generators(s2.closed).gens)
                rep.s2_gens.push_back(poly_to_string(R, g));
            B.push_back(eval_bound("f0_le_s2_sally_bound", f0,
                                   e1 - e0 + s2.lambda_closed + s2.mu_closed - d + 1));
        }

        auto M = as_monomial_ideal(I);
        if (M && R.nvars() == 2) {
            MonomialIdeal bar = integral_closure_monomial(*M);
            auto lbar = lattice_length(bar);
            if (lbar) {
                rep.has_ibar = true;
                rep.ibar_lambda = *lbar;
                std::int64_t gap = lam - *lbar; // lambda(Ibar/I)
                B.push_back(eval_bound("r_le_lambda_ibar_gap_plus_1", r, gap + 1));
                B.push_back(eval_bound("f0_le_lambda_ibar_gap_plus_mu_minus_1", f0,
                                       gap + mu - 1));
            }
        }
    }

    check_violations(rep);
    return rep;
}

// Semigroup-backend report with the same bound vocabulary (d = 1).
inline InvariantReport sg_bounds_report(const SemigroupIdeal& I, int cap = 20) {
    SemigroupInvariants inv = sg_invariants(I, cap);
    InvariantReport rep;
    rep.d = 1;
    rep.ell = 1;
    rep.lambda = inv.lambda;
    rep.mu = inv.mu;
    rep.e = {inv.e0, inv.e1};
    rep.f = {inv.f0};
    rep.r_J = inv.r;
    rep.J_gens = {"t^" + std::to_string(I.gens.front())};
    rep.sally = sally_degree(inv.e0, inv.e1, inv.lambda);
    rep.fiber_cm.cm = inv.cm_fiber;
    rep.fiber_cm.lhs = inv.f0;
    rep.fiber_cm.rhs = inv.cm_rhs;
    rep.fiber_cm.summands = inv.cm_summands;

    std::int64_t e0 = inv.e0, e1 = inv.e1, f0 = inv.f0, lam = inv.lambda, mu = inv.mu;
    int d = 1, r = inv.r;
    auto& B = rep.bounds;
    B.push_back(eval_bound("f0_le_min_e0_e1plus1", f0, std::min(e0, e1 + 1)));
    std::int64_t sally_rhs = e1 - e0 + lam + mu - d + 1;
    B.push_back(eval_bound("f0_le_sally_bound", f0, sally_rhs));
    B.push_back(eval_bound("e0_le_lambda_f0", e0, lam * f0));
    if (B.back().status == "equality") rep.normally_flat = true;
    B.push_back(eval_bound("two_e0_minus_e1_bound", 2 * e0 - e1, lam * (mu - d + 2)));
    B.push_back(eval_bound("f0_le_fiber_gen_count", f0, inv.cm_rhs));
    B.push_back(eval_bound("r_le_f0_minus_mu_plus_d", r, f0 - mu + d, inv.cm_fiber,
                           "requires a Cohen-Macaulay fiber cone"));
    B.push_back(eval_bound("r_le_e1_minus_e0_plus_lambda_plus_1", r, e1 - e0 + lam + 1,
                           true, "unconditional in dimension <= 2 (Rossi)"));
    if (r == 1) {
        BoundRecord rb = eval_bound("r1_forces_f0_eq_mu_minus_d_plus_1", f0, mu - d + 1);
        rb.relation = "==";
        if (rb.status == "holds") rb.status = "violated";
        B.push_back(rb);
    }
    if (f0 == e1 + 1) rep.goto_min_mult = true;
    check_violations(rep);
    return rep;
}

} // namespace blowup

#endif
