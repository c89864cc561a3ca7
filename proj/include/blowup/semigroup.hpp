#ifndef BLOWUP_SEMIGROUP_HPP
#define BLOWUP_SEMIGROUP_HPP

#include <memory>
#include <numeric>
#include <vector>

#include "blowup/fp.hpp"

namespace blowup {

struct reduction_cap_error : error {
    using error::error;
};

// Numerical semigroup <a_1,...,a_k> with gcd 1; membership is tabulated up to
// the conductor, everything beyond is in the semigroup.
struct NumericalSemigroup {
    std::vector<long> gens;        // sorted ascending
    std::vector<char> member;      // membership table [0, table_bound)
    long conductor = 0;

    explicit NumericalSemigroup(std::vector<long> generators) : gens(std::move(generators)) {
        if (gens.empty()) throw error("semigroup: no generators");
        std::sort(gens.begin(), gens.end());
        for (long g : gens)
            if (g <= 0) throw error("semigroup: generators must be positive");
        long g = 0;
        for (long a : gens) g = std::gcd(g, a);
        if (g != 1) throw error("semigroup: gcd of generators must be 1");
        // Schur bound: Frobenius number < (a_1 - 1)(a_k - 1)
        long bound = (gens.front() - 1) * (gens.back() - 1) + 1;
        if (bound < 2) bound = 2;
        member.assign(static_cast<size_t>(bound), 0);
        member[0] = 1;
        for (long x = 1; x < bound; ++x)
            for (long a : gens)
                if (x >= a && member[static_cast<size_t>(x - a)]) { member[static_cast<size_t>(x)] = 1; break; }
        conductor = 0;
        for (long x = bound - 1; x >= 0; --x)
            if (!member[static_cast<size_t>(x)]) { conductor = x + 1; break; }
    }

    bool contains(long x) const {
        if (x < 0) return false;
        if (x >= static_cast<long>(member.size())) return true;
        return member[static_cast<size_t>(x)] != 0;
    }
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// Ideal E = union of b_i + S; the generator list is kept reduced.
struct SemigroupIdeal {
    SemigroupPtr S;
    std::vector<long> gens;

    SemigroupIdeal(SemigroupPtr semigroup, std::vector<long> generators)
        : S(std::move(semigroup)) {
        std::sort(generators.begin(), generators.end());
        for (long b : generators) {
            if (!S->contains(b))
                throw error("semigroup ideal: generator " + std::to_string(b) +
                            " is not in the semigroup");
            bool redundant = false;
            for (long b2 : gens)
                if (b != b2 && S->contains(b - b2)) { redundant = true; break; }
            if (!redundant) gens.push_back(b);
        }
        if (gens.empty()) throw error("semigroup ideal: empty generator list");
    }
};

namespace sg {

// bitmap of E over [0, bound)
inline std::vector<char> ideal_set(const SemigroupIdeal& E, long bound) {
    std::vector<char> out(static_cast<size_t>(bound), 0);
    for (long b : E.gens)
        for (long x = b; x < bound; ++x)
            if (E.S->contains(x - b)) out[static_cast<size_t>(x)] = 1;
    return out;
}

// bitmap of E^m = E_{m-1} + {b_i}
inline std::vector<std::vector<char>> power_sets(const SemigroupIdeal& E, int max_m, long bound) {
    std::vector<std::vector<char>> P;
    P.push_back({}); // E^0 = S itself
    P[0].assign(static_cast<size_t>(bound), 0);
    for (long x = 0; x < bound; ++x)
        if (E.S->contains(x)) P[0][static_cast<size_t>(x)] = 1;
    for (int m = 1; m <= max_m; ++m) {
        std::vector<char> cur(static_cast<size_t>(bound), 0);
        for (long b : E.gens)
            for (long x = b; x < bound; ++x)
                if (P[static_cast<size_t>(m - 1)][static_cast<size_t>(x - b)])
                    cur[static_cast<size_t>(x)] = 1;
        P.push_back(std::move(cur));
    }
    return P;
}

inline long count_gaps(const std::vector<char>& amb, const std::vector<char>& sub, long bound) {
    long c = 0;
    for (long x = 0; x < bound; ++x)
        if (amb[static_cast<size_t>(x)] && !sub[static_cast<size_t>(x)]) ++c;
    return c;
}

// minimal S-ideal generators of the set E (given as bitmap): elements e with
// e - s outside E for every nonzero s in S
inline long min_gens_of_set(const NumericalSemigroup& S, const std::vector<char>& E, long bound) {
    long c = 0;
    for (long e = 0; e < bound; ++e) {
        if (!E[static_cast<size_t>(e)]) continue;
        bool minimal = true;
        for (long s = 1; s <= e && minimal; ++s)
            if (S.contains(s) && E[static_cast<size_t>(e - s)]) minimal = false;
        if (minimal) ++c;
    }
    return c;
}

} // namespace sg

// lambda(R/E^m) = #(S \ E^m), by enumeration up to the stable range
inline long sg_length(const SemigroupIdeal& E, int m = 1) {
    long bound = E.S->conductor + (m + 1) * E.gens.back() + 1;
    auto P = sg::power_sets(E, m, bound);
    return sg::count_gaps(P[0], P[static_cast<size_t>(m)], bound);
}

struct SemigroupInvariants {
    long e0 = 0, e1 = 0, f0 = 0;
    int r = 0;
    long lambda = 0; // lambda(R/I)
    long mu = 0;     // mu(I)
    bool cm_fiber = false;
    long cm_rhs = 0; // 1 + sum mu(I^j / J I^{j-1})
    std::vector<long> cm_summands;
    int lambda_n0 = 0; // stabilization index of the Hilbert-Samuel fit
};

// Full invariant record for the 1-dimensional backend.  The reduction used is
// J = (t^{b_min}); inputs where that principal ideal is not a reduction raise
// reduction_cap_error.
inline SemigroupInvariants sg_invariants(const SemigroupIdeal& I, int cap = 20) {
    const NumericalSemigroup& S = *I.S;
    long bmin = I.gens.front();
    int max_m = cap + 6;
    long bound = S.conductor + (max_m + 2) * I.gens.back() + 1;
    auto P = sg::power_sets(I, max_m, bound);

    SemigroupInvariants out;
    out.e0 = bmin;
    out.lambda = sg::count_gaps(P[0], P[1], bound);
    out.mu = sg::min_gens_of_set(S, P[1], bound);

    // reduction number of I with respect to (t^{b_min}):
    // least r with E_{r+1} = b_min + E_r
    int r = -1;
    long cmp_bound = bound - bmin;
    for (int m = 0; m <= cap; ++m) {
        bool eq = true;
        for (long x = 0; x < cmp_bound && eq; ++x) {
            bool lhs = P[static_cast<size_t>(m + 1)][static_cast<size_t>(x)];
            bool rhs = x >= bmin && P[static_cast<size_t>(m)][static_cast<size_t>(x - bmin)];
            if (lhs != rhs) eq = false;
        }
        if (eq) { r = m; break; }
    }
    if (r < 0)
        throw reduction_cap_error(
            "sg_invariants: (t^b_min) is not a reduction within the cap; "
            "use the polynomial backend via a toric presentation");
    out.r = r;

    // lambda(R/I^m) = e0*m - e1 for m >= n0; fit on 3 consecutive points,
    // confirm on 2 more
    std::vector<long> lam;
    lam.push_back(0);
    for (int m = 1; m <= std::max(r + 5, 7); ++m)
        lam.push_back(sg::count_gaps(P[0], P[static_cast<size_t>(m)], bound));
    bool fitted = false;
    for (int n0 = 1; n0 + 4 < static_cast<int>(lam.size()); ++n0) {
        long e1 = out.e0 * n0 - lam[static_cast<size_t>(n0)];
        bool ok = true;
        for (int m = n0; m <= n0 + 4; ++m)
            if (lam[static_cast<size_t>(m)] != out.e0 * m - e1) { ok = false; break; }
        if (ok) {
            out.e1 = e1;
            out.lambda_n0 = n0;
            fitted = true;
            break;
        }
    }
    if (!fitted) throw error("sg_invariants: Hilbert-Samuel function did not stabilize");

    // f0 = eventual constant value of mu(I^m): 3 equal consecutive values
    std::vector<long> mus;
    mus.push_back(0);
    for (int m = 1; m <= std::max(r + 4, 6); ++m)
        mus.push_back(sg::min_gens_of_set(S, P[static_cast<size_t>(m)], bound));
    bool stable = false;
    for (size_t m = 1; m + 2 < mus.size(); ++m) {
        if (mus[m] == mus[m + 1] && mus[m] == mus[m + 2]) {
            out.f0 = mus[m];
            stable = true;
            break;
        }
    }
    if (!stable) throw error("sg_invariants: fiber Hilbert function did not stabilize");

    // Cohen-Macaulayness of the fiber cone: f0 = 1 + sum_j mu(I^j / J I^{j-1})
    out.cm_rhs = 1;
    for (int j = 1; j <= r; ++j) {
        // count e in E_j minimal modulo (b_min + E_{j-1}) and S_+ * E_j
        long cnt = 0;
        for (long e = 0; e < cmp_bound; ++e) {
            if (!P[static_cast<size_t>(j)][static_cast<size_t>(e)]) continue;
            if (e >= bmin && P[static_cast<size_t>(j - 1)][static_cast<size_t>(e - bmin)]) continue;
            bool minimal = true;
            for (long s = 1; s <= e && minimal; ++s)
                if (S.contains(s) && P[static_cast<size_t>(j)][static_cast<size_t>(e - s)])
                    minimal = false;
            if (minimal) ++cnt;
        }
        out.cm_summands.push_back(cnt);
        out.cm_rhs += cnt;
    }
    if (out.f0 > out.cm_rhs)
        throw error("sg_invariants: fiber multiplicity exceeds the generator bound");
    out.cm_fiber = (out.f0 == out.cm_rhs);
    return out;
}

} // namespace blowup

#endif
