#ifndef BLOWUP_MONOMIAL_IDEAL_HPP
#define BLOWUP_MONOMIAL_IDEAL_HPP

#include <boost/rational.hpp>

#include "blowup/ideal.hpp"

namespace blowup {

// Monomial ideal with minimal (antichain) generating exponent vectors.
struct MonomialIdeal {
    RingPtr ctx;
    std::vector<Monomial> gens;
};

namespace detail {

inline std::vector<Monomial> antichain(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < gens.size() && minimal; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && (gens[i] != gens[j] || j < i))
                minimal = false;
        }
        if (minimal) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    });
    return out;
}

} // namespace detail

inline MonomialIdeal make_monomial_ideal(const RingPtr& ctx, std::vector<Monomial> gens) {
    if (!ctx->quotient.empty())
        throw error("monomial ideals are only supported in polynomial rings");
    return {ctx, detail::antichain(std::move(gens))};
}

inline std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& A) {
    if (!A.ctx->quotient.empty()) return std::nullopt;
    std::vector<Monomial> gens;
    for (const auto& g : A.gens) {
        if (g.terms.size() != 1) return std::nullopt;
        gens.push_back(g.lm());
    }
    return make_monomial_ideal(A.ctx, std::move(gens));
}

inline Ideal to_ideal(const MonomialIdeal& A) {
    std::vector<Polynomial> gens;
    for (const auto& m : A.gens) gens.push_back(Polynomial::term(m, 1));
    return Ideal(A.ctx, std::move(gens));
}

// Independent length oracle: counts lattice points outside every translated
// orthant g + N^n by a direct scan of the bounding box (the componentwise max
// of the generators).  Shares no code with the staircase path in the
// Groebner engine.
inline std::optional<std::int64_t> lattice_length(const MonomialIdeal& A) {
    int n = A.ctx->nvars();
    if (A.gens.empty()) return std::nullopt;
    for (const auto& g : A.gens)
        if (g.deg == 0) return 0;
    for (int i = 0; i < n; ++i) {
        bool pure = false;
        for (const auto& g : A.gens) {
            bool only_i = g.e[i] > 0;
            for (int j = 0; j < n && only_i; ++j)
                if (j != i && g.e[j] > 0) only_i = false;
            if (only_i) { pure = true; break; }
        }
        if (!pure) return std::nullopt;
    }
    std::vector<std::int32_t> box(n, 0);
    for (const auto& g : A.gens)
        for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g.e[i]);
    std::vector<std::int32_t> pt(n, 0);
    std::int64_t count = 0;
    for (;;) {
        bool inside = false;
        for (const auto& g : A.gens) {
            bool ge = true;
            for (int i = 0; i < n; ++i)
                if (pt[i] < g.e[i]) { ge = false; break; }
            if (ge) { inside = true; break; }
        }
        if (!inside) ++count;
        int i = 0;
        for (; i < n; ++i) {
            if (++pt[i] < box[i]) break;
            pt[i] = 0;
        }
        if (i == n) break;
    }
    return count;
}

// combinatorial colon (A : B) = intersection over b of (A : b)
inline MonomialIdeal monomial_colon(const MonomialIdeal& A, const MonomialIdeal& B) {
    int n = A.ctx->nvars();
    auto colon_single = [&](const std::vector<Monomial>& gens, const Monomial& b) {
        std::vector<Monomial> out;
        for (const auto& g : gens) {
            Monomial q;
            q.n = n;
            for (int i = 0; i < n; ++i) {
                q.e[i] = std::max(g.e[i] - b.e[i], 0);
                q.deg += q.e[i];
            }
            out.push_back(q);
        }
        return detail::antichain(std::move(out));
    };
    auto intersect = [&](const std::vector<Monomial>& X, const std::vector<Monomial>& Y) {
        std::vector<Monomial> out;
        for (const auto& x : X)
            for (const auto& y : Y) out.push_back(Monomial::lcm(x, y));
        return detail::antichain(std::move(out));
    };
    std::vector<Monomial> result;
    bool first = true;
    for (const auto& b : B.gens) {
        auto part = colon_single(A.gens, b);
        result = first ? part : intersect(result, part);
        first = false;
    }
    if (first) return make_monomial_ideal(A.ctx, {Monomial::one(n)});
    return {A.ctx, std::move(result)};
}

namespace detail {

using Rat = boost::rational<long long>;

// Exact phase-I simplex (Bland's rule): feasibility of
//   sum t_i = 1,  sum t_i g_i <= u,  t >= 0.
inline bool newton_member(const std::vector<Monomial>& gens, const Monomial& u) {
    int k = static_cast<int>(gens.size());
    int n = u.n;
    // columns: t_1..t_k, slacks s_1..s_n, artificial a; rows: n inequalities + 1 equality
    int rows = n + 1, cols = k + n + 1;
    std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < k; ++i) T[j][i] = Rat(gens[i].e[j]);
        T[j][k + j] = Rat(1);
        T[j][cols] = Rat(u.e[j]);
    }
    for (int i = 0; i < k; ++i) T[rows - 1][i] = Rat(1);
    T[rows - 1][k + n] = Rat(1);
    T[rows - 1][cols] = Rat(1);

    std::vector<int> basis(rows);
    for (int j = 0; j < n; ++j) basis[j] = k + j;
    basis[rows - 1] = k + n;

    // objective: minimize the artificial variable
    std::vector<Rat> z(cols + 1, Rat(0));
    for (int c = 0; c <= cols; ++c) z[c] = T[rows - 1][c]; // price out artificial
    z[k + n] = Rat(0);

    for (;;) {
        int enter = -1;
        for (int c = 0; c < cols; ++c)
            if (c != k + n && z[c] > Rat(0)) { enter = c; break; } // Bland
        if (enter < 0) break;
        int leave = -1;
        Rat best(0);
        for (int r = 0; r < rows; ++r) {
            if (T[r][enter] <= Rat(0)) continue;
            Rat ratio = T[r][cols] / T[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break; // unbounded (cannot happen here)
        Rat piv = T[leave][enter];
        for (int c = 0; c <= cols; ++c) T[leave][c] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave || T[r][enter] == Rat(0)) continue;
            Rat f = T[r][enter];
            for (int c = 0; c <= cols; ++c) T[r][c] -= f * T[leave][c];
        }
        Rat fz = z[enter];
        if (fz != Rat(0))
            for (int c = 0; c <= cols; ++c) z[c] -= fz * T[leave][c];
        basis[leave] = enter;
    }
    return z[cols] == Rat(0);
}

} // namespace detail

// Integral closure via the Newton polyhedron: the monomials whose exponent
// vectors lie in conv(gens) + R^n_{>=0}, minimized to an antichain.
inline MonomialIdeal integral_closure_monomial(const MonomialIdeal& A) {
    int n = A.ctx->nvars();
    if (A.gens.empty()) return A;
    std::vector<std::int32_t> box(n, 0);
    for (const auto& g : A.gens)
        for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g.e[i]);
    std::vector<Monomial> closure;
    std::vector<std::int32_t> pt(n, 0);
    for (;;) {
        Monomial u;
        u.n = n;
        for (int i = 0; i < n; ++i) { u.e[i] = pt[i]; u.deg += pt[i]; }
        bool member = false;
        for (const auto& g : A.gens)
            if (g.divides(u)) { member = true; break; }
        if (!member) member = detail::newton_member(A.gens, u);
        if (member) closure.push_back(u);
        int i = 0;
        for (; i < n; ++i) {
            if (++pt[i] <= box[i]) break;
            pt[i] = 0;
        }
        if (i == n) break;
    }
    return {A.ctx, detail::antichain(std::move(closure))};
}

} // namespace blowup

#endif
