#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "blowup/fp.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

// Terms sorted strictly descending in the active order, no zero coefficients.
struct Polynomial {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().first; }
    std::uint32_t lc() const { return terms.front().second; }
    std::int32_t degree() const { return terms.empty() ? -1 : terms.front().first.deg; }

    static Polynomial zero() { return {}; }
    static Polynomial term(const Monomial& m, std::uint32_t c) {
        Polynomial f;
        if (c != 0) f.terms.emplace_back(m, c);
        return f;
    }
    static Polynomial constant(int nvars, std::uint32_t c) {
        return term(Monomial::one(nvars), c);
    }

    bool operator==(const Polynomial& g) const { return terms == g.terms; }
};

// A polynomial ring over F_p with a monomial order, optionally modulo a
// reduced Groebner basis Q (so the context models R = k[x]/Q).  The quotient
// basis and Krull dimension are filled in by make_ring.
struct RingCtx {
    std::vector<std::string> vars;
    PrimeField field;
    MonomialOrder order;
    std::vector<Polynomial> quotient; // reduced GB of the defining ideal
    int dim = 0;                      // Krull dimension of R

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    Monomial var_monomial(int i) const {
        Monomial m = Monomial::one(nvars());
        m.e[i] = 1;
        m.deg = 1;
        return m;
    }

    bool operator==(const RingCtx& o) const {
        return vars == o.vars && field == o.field && order == o.order &&
               quotient == o.quotient;
    }
};

using RingPtr = std::shared_ptr<const RingCtx>;

inline void require_same_ctx(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get() && !(*a == *b))
        throw error("operands live in different ring contexts");
}

// ---- polynomial arithmetic ----

inline Polynomial poly_add(const RingCtx& R, const Polynomial& f, const Polynomial& g) {
    Polynomial r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = R.order.cmp(f.terms[i].first, g.terms[j].first);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            std::uint32_t s = R.field.add(f.terms[i].second, g.terms[j].second);
            if (s != 0) r.terms.emplace_back(f.terms[i].first, s);
            ++i; ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

inline Polynomial poly_scale(const RingCtx& R, std::uint32_t c, const Polynomial& f) {
    if (c == 0) return Polynomial::zero();
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const auto& [m, a] : f.terms) r.terms.emplace_back(m, R.field.mul(c, a));
    return r;
}

inline Polynomial poly_neg(const RingCtx& R, const Polynomial& f) {
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const auto& [m, a] : f.terms) r.terms.emplace_back(m, R.field.neg(a));
    return r;
}

inline Polynomial poly_sub(const RingCtx& R, const Polynomial& f, const Polynomial& g) {
    return poly_add(R, f, poly_neg(R, g));
}

// f * (c * m)
inline Polynomial poly_mul_term(const RingCtx& R, const Polynomial& f,
                                const Monomial& m, std::uint32_t c) {
    if (c == 0) return Polynomial::zero();
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const auto& [mm, a] : f.terms)
        r.terms.emplace_back(mm * m, R.field.mul(c, a));
    return r;
}

inline Polynomial poly_mul(const RingCtx& R, const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial::zero();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(f.terms.size() * g.terms.size());
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) {
            Monomial m = mf * mg;
            std::uint32_t& slot = acc[m];
            slot = R.field.add(slot, R.field.mul(cf, cg));
        }
    Polynomial r;
    r.terms.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c != 0) r.terms.emplace_back(m, c);
    std::sort(r.terms.begin(), r.terms.end(),
              [&R](const auto& a, const auto& b) { return R.order.cmp(a.first, b.first) > 0; });
    return r;
}

inline Polynomial poly_monic(const RingCtx& R, const Polynomial& f) {
    if (f.is_zero() || f.lc() == 1) return f;
    return poly_scale(R, R.field.inv(f.lc()), f);
}

// re-sort a polynomial's terms under a different order (used when moving
// between elimination contexts)
inline Polynomial poly_resort(const RingCtx& R, Polynomial f) {
    std::sort(f.terms.begin(), f.terms.end(),
              [&R](const auto& a, const auto& b) { return R.order.cmp(a.first, b.first) > 0; });
    return f;
}

// ---- printing ----

inline std::string monomial_to_string(const RingCtx& R, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.n; ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << R.vars[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

inline std::string poly_to_string(const RingCtx& R, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    std::uint32_t half = R.field.p / 2;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        // print c > p/2 as a negative representative for readability
        std::uint32_t a = c;
        bool neg = a > half;
        if (neg) a = R.field.p - a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1 || m.is_one()) {
            os << a;
            if (!m.is_one()) os << "*";
        }
        if (!m.is_one()) os << monomial_to_string(R, m);
        first = false;
    }
    return os.str();
}

} // namespace blowup

#endif
