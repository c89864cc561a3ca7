#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <numeric>

#include "blowup/fp.hpp"

namespace blowup {

// Exponent vectors are fixed-capacity so monomials stay allocation-free.
inline constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::int32_t, kMaxVars> e{};
    std::int32_t n = 0;   // number of ring variables
    std::int32_t deg = 0; // cached total degree

    static Monomial one(int nvars) {
        Monomial m;
        m.n = nvars;
        return m;
    }

    std::int32_t operator[](int i) const { return e[static_cast<size_t>(i)]; }

    bool is_one() const { return deg == 0; }

    bool divides(const Monomial& b) const {
        if (deg > b.deg) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& b) const {
        Monomial r;
        r.n = n;
        r.deg = deg + b.deg;
        for (int i = 0; i < n; ++i) r.e[i] = e[i] + b.e[i];
        return r;
    }

    // exact quotient; caller guarantees b.divides(*this)
    Monomial div(const Monomial& b) const {
        Monomial r;
        r.n = n;
        r.deg = deg - b.deg;
        for (int i = 0; i < n; ++i) r.e[i] = e[i] - b.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.n = a.n;
        for (int i = 0; i < a.n; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& b) const {
        if (n != b.n || deg != b.deg) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] != b.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& b) const { return !(*this == b); }
};

enum class OrderKind { Degrevlex, Lex, Block };

// Block orders eliminate exactly the variables with index < split.
struct MonomialOrder {
    OrderKind kind = OrderKind::Degrevlex;
    int split = 0;

    static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

    // degrevlex on the variable range [lo, hi)
    static int cmp_drl(const Monomial& a, const Monomial& b, int lo, int hi) {
        std::int32_t da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    // -1 if a < b, 0 if equal, 1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::Degrevlex:
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            for (int i = a.n - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        case OrderKind::Lex:
            for (int i = 0; i < a.n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case OrderKind::Block: {
            int c = cmp_drl(a, b, 0, split);
            if (c != 0) return c;
            return cmp_drl(a, b, split, a.n);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || split == o.split);
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < m.n; ++i) {
            h ^= static_cast<std::uint64_t>(m.e[i]) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace blowup

#endif
