#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "blowup/parser.hpp"
#include "blowup/ring.hpp"

namespace blowup {

namespace detail {

struct OrderGreater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order.cmp(a, b) > 0;
    }
};

using WorkMap = std::map<Monomial, std::uint32_t, OrderGreater>;

// Full normal form of f against an arbitrary polynomial list (the list need
// not be a Groebner basis; the result is still a valid remainder).
inline Polynomial reduce_full(const RingCtx& R, const Polynomial& f,
                              const std::vector<Polynomial>& basis) {
    if (f.is_zero() || basis.empty()) return f;
    WorkMap work{OrderGreater{R.order}};
    for (const auto& t : f.terms) work.insert(work.end(), t);
    Polynomial rem;
    while (!work.empty()) {
        auto it = work.begin();
        if (it->second == 0) { work.erase(it); continue; }
        const Monomial& m = it->first;
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.lm().divides(m)) { divisor = &g; break; }
        }
        if (divisor == nullptr) {
            rem.terms.emplace_back(m, it->second);
            work.erase(it);
            continue;
        }
        Monomial q = m.div(divisor->lm());
        std::uint32_t c = R.field.div(it->second, divisor->lc());
        work.erase(it);
        for (size_t k = 1; k < divisor->terms.size(); ++k) {
            Monomial mm = divisor->terms[k].first * q;
            std::uint32_t cc = R.field.mul(c, divisor->terms[k].second);
            auto [slot, inserted] = work.emplace(mm, 0);
            slot->second = R.field.sub(slot->second, cc);
            if (slot->second == 0) work.erase(slot);
        }
    }
    return rem;
}

struct SPair {
    int i, j;
    Monomial lcm;
    std::int32_t sugar;
};

// Buchberger with the coprime and chain criteria and sugar-degree selection.
// Input generators are inserted in ascending order and dropped when they
// reduce to zero against the partial basis; survivor indices are reported
// through kept_inputs when requested.
inline std::vector<Polynomial> buchberger(const RingCtx& R,
                                          std::vector<Polynomial> input,
                                          std::vector<size_t>* kept_inputs = nullptr) {
    std::vector<Polynomial> G;
    std::vector<std::int32_t> sugar;

    auto pair_less = [&R](const SPair& a, const SPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = R.order.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<SPair> pairs; // heap, max on top w.r.t. reversed pair_less
    auto heap_cmp = [&pair_less](const SPair& a, const SPair& b) { return pair_less(b, a); };

    auto add_element = [&](Polynomial h, std::int32_t sug) {
        int t = static_cast<int>(G.size());
        for (int i = 0; i < t; ++i) {
            SPair p;
            p.i = i;
            p.j = t;
            p.lcm = Monomial::lcm(G[i].lm(), h.lm());
            p.sugar = std::max(sugar[i] + (p.lcm.deg - G[i].lm().deg),
                               sug + (p.lcm.deg - h.lm().deg));
            pairs.push_back(p);
            std::push_heap(pairs.begin(), pairs.end(), heap_cmp);
        }
        G.push_back(std::move(h));
        sugar.push_back(sug);
    };

    // deterministic insertion: ascending leading monomial, then term count
    std::vector<size_t> idx(input.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (input[a].is_zero()) return false;
        if (input[b].is_zero()) return true;
        int c = R.order.cmp(input[a].lm(), input[b].lm());
        if (c != 0) return c < 0;
        return input[a].terms.size() < input[b].terms.size();
    });

    for (size_t k : idx) {
        if (input[k].is_zero()) continue;
        Polynomial h = reduce_full(R, input[k], G);
        if (h.is_zero()) continue;
        if (kept_inputs) kept_inputs->push_back(k);
        std::int32_t sug = h.degree();
        add_element(poly_monic(R, h), sug);
        if (h.lm().is_one()) break; // unit ideal
    }

    while (!pairs.empty()) {
        std::pop_heap(pairs.begin(), pairs.end(), heap_cmp);
        SPair p = pairs.back();
        pairs.pop_back();
        const Monomial& li = G[p.i].lm();
        const Monomial& lj = G[p.j].lm();
        if (Monomial::coprime(li, lj)) continue;
        // Gebauer-Moeller chain criterion: a later element k reducing the
        // pair's lcm strictly supersedes it via the pairs (i,k) and (k,j)
        bool skip = false;
        for (size_t k = static_cast<size_t>(p.j) + 1; k < G.size(); ++k) {
            if (G[k].lm().divides(p.lcm) &&
                Monomial::lcm(G[k].lm(), li) != p.lcm &&
                Monomial::lcm(G[k].lm(), lj) != p.lcm) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        Polynomial s = poly_sub(
            R, poly_mul_term(R, G[p.i], p.lcm.div(li), R.field.inv(G[p.i].lc())),
            poly_mul_term(R, G[p.j], p.lcm.div(lj), R.field.inv(G[p.j].lc())));
        Polynomial h = reduce_full(R, s, G);
        if (h.is_zero()) continue;
        add_element(poly_monic(R, h), std::max(p.sugar, h.degree()));
        if (h.lm().is_one()) {
            return {Polynomial::constant(R.nvars(), 1)};
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (G[j].lm().divides(G[i].lm()) &&
                (G[i].lm() != G[j].lm() || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(G[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial h = reduce_full(R, minimal[i], others);
        if (!h.is_zero()) reduced.push_back(poly_monic(R, h));
    }
    std::sort(reduced.begin(), reduced.end(), [&R](const Polynomial& a, const Polynomial& b) {
        return R.order.cmp(a.lm(), b.lm()) < 0;
    });
    return reduced;
}

// drop input generators that reduce to zero against the previously kept ones
inline std::vector<Polynomial> interreduce_gens(const RingCtx& R,
                                                std::vector<Polynomial> gens) {
    std::vector<size_t> idx(gens.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (gens[a].is_zero()) return false;
        if (gens[b].is_zero()) return true;
        return R.order.cmp(gens[a].lm(), gens[b].lm()) < 0;
    });
    std::vector<Polynomial> kept;
    for (size_t k : idx) {
        if (gens[k].is_zero()) continue;
        Polynomial h = reduce_full(R, gens[k], kept);
        if (!h.is_zero()) kept.push_back(poly_monic(R, h));
    }
    return kept;
}

} // namespace detail

// A reduced Groebner basis; when the context has a quotient basis Q, the
// elements include the reduction data of Q, so normal forms are computed in
// R = k[x]/Q.
struct GroebnerBasis {
    RingPtr ctx;
    MonomialOrder order;
    std::vector<Polynomial> elems;

    bool is_unit() const {
        return elems.size() == 1 && !elems[0].is_zero() && elems[0].lm().is_one();
    }

    // minimal generators of the initial ideal
    std::vector<Monomial> staircase() const {
        std::vector<Monomial> lead;
        for (const auto& g : elems)
            if (!g.is_zero()) lead.push_back(g.lm());
        return lead;
    }

    bool operator==(const GroebnerBasis& o) const { return elems == o.elems; }
};

inline GroebnerBasis groebner_of_polys(const RingPtr& ctx, std::vector<Polynomial> gens) {
    for (const auto& q : ctx->quotient) gens.push_back(q);
    GroebnerBasis G;
    G.ctx = ctx;
    G.order = ctx->order;
    G.elems = detail::buchberger(*ctx, std::move(gens));
    return G;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    return detail::reduce_full(*G.ctx, f, G.elems);
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

// combinatorial (Krull) dimension of the initial ideal generated by `lead`:
// the largest variable subset S such that no generator is supported inside S
inline int combinatorial_dimension(int nvars, const std::vector<Monomial>& lead) {
    for (const auto& m : lead)
        if (m.is_one()) return -1; // unit ideal
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& m : lead) {
            bool inside = true;
            for (int i = 0; i < nvars; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) { inside = false; break; }
            if (inside) { ok = false; break; }
        }
        if (ok) best = size;
    }
    return best;
}

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p,
                         MonomialOrder order,
                         const std::vector<std::string>& quotient_gens = {}) {
    if (vars.empty() || vars.size() > kMaxVars)
        throw error("make_ring: variable count must be between 1 and " +
                    std::to_string(kMaxVars));
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw error("make_ring: duplicate variable name");
    auto ctx = std::make_shared<RingCtx>();
    ctx->vars = std::move(vars);
    ctx->field = PrimeField(p);
    ctx->order = order;
    ctx->dim = ctx->nvars();
    if (!quotient_gens.empty()) {
        std::vector<Polynomial> q;
        for (const auto& s : quotient_gens) q.push_back(parse_poly(*ctx, s));
        q = detail::buchberger(*ctx, std::move(q));
        if (q.size() == 1 && !q[0].is_zero() && q[0].lm().is_one())
            throw error("make_ring: quotient ideal is the unit ideal");
        std::vector<Monomial> lead;
        for (const auto& g : q) lead.push_back(g.lm());
        ctx->quotient = std::move(q);
        ctx->dim = combinatorial_dimension(ctx->nvars(), lead);
    }
    return ctx;
}

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
    return make_ring(std::move(vars), p, MonomialOrder::degrevlex());
}

} // namespace blowup

#endif
