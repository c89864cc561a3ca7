#ifndef BLOWUP_IDEAL_HPP
#define BLOWUP_IDEAL_HPP

#include <optional>

#include "blowup/groebner.hpp"

namespace blowup {

// Finite generator list interpreted in a ring context.  The reduced Groebner
// basis is computed lazily and cached; generator order never affects results.
struct Ideal {
    RingPtr ctx;
    std::vector<Polynomial> gens;
    mutable std::shared_ptr<const GroebnerBasis> cache;

    Ideal() = default;
    Ideal(RingPtr c, std::vector<Polynomial> g) : ctx(std::move(c)) {
        for (auto& p : g)
            if (!p.is_zero()) gens.push_back(std::move(p));
    }
};

inline Ideal make_ideal(const RingPtr& ctx, const std::vector<std::string>& gen_strs) {
    std::vector<Polynomial> gens;
    gens.reserve(gen_strs.size());
    for (const auto& s : gen_strs) gens.push_back(parse_poly(*ctx, s));
    return Ideal(ctx, std::move(gens));
}

inline const GroebnerBasis& gb(const Ideal& I) {
    if (!I.cache) {
        auto G = std::make_shared<GroebnerBasis>(groebner_of_polys(I.ctx, I.gens));
        I.cache = G;
    }
    return *I.cache;
}

inline bool ideal_contains(const Ideal& A, const Polynomial& f) {
    return in_ideal(f, gb(A));
}

inline bool ideal_contains(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    for (const auto& g : B.gens)
        if (!ideal_contains(A, g)) return false;
    return true;
}

inline bool ideal_equal(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    return gb(A) == gb(B);
}

inline Ideal unit_ideal(const RingPtr& ctx) {
    return Ideal(ctx, {Polynomial::constant(ctx->nvars(), 1)});
}

inline Ideal maximal_ideal(const RingPtr& ctx) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ctx->nvars(); ++i)
        gens.push_back(Polynomial::term(ctx->var_monomial(i), 1));
    return Ideal(ctx, std::move(gens));
}

inline Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    std::vector<Polynomial> gens = A.gens;
    gens.insert(gens.end(), B.gens.begin(), B.gens.end());
    return Ideal(A.ctx, std::move(gens));
}

// Pairwise generator products, interreduced against the accumulating basis;
// the Groebner basis computed during interreduction is kept in the cache.
inline Ideal ideal_product(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    const RingCtx& R = *A.ctx;
    std::vector<Polynomial> candidates;
    candidates.reserve(A.gens.size() * B.gens.size());
    for (const auto& a : A.gens)
        for (const auto& b : B.gens) candidates.push_back(poly_mul(R, a, b));
    size_t ncand = candidates.size();
    std::vector<Polynomial> input = candidates;
    for (const auto& q : R.quotient) input.push_back(q);
    std::vector<size_t> kept;
    auto G = std::make_shared<GroebnerBasis>();
    G->ctx = A.ctx;
    G->order = R.order;
    G->elems = detail::buchberger(R, std::move(input), &kept);
    std::vector<Polynomial> gens;
    for (size_t k : kept)
        if (k < ncand) gens.push_back(candidates[k]);
    Ideal P(A.ctx, std::move(gens));
    P.cache = G;
    return P;
}

inline Ideal ideal_power(const Ideal& A, int k) {
    if (k < 0) throw error("ideal_power: negative exponent");
    if (k == 0) return unit_ideal(A.ctx);
    Ideal P = A;
    for (int i = 1; i < k; ++i) P = ideal_product(P, A);
    return P;
}

enum class CombineKind { Sum, Product, Power };

inline Ideal ideal_combine(CombineKind kind, const Ideal& A, const Ideal& B) {
    return kind == CombineKind::Sum ? ideal_sum(A, B) : ideal_product(A, B);
}

// ---- elimination ----

namespace detail {

inline Monomial permute_monomial(const Monomial& m, const std::vector<int>& perm) {
    Monomial r;
    r.n = m.n;
    r.deg = m.deg;
    for (int i = 0; i < m.n; ++i) r.e[perm[i]] = m.e[i];
    return r;
}

inline Polynomial permute_poly(const RingCtx& target, const Polynomial& f,
                               const std::vector<int>& perm) {
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const auto& [m, c] : f.terms) r.terms.emplace_back(permute_monomial(m, perm), c);
    return poly_resort(target, r);
}

} // namespace detail

// generators of A intersected with k[keep], via a block order eliminating the
// complement of `keep`
inline Ideal ideal_eliminate(const Ideal& A, const std::vector<int>& keep) {
    const RingCtx& R = *A.ctx;
    int n = R.nvars();
    std::vector<bool> kept(n, false);
    for (int i : keep) kept[i] = true;
    // permutation sending eliminated variables to the front
    std::vector<int> perm(n);
    int pos = 0;
    for (int i = 0; i < n; ++i)
        if (!kept[i]) perm[i] = pos++;
    int nelim = pos;
    for (int i = 0; i < n; ++i)
        if (kept[i]) perm[i] = pos++;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    auto tmp = std::make_shared<RingCtx>();
    tmp->vars.resize(n);
    for (int i = 0; i < n; ++i) tmp->vars[perm[i]] = R.vars[i];
    tmp->field = R.field;
    tmp->order = MonomialOrder::block(nelim);

    std::vector<Polynomial> input;
    for (const auto& g : A.gens) input.push_back(detail::permute_poly(*tmp, g, perm));
    for (const auto& q : R.quotient) input.push_back(detail::permute_poly(*tmp, q, perm));
    std::vector<Polynomial> G = detail::buchberger(*tmp, std::move(input));

    std::vector<Polynomial> out;
    for (const auto& g : G) {
        bool pure = true;
        for (const auto& [m, c] : g.terms)
            for (int i = 0; i < nelim && pure; ++i)
                if (m.e[i] > 0) pure = false;
        if (pure) out.push_back(detail::permute_poly(R, g, inv));
    }
    return Ideal(A.ctx, std::move(out));
}

// ---- colon ----

namespace detail {

// exact quotient f / b in the polynomial ring (requires f in (b))
inline Polynomial poly_exact_div(const RingCtx& R, Polynomial f, const Polynomial& b) {
    Polynomial q;
    while (!f.is_zero()) {
        if (!b.lm().divides(f.lm()))
            throw error("poly_exact_div: not divisible");
        Monomial m = f.lm().div(b.lm());
        std::uint32_t c = R.field.div(f.lc(), b.lc());
        q.terms.emplace_back(m, c);
        f = poly_sub(R, f, poly_mul_term(R, b, m, c));
    }
    return poly_resort(R, q);
}

// A and B as plain generator lists over the polynomial ring underlying ctx
// (quotient generators must already be appended by the caller where needed);
// intersection via a tag variable: (t*A + (1-t)*B) \cap k[x].
inline std::vector<Polynomial> intersect_polys(const RingPtr& ctx,
                                               const std::vector<Polynomial>& A,
                                               const std::vector<Polynomial>& B) {
    const RingCtx& R = *ctx;
    int n = R.nvars();
    if (n + 1 > kMaxVars) throw error("intersection: too many variables for tag trick");
    auto ext = std::make_shared<RingCtx>();
    ext->vars.push_back("@t");
    for (const auto& v : R.vars) ext->vars.push_back(v);
    ext->field = R.field;
    ext->order = MonomialOrder::block(1);

    auto lift = [&](const Polynomial& f, bool with_t) {
        Polynomial r;
        for (const auto& [m, c] : f.terms) {
            Monomial mm;
            mm.n = n + 1;
            mm.e[0] = with_t ? 1 : 0;
            for (int i = 0; i < n; ++i) mm.e[i + 1] = m.e[i];
            mm.deg = m.deg + mm.e[0];
            r.terms.emplace_back(mm, c);
        }
        return poly_resort(*ext, r);
    };

    std::vector<Polynomial> input;
    for (const auto& a : A) input.push_back(lift(a, true)); // t*a
    for (const auto& b : B)                                  // (1-t)*b
        input.push_back(poly_sub(*ext, lift(b, false), lift(b, true)));
    std::vector<Polynomial> G = buchberger(*ext, std::move(input));

    std::vector<Polynomial> out;
    for (const auto& g : G) {
        bool pure = true;
        for (const auto& [m, c] : g.terms)
            if (m.e[0] > 0) { pure = false; break; }
        if (!pure) continue;
        Polynomial f;
        for (const auto& [m, c] : g.terms) {
            Monomial mm;
            mm.n = n;
            for (int i = 0; i < n; ++i) mm.e[i] = m.e[i + 1];
            mm.deg = m.deg;
            f.terms.emplace_back(mm, c);
        }
        out.push_back(poly_resort(R, f));
    }
    return out;
}

} // namespace detail

// drop generators contained in the ideal spanned by the remaining ones
inline Ideal trim_generators(const Ideal& A) {
    std::vector<Polynomial> gens = A.gens;
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return A.ctx->order.cmp(a.lm(), b.lm()) < 0;
    });
    for (size_t i = gens.size(); i-- > 0;) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (in_ideal(gens[i], groebner_of_polys(A.ctx, others)))
            gens.erase(gens.begin() + static_cast<long>(i));
    }
    return Ideal(A.ctx, std::move(gens));
}

// (A : B) = {f : f*B <= A}, via per-generator intersection with a tag variable
inline Ideal ideal_colon(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    const RingCtx& R = *A.ctx;
    std::vector<Polynomial> lifted = A.gens;
    for (const auto& q : R.quotient) lifted.push_back(q);

    std::vector<Polynomial> result; // generators of the running intersection
    bool first = true;
    for (const auto& b0 : B.gens) {
        Polynomial b = detail::reduce_full(R, b0, R.quotient);
        if (b.is_zero()) continue;
        std::vector<Polynomial> meet = detail::intersect_polys(A.ctx, lifted, {b});
        std::vector<Polynomial> quot;
        for (const auto& g : meet) quot.push_back(detail::poly_exact_div(R, g, b));
        if (first) {
            result = std::move(quot);
            first = false;
        } else {
            result = detail::intersect_polys(A.ctx, result, quot);
        }
    }
    if (first) return unit_ideal(A.ctx); // B = (0): everything maps into A
    return trim_generators(Ideal(A.ctx, std::move(result)));
}

// ---- length / dimension queries ----

// number of lattice points under the staircase of the given minimal initial
// generators; nullopt when some axis has no pure power
inline std::optional<std::int64_t> staircase_count(int nvars,
                                                   const std::vector<Monomial>& lead) {
    for (const auto& m : lead)
        if (m.is_one()) return 0;
    std::vector<std::int32_t> bound(nvars, -1);
    for (const auto& m : lead) {
        int support = -1;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i] > 0) { support = support == -1 ? i : -2; }
        if (support >= 0 && (bound[support] < 0 || m.e[support] < bound[support]))
            bound[support] = m.e[support];
    }
    for (int i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;
    // odometer scan over the bounding box
    std::vector<std::int32_t> pt(nvars, 0);
    std::int64_t count = 0;
    for (;;) {
        bool dominated = false;
        for (const auto& m : lead) {
            bool div = true;
            for (int i = 0; i < nvars; ++i)
                if (m.e[i] > pt[i]) { div = false; break; }
            if (div) { dominated = true; break; }
        }
        if (!dominated) ++count;
        int i = 0;
        for (; i < nvars; ++i) {
            if (++pt[i] < bound[i]) break;
            pt[i] = 0;
        }
        if (i == nvars) break;
    }
    return count;
}

// dim_k(R/A) by staircase enumeration of the initial ideal of A + Q
inline std::optional<std::int64_t> length_of_quotient(const Ideal& A) {
    const GroebnerBasis& G = gb(A);
    return staircase_count(A.ctx->nvars(), G.staircase());
}

// Krull dimension of R/A (combinatorial dimension of the initial ideal)
inline int krull_dim(const Ideal& A) {
    return combinatorial_dimension(A.ctx->nvars(), gb(A).staircase());
}

// true iff R/A is finite dimensional and supported only at the origin, i.e.
// multiplication by each variable is nilpotent on the quotient
inline bool is_only_origin(const Ideal& A) {
    auto len = length_of_quotient(A);
    if (!len) return false;
    std::int64_t D = *len;
    if (D == 0) return true;
    const GroebnerBasis& G = gb(A);
    for (int i = 0; i < A.ctx->nvars(); ++i) {
        Monomial m = Monomial::one(A.ctx->nvars());
        m.e[i] = static_cast<std::int32_t>(D);
        m.deg = static_cast<std::int32_t>(D);
        if (!in_ideal(Polynomial::term(m, 1), G)) return false;
    }
    return true;
}

// (A : B) for A supported only at the origin, by linear algebra on the finite
// space R/A: the colon modulo A is the joint kernel of the multiplication
// maps by the generators of B.  The kernel vectors are brought to echelon
// form over the standard monomials, so together with the Groebner basis of A
// they form a Groebner basis of the colon; much faster than the tag-variable
// route when R/A is large but B's generators are dense or of high degree.
inline Ideal colon_primary(const Ideal& A, const Ideal& B) {
    require_same_ctx(A.ctx, B.ctx);
    const RingCtx& R = *A.ctx;
    const PrimeField& F = R.field;
    const GroebnerBasis& G = gb(A);
    if (G.is_unit()) return unit_ideal(A.ctx);
    if (!is_only_origin(A)) throw error("colon_primary: ideal is not m-primary");
    std::vector<Monomial> lead = G.staircase();

    // standard monomials of A, ascending in the ring order
    std::vector<std::int32_t> bound(R.nvars(), 0);
    for (const auto& m : lead) {
        int support = -1;
        for (int i = 0; i < R.nvars(); ++i)
            if (m.e[i] > 0) { support = support == -1 ? i : -2; }
        if (support >= 0 && (bound[support] == 0 || m.e[support] < bound[support]))
            bound[support] = m.e[support];
    }
    std::vector<Monomial> basis;
    std::vector<std::int32_t> pt(R.nvars(), 0);
    for (;;) {
        Monomial m = Monomial::one(R.nvars());
        for (int i = 0; i < R.nvars(); ++i) { m.e[i] = pt[i]; m.deg += pt[i]; }
        bool dominated = false;
        for (const auto& l : lead)
            if (l.divides(m)) { dominated = true; break; }
        if (!dominated) basis.push_back(m);
        int i = 0;
        for (; i < R.nvars(); ++i) {
            if (++pt[i] < bound[i]) break;
            pt[i] = 0;
        }
        if (i == R.nvars()) break;
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return R.order.cmp(a, b) < 0; });
    const size_t lam = basis.size();
    std::map<std::array<std::int32_t, kMaxVars>, size_t> index;
    for (size_t i = 0; i < lam; ++i) index[basis[i].e] = i;

    auto to_vec = [&](const Polynomial& f) {
        std::vector<std::uint32_t> v(lam, 0);
        for (const auto& [m, c] : f.terms) v[index.at(m.e)] = c;
        return v;
    };
    auto to_poly = [&](const std::vector<std::uint32_t>& v) {
        Polynomial f;
        for (size_t i = lam; i-- > 0;)
            if (v[i] != 0) f.terms.emplace_back(basis[i], v[i]);
        return f;
    };

    // kernel of the stacked maps, cut down one generator at a time;
    // low-degree generators first, since they constrain the most
    std::vector<std::vector<std::uint32_t>> kernel;
    kernel.reserve(lam);
    for (size_t i = 0; i < lam; ++i) {
        std::vector<std::uint32_t> v(lam, 0);
        v[i] = 1;
        kernel.push_back(std::move(v));
    }
    std::vector<Polynomial> bs;
    for (const auto& b0 : B.gens) {
        Polynomial b = detail::reduce_full(R, b0, R.quotient);
        if (!b.is_zero()) bs.push_back(std::move(b));
    }
    if (bs.empty()) return unit_ideal(A.ctx); // B = (0)
    std::stable_sort(bs.begin(), bs.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.degree() < b.degree();
    });
    for (const auto& b : bs) {
        if (kernel.empty()) break;
        // rows [image | kernel coords]; row-reduce the image part, rows whose
        // image vanishes carry the surviving kernel vectors
        std::vector<std::vector<std::uint32_t>> img;
        img.reserve(kernel.size());
        for (const auto& k : kernel)
            img.push_back(to_vec(normal_form(poly_mul(R, to_poly(k), b), G)));
        std::vector<size_t> pivot_of_row(kernel.size(), lam);
        std::vector<std::vector<std::uint32_t>> next;
        for (size_t r0 = 0; r0 < kernel.size(); ++r0) {
            std::vector<std::uint32_t>& row = img[r0];
            std::vector<std::uint32_t>& ker = kernel[r0];
            for (size_t r1 = 0; r1 < r0; ++r1) {
                if (pivot_of_row[r1] == lam) continue;
                size_t p = pivot_of_row[r1];
                if (row[p] == 0) continue;
                std::uint32_t c = row[p];
                for (size_t j = 0; j < lam; ++j) {
                    if (img[r1][j]) row[j] = F.sub(row[j], F.mul(c, img[r1][j]));
                    if (kernel[r1][j]) ker[j] = F.sub(ker[j], F.mul(c, kernel[r1][j]));
                }
            }
            size_t p = lam;
            for (size_t j = 0; j < lam; ++j)
                if (row[j] != 0) { p = j; break; }
            if (p == lam) {
                next.push_back(std::move(ker));
                continue;
            }
            std::uint32_t ic = F.inv(row[p]);
            for (size_t j = 0; j < lam; ++j) {
                row[j] = F.mul(row[j], ic);
                ker[j] = F.mul(ker[j], ic);
            }
            pivot_of_row[r0] = p;
        }
        kernel = std::move(next);
    }

    // echelonize the kernel over the basis so leading monomials are distinct
    std::vector<std::vector<std::uint32_t>> ech;
    for (auto& v : kernel) {
        for (const auto& w : ech) {
            size_t p = lam;
            for (size_t j = lam; j-- > 0;)
                if (w[j] != 0) { p = j; break; }
            if (v[p] == 0) continue;
            std::uint32_t c = v[p];
            for (size_t j = 0; j < lam; ++j)
                if (w[j]) v[j] = F.sub(v[j], F.mul(c, w[j]));
        }
        size_t p = lam;
        for (size_t j = lam; j-- > 0;)
            if (v[j] != 0) { p = j; break; }
        if (p == lam) continue;
        std::uint32_t ic = F.inv(v[p]);
        for (size_t j = 0; j < lam; ++j) v[j] = F.mul(v[j], ic);
        ech.push_back(std::move(v));
    }

    // minimal Groebner basis of the colon: kernel leads are standard, so no
    // basis element of A divides them; drop elements made redundant
    std::vector<Polynomial> out;
    for (auto& v : ech) out.push_back(to_poly(v));
    for (const auto& g : G.elems) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.lm().divides(g.lm())) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < out.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < out.size(); ++j)
            if (j != i && out[j].lm().divides(out[i].lm()) &&
                !(out[i].lm().divides(out[j].lm()) && j > i)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(out[i]);
    }
    return Ideal(A.ctx, std::move(minimal));
}

inline Ideal ideal_saturation(const Ideal& A, const Ideal& B, int cap = 100) {
    Ideal cur = A;
    for (int i = 0; i < cap; ++i) {
        Ideal next = ideal_colon(cur, B);
        if (ideal_equal(next, cur)) return cur;
        cur = std::move(next);
    }
    throw error("ideal_saturation: colon chain did not stabilize");
}

namespace detail {

// smallest probed N with lambda(R/(A + m^N)) = lambda(R/(A + m^{N+1})); the
// repeat certifies m^N <= A locally (Nakayama + Krull intersection), so
// A + m^N is the m-primary component of A and the common value is
// lambda(R_m/A_m).  N doubles so the truncations stay cheap; nullopt when no
// probe stabilizes (positive-dimensional component through the origin).
inline std::optional<Ideal> truncation_at_origin(const Ideal& A, int n_cap) {
    Ideal m = maximal_ideal(A.ctx);
    for (int N = 2; N <= n_cap; N *= 2) {
        Ideal mN = ideal_power(m, N);
        Ideal trunc = ideal_sum(A, mN);
        auto a = length_of_quotient(trunc);
        if (!a) return std::nullopt;
        auto b = length_of_quotient(ideal_sum(A, ideal_product(mN, m)));
        if (b && *a == *b) return trunc;
    }
    return std::nullopt;
}

} // namespace detail

// the m-primary component of A (its localization at the origin, contracted
// back); falls back to A : (A : m^inf) when the truncation probe is
// inconclusive, e.g. for an embedded component at the origin
inline Ideal local_part(const Ideal& A) {
    if (is_only_origin(A)) return A;
    int n_cap = A.ctx->nvars() <= 2 ? 512 : 32;
    if (auto t = detail::truncation_at_origin(A, n_cap))
        return Ideal(A.ctx, gb(*t).elems);
    Ideal sat = ideal_saturation(A, maximal_ideal(A.ctx));
    return ideal_colon(A, sat);
}

// lambda(R_m/A_m), the length of the localization at the origin; nullopt when
// the component of A through the origin has positive dimension
inline std::optional<std::int64_t> local_length(const Ideal& A, int n_cap = 512) {
    if (is_only_origin(A)) return length_of_quotient(A);
    if (A.ctx->nvars() > 2) n_cap = std::min(n_cap, 32);
    if (auto t = detail::truncation_at_origin(A, n_cap))
        return length_of_quotient(*t);
    return std::nullopt;
}

// mu(A) = dim_k A/mA, computed as lambda(R/mA) - lambda(R/A)
inline std::int64_t min_gens(const Ideal& A) {
    const RingCtx& R = *A.ctx;
    for (const auto& g : A.gens) {
        Polynomial h = detail::reduce_full(R, g, R.quotient);
        for (const auto& [m, c] : h.terms)
            if (m.is_one()) throw error("min_gens: ideal not contained in the maximal ideal");
    }
    if (A.gens.empty()) return 0;
    Ideal mA = ideal_product(maximal_ideal(A.ctx), A);
    auto la = length_of_quotient(A);
    auto lm = length_of_quotient(mA);
    if (!la || !lm) throw error("min_gens: quotient lengths are not finite");
    return *lm - *la;
}

} // namespace blowup

#endif
