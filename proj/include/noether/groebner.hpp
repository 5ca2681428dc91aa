#ifndef NOETHER_GROEBNER_HPP
#define NOETHER_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "noether/deadline.hpp"
#include "noether/errors.hpp"
#include "noether/monomial.hpp"
#include "noether/polynomial.hpp"

namespace noether {

/// A finitely generated ideal: a generator list plus its ring context.
template <class F>
struct Ideal {
    F field;
    std::size_t nvars = 0;
    std::vector<Polynomial<F>> gens;

    static Ideal make(const F& field, std::size_t nvars, std::vector<Polynomial<F>> gens) {
        Ideal I{field, nvars, {}};
        for (auto& g : gens) {
            if (g.nvars() != nvars || !field.same(g.field()))
                throw RingMismatchError("ideal generator in a different ring context");
            if (!g.is_zero()) I.gens.push_back(std::move(g));
        }
        return I;
    }
};

namespace detail {

/// Order keys: every supported order maps a monomial to an integer vector so
/// that the order becomes lexicographic comparison of keys, and the map is
/// additive (key of a product is the sum of keys). The engine compares and
/// multiplies keys instead of re-deriving the order from exponents.
class KeyMaker {
public:
    KeyMaker(const MonomialOrder& ord, std::size_t nvars) : nvars_(nvars) {
        const auto& perm = ord.permutation();
        auto slot = [&](std::size_t p) { return perm.empty() ? p : perm[p]; };
        switch (ord.kind()) {
        case MonomialOrder::Kind::lex:
            for (std::size_t p = 0; p < nvars; ++p) lex_slots_.push_back(slot(p));
            break;
        case MonomialOrder::Kind::grevlex:
            blocks_.push_back({});
            for (std::size_t p = 0; p < nvars; ++p) blocks_[0].push_back(slot(p));
            break;
        case MonomialOrder::Kind::block:
            blocks_.resize(2);
            for (std::size_t p = 0; p < ord.front_size(); ++p) blocks_[0].push_back(slot(p));
            for (std::size_t p = ord.front_size(); p < nvars; ++p) blocks_[1].push_back(slot(p));
            break;
        }
    }

    std::size_t key_size() const {
        if (!lex_slots_.empty()) return lex_slots_.size();
        std::size_t s = 0;
        for (const auto& b : blocks_) s += b.size() + 1;
        return s;
    }

    void fill(const Monomial& m, std::int64_t* out) const {
        if (!lex_slots_.empty()) {
            for (std::size_t p = 0; p < lex_slots_.size(); ++p) out[p] = m[lex_slots_[p]];
            return;
        }
        std::size_t pos = 0;
        for (const auto& b : blocks_) {
            std::int64_t deg = 0;
            for (auto v : b) deg += m[v];
            out[pos++] = deg;
            for (std::size_t i = b.size(); i-- > 0;) out[pos++] = -static_cast<std::int64_t>(m[b[i]]);
        }
    }

private:
    std::size_t nvars_;
    std::vector<std::size_t> lex_slots_;
    std::vector<std::vector<std::size_t>> blocks_;
};

inline int key_compare(const std::int64_t* a, const std::int64_t* b, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

/// Engine-internal term: monomial, its order key, coefficient.
template <class F>
struct KTerm {
    Monomial mono;
    std::vector<std::int64_t> key;
    typename F::Elem coef;
};

template <class F>
using KPoly = std::vector<KTerm<F>>; // strictly decreasing by key

template <class F>
KPoly<F> to_keyed(const Polynomial<F>& p, const KeyMaker& km) {
    KPoly<F> t;
    t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        KTerm<F> kt{m, std::vector<std::int64_t>(km.key_size()), c};
        km.fill(m, kt.key.data());
        t.push_back(std::move(kt));
    }
    std::sort(t.begin(), t.end(), [](const KTerm<F>& a, const KTerm<F>& b) {
        return key_compare(a.key.data(), b.key.data(), a.key.size()) > 0;
    });
    return t;
}

template <class F>
Polynomial<F> from_keyed(const F& field, std::size_t nvars, const KPoly<F>& t) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(t.size());
    for (const auto& kt : t) terms.emplace_back(kt.mono, kt.coef);
    return Polynomial<F>::from_terms(field, nvars, std::move(terms));
}

/// a*w[h..] + b*(shift*g) merged in one pass; shift enters through its
/// precomputed key.
template <class F>
KPoly<F> combine(const F& field, const typename F::Elem& a, const KPoly<F>& w, std::size_t h,
                 const typename F::Elem& b, const Monomial& shift,
                 const std::int64_t* shift_key, const KPoly<F>& g) {
    KPoly<F> r;
    r.reserve(w.size() - h + g.size());
    const bool scale_w = !field.eq(a, field.one());
    // w entries below h may be moved-from husks; take the key width from a
    // live term only
    const std::size_t keylen =
        g.empty() ? (h < w.size() ? w[h].key.size() : 0) : g[0].key.size();
    std::size_t i = h, j = 0;
    std::vector<std::int64_t> gkey(keylen);
    auto load_g = [&](std::size_t jj) {
        for (std::size_t k = 0; k < keylen; ++k) gkey[k] = g[jj].key[k] + shift_key[k];
    };
    if (j < g.size()) load_g(j);
    while (i < w.size() && j < g.size()) {
        int c = key_compare(w[i].key.data(), gkey.data(), keylen);
        if (c > 0) {
            r.push_back(KTerm<F>{w[i].mono, w[i].key,
                                 scale_w ? field.mul(a, w[i].coef) : w[i].coef});
            ++i;
        } else if (c < 0) {
            r.push_back(KTerm<F>{g[j].mono.times(shift), gkey, field.mul(b, g[j].coef)});
            if (++j < g.size()) load_g(j);
        } else {
            auto s = field.add(scale_w ? field.mul(a, w[i].coef) : w[i].coef,
                               field.mul(b, g[j].coef));
            if (!field.is_zero(s))
                r.push_back(KTerm<F>{w[i].mono, w[i].key, std::move(s)});
            ++i;
            if (++j < g.size()) load_g(j);
        }
    }
    for (; i < w.size(); ++i)
        r.push_back(KTerm<F>{w[i].mono, w[i].key, scale_w ? field.mul(a, w[i].coef) : w[i].coef});
    for (; j < g.size(); ++j) {
        load_g(j);
        r.push_back(KTerm<F>{g[j].mono.times(shift), gkey, field.mul(b, g[j].coef)});
    }
    return r;
}

/// One basis element prepared for reduction: scaled monic (division path) or
/// field-primitive (fraction-free path).
template <class F>
struct Reducer {
    Monomial lm;
    KPoly<F> terms;
};

template <class F>
Reducer<F> make_reducer(const F& field, const KeyMaker& km, const Polynomial<F>& p) {
    Reducer<F> r;
    r.terms = to_keyed(p, km);
    r.lm = r.terms.front().mono;
    if constexpr (F::prefer_fraction_free) {
        std::vector<typename F::Elem> coeffs;
        coeffs.reserve(r.terms.size());
        for (auto& t : r.terms) coeffs.push_back(t.coef);
        field.scale_primitive(coeffs);
        for (std::size_t k = 0; k < coeffs.size(); ++k) r.terms[k].coef = std::move(coeffs[k]);
    } else {
        const auto lc = r.terms.front().coef;
        if (!field.eq(lc, field.one()))
            for (auto& t : r.terms) t.coef = field.div(t.coef, lc);
    }
    return r;
}

/// Fully reduces `w` by the reducers: no term of the result is divisible by
/// any reducer's leading monomial, and input - result lies in the reducers'
/// ideal. Exact on every field; the fraction-free path tracks the accumulated
/// scale and divides it out once at the end.
template <class F>
KPoly<F> reduce_full(const F& field, const KeyMaker& km,
                     const std::vector<const Reducer<F>*>& basis, KPoly<F> w) {
    KPoly<F> out;
    typename F::Elem out_scale = field.one();
    bool out_scaled = false;
    std::size_t h = 0, steps = 0;
    std::vector<std::int64_t> shift_key(km.key_size());
    while (h < w.size()) {
        if (((++steps) & 0x3ffu) == 0) Deadline::check();
        const auto& lt = w[h];
        const Reducer<F>* red = nullptr;
        for (const auto* r : basis)
            if (r->lm.divides(lt.mono)) {
                red = r;
                break;
            }
        if (!red) {
            out.push_back(std::move(w[h]));
            ++h;
            continue;
        }
        Monomial shift = lt.mono.divided_by(red->lm);
        km.fill(shift, shift_key.data());
        if constexpr (F::prefer_fraction_free) {
            const auto& lc = red->terms.front().coef;
            w = combine(field, lc, w, h, field.neg(lt.coef), shift, shift_key.data(), red->terms);
            std::vector<typename F::Elem> coeffs;
            coeffs.reserve(w.size());
            for (auto& t : w) coeffs.push_back(std::move(t.coef));
            auto rho = field.scale_primitive(coeffs);
            for (std::size_t k = 0; k < coeffs.size(); ++k) w[k].coef = std::move(coeffs[k]);
            auto step_scale = field.mul(lc, rho);
            if (!field.eq(step_scale, field.one())) {
                out_scale = field.mul(out_scale, step_scale);
                out_scaled = true;
                for (auto& t : out) t.coef = field.mul(t.coef, step_scale);
            }
        } else {
            w = combine(field, field.one(), w, h, field.neg(lt.coef), shift, shift_key.data(),
                        red->terms);
        }
        h = 0;
    }
    if constexpr (F::prefer_fraction_free) {
        if (out_scaled)
            for (auto& t : out) t.coef = field.div(t.coef, out_scale);
    }
    return out;
}

/// Adds a trailing zero exponent for each extra variable.
template <class F>
Polynomial<F> extend_ring(const Polynomial<F>& p, std::size_t extra) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(t.first.exponents());
        e.resize(e.size() + extra, 0);
        terms.emplace_back(Monomial(std::move(e)), t.second);
    }
    return Polynomial<F>::from_terms(p.field(), p.nvars() + extra, std::move(terms));
}

/// Drops trailing variables; they must not occur in p.
template <class F>
Polynomial<F> restrict_ring(const Polynomial<F>& p, std::size_t fewer) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(t.first.exponents());
        for (std::size_t k = 0; k < fewer; ++k) {
            if (e.back() != 0) throw Error("restrict_ring: variable still occurs");
            e.pop_back();
        }
        terms.emplace_back(Monomial(std::move(e)), t.second);
    }
    return Polynomial<F>::from_terms(p.field(), p.nvars() - fewer, std::move(terms));
}

} // namespace detail

/// Reduced Groebner basis with respect to a monomial order: elements are
/// monic, no term of any element is divisible by another element's leading
/// monomial, and the list is sorted by increasing leading monomial. This is a
/// canonical form of the ideal, so ideal equality is element-wise equality of
/// reduced bases.
template <class F>
class GroebnerBasis {
public:
    GroebnerBasis(F field, std::size_t nvars, MonomialOrder ord,
                  std::vector<Polynomial<F>> reduced_monic_elements)
        : field_(std::move(field)), nvars_(nvars), ord_(std::move(ord)),
          elems_(std::move(reduced_monic_elements)), km_(ord_, nvars_) {
        for (const auto& e : elems_) {
            reducers_.push_back(detail::make_reducer(field_, km_, e));
            lms_.push_back(reducers_.back().lm);
        }
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial<F>>& elements() const { return elems_; }
    const std::vector<Monomial>& leading_monomials() const { return lms_; }

    bool is_zero_ideal() const { return elems_.empty(); }
    /// True when the basis generates the whole ring.
    bool is_trivial() const {
        return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
    }

    /// Canonical remainder: no term divisible by any leading monomial, and
    /// f - normal_form(f) lies in the ideal.
    Polynomial<F> normal_form(const Polynomial<F>& f) const {
        if (f.nvars() != nvars_ || !field_.same(f.field()))
            throw RingMismatchError("normal form in a different ring context");
        std::vector<const detail::Reducer<F>*> view;
        view.reserve(reducers_.size());
        for (const auto& r : reducers_) view.push_back(&r);
        auto w = detail::reduce_full(field_, km_, view, detail::to_keyed(f, km_));
        return detail::from_keyed(field_, nvars_, w);
    }

    bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

    Ideal<F> as_ideal() const { return Ideal<F>::make(field_, nvars_, elems_); }

    bool operator==(const GroebnerBasis& other) const {
        if (nvars_ != other.nvars_ || elems_.size() != other.elems_.size()) return false;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i] != other.elems_[i]) return false;
        return true;
    }
    bool operator!=(const GroebnerBasis& other) const { return !(*this == other); }

private:
    F field_;
    std::size_t nvars_;
    MonomialOrder ord_;
    std::vector<Polynomial<F>> elems_;
    std::vector<Monomial> lms_;
    detail::KeyMaker km_;
    std::vector<detail::Reducer<F>> reducers_;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and normal
/// selection (smallest pair lcm first). Deterministic for a fixed generator
/// order. Returns the reduced basis; the zero ideal yields an empty one.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, const MonomialOrder& ord) {
    const F& field = I.field;
    const std::size_t n = I.nvars;
    const detail::KeyMaker km(ord, n);

    struct Elem {
        Polynomial<F> poly;
        Monomial lm;
        typename F::Elem lc;
    };
    std::vector<Elem> G;
    std::vector<detail::Reducer<F>> reducers;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::vector<std::int64_t> key;
    };
    std::vector<Pair> pairs;
    bool unit_found = false;

    auto reducer_view = [&]() {
        std::vector<const detail::Reducer<F>*> view;
        view.reserve(reducers.size());
        for (const auto& r : reducers) view.push_back(&r);
        return view;
    };

    auto add_element = [&](Polynomial<F> h) {
        const auto& lt = h.leading_term(ord);
        Monomial lm_h = lt.first;
        if (lm_h.is_one()) unit_found = true;
        std::size_t t = G.size();

        // drop old pairs made obsolete by the new leading monomial
#ifndef NOETHER_GB_NO_OLDPRUNE
        std::erase_if(pairs, [&](const Pair& p) {
            return lm_h.divides(p.lcm) &&
                   !(Monomial::lcm(G[p.i].lm, lm_h) == p.lcm) &&
                   !(Monomial::lcm(G[p.j].lm, lm_h) == p.lcm);
        });
#endif

        // candidate pairs with the new element, filtered by the M/F criteria;
        // coprime-lcm candidates take part in the filtering but are not kept
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(G.size());
        for (std::size_t i = 0; i < G.size(); ++i)
            cands.push_back({i, Monomial::lcm(G[i].lm, lm_h), G[i].lm.coprime_with(lm_h)});
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool dominated = false;
#ifndef NOETHER_GB_NO_MF
            for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
                if (a == b) continue;
                if (cands[b].lcm.divides(cands[a].lcm) &&
                    (!(cands[a].lcm == cands[b].lcm) || b < a))
                    dominated = true;
            }
#endif
#ifdef NOETHER_GB_NO_COPRIME
            cands[a].coprime = false;
#endif
            if (!dominated && !cands[a].coprime) {
                std::vector<std::int64_t> key(km.key_size());
                km.fill(cands[a].lcm, key.data());
                pairs.push_back(Pair{cands[a].i, t, cands[a].lcm, std::move(key)});
            }
        }

        reducers.push_back(detail::make_reducer(field, km, h));
        G.push_back(Elem{std::move(h), std::move(lm_h), lt.second});
    };

    for (const auto& g : I.gens) {
        auto red = detail::reduce_full(field, km, reducer_view(), detail::to_keyed(g, km));
        if (!red.empty()) add_element(detail::from_keyed(field, n, red));
        if (unit_found) break;
    }

    while (!pairs.empty() && !unit_found) {
        Deadline::check();
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = detail::key_compare(pairs[k].key.data(), pairs[best].key.data(),
                                        km.key_size());
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const Elem& f = G[p.i];
        const Elem& g = G[p.j];
        // S-polynomial lc(g)*(lcm/lm(f))*f - lc(f)*(lcm/lm(g))*g
        auto sf = detail::to_keyed(f.poly, km);
        Monomial mf = p.lcm.divided_by(f.lm);
        std::vector<std::int64_t> mf_key(km.key_size());
        km.fill(mf, mf_key.data());
        for (auto& t : sf) {
            t.mono = t.mono.times(mf);
            for (std::size_t k = 0; k < mf_key.size(); ++k) t.key[k] += mf_key[k];
        }
        Monomial mg = p.lcm.divided_by(g.lm);
        std::vector<std::int64_t> mg_key(km.key_size());
        km.fill(mg, mg_key.data());
        auto spoly = detail::combine(field, g.lc, sf, 0, field.neg(f.lc), mg, mg_key.data(),
                                     detail::to_keyed(g.poly, km));
        auto red = detail::reduce_full(field, km, reducer_view(), std::move(spoly));
        if (!red.empty()) add_element(detail::from_keyed(field, n, red));
    }

    if (unit_found)
        return GroebnerBasis<F>(field, n, ord, {Polynomial<F>::one(field, n)});

    // minimalize: keep only elements with minimal leading monomials
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = ord.compare(G[a].lm, G[b].lm);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<Polynomial<F>> out;
    std::vector<Monomial> out_lm;
    for (auto i : idx) {
        bool redundant = false;
        for (const auto& lm : out_lm)
            if (lm.divides(G[i].lm)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            out.push_back(G[i].poly);
            out_lm.push_back(G[i].lm);
        }
    }

    // inter-reduce tails until stable (leading monomials cannot change)
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<detail::Reducer<F>> all;
        all.reserve(out.size());
        for (const auto& p : out) all.push_back(detail::make_reducer(field, km, p));
        for (std::size_t a = 0; a < out.size(); ++a) {
            std::vector<const detail::Reducer<F>*> others;
            others.reserve(out.size() - 1);
            for (std::size_t b = 0; b < out.size(); ++b)
                if (b != a) others.push_back(&all[b]);
            auto red = detail::reduce_full(field, km, others, detail::to_keyed(out[a], km));
            auto q = detail::from_keyed(field, n, red);
            if (q != out[a]) {
                out[a] = std::move(q);
                changed = true;
                all[a] = detail::make_reducer(field, km, out[a]);
            }
        }
    }
    for (auto& p : out) {
        const auto& lc = p.leading_term(ord).second;
        if (!field.eq(lc, field.one())) p = p.scaled(field.div(field.one(), lc));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return GroebnerBasis<F>(field, n, ord, std::move(out));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    return G.normal_form(f);
}

/// Generators of I intersected with the subring of the non-dropped variables,
/// via a block order with the dropped variables in front. The result lives in
/// the same ambient ring; its generators avoid the dropped variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<bool>& drop) {
    auto gb = buchberger(I, MonomialOrder::elimination(drop));
    std::vector<bool> keep(drop.size());
    for (std::size_t i = 0; i < drop.size(); ++i) keep[i] = !drop[i];
    std::vector<Polynomial<F>> gens;
    for (const auto& e : gb.elements()) {
        bool ok = true;
        for (const auto& t : e.terms())
            if (!t.first.supported_on(keep)) {
                ok = false;
                break;
            }
        if (ok) gens.push_back(e);
    }
    return Ideal<F>::make(I.field, I.nvars, std::move(gens));
}

/// The saturation I : f^infinity, via the relation 1 - t*f in one extra
/// variable and elimination of t.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f) {
    if (f.is_zero()) throw Error("saturation by the zero polynomial");
    const std::size_t n = I.nvars;
    const F& field = I.field;
    std::vector<Polynomial<F>> gens;
    gens.reserve(I.gens.size() + 1);
    for (const auto& g : I.gens) gens.push_back(detail::extend_ring(g, 1));
    auto t = Polynomial<F>::variable(field, n + 1, n);
    gens.push_back(Polynomial<F>::one(field, n + 1) - t * detail::extend_ring(f, 1));
    std::vector<bool> drop(n + 1, false);
    drop[n] = true;
    auto elim = eliminate(Ideal<F>::make(field, n + 1, std::move(gens)), drop);
    std::vector<Polynomial<F>> back;
    back.reserve(elim.gens.size());
    for (const auto& g : elim.gens) back.push_back(detail::restrict_ring(g, 1));
    return Ideal<F>::make(field, n, std::move(back));
}

/// Intersection of two ideals via the standard one-variable trick:
/// eliminate t from t*I + (1-t)*J.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
    if (I.nvars != J.nvars || !I.field.same(J.field))
        throw RingMismatchError("intersecting ideals from different rings");
    const std::size_t n = I.nvars;
    const F& field = I.field;
    auto t = Polynomial<F>::variable(field, n + 1, n);
    auto one_minus_t = Polynomial<F>::one(field, n + 1) - t;
    std::vector<Polynomial<F>> gens;
    gens.reserve(I.gens.size() + J.gens.size());
    for (const auto& g : I.gens) gens.push_back(t * detail::extend_ring(g, 1));
    for (const auto& g : J.gens) gens.push_back(one_minus_t * detail::extend_ring(g, 1));
    std::vector<bool> drop(n + 1, false);
    drop[n] = true;
    auto elim = eliminate(Ideal<F>::make(field, n + 1, std::move(gens)), drop);
    std::vector<Polynomial<F>> back;
    back.reserve(elim.gens.size());
    for (const auto& g : elim.gens) back.push_back(detail::restrict_ring(g, 1));
    return Ideal<F>::make(field, n, std::move(back));
}

/// A maximum-size variable set U with P inter K[U] = {0}, read off the
/// leading monomials of a grevlex basis: U qualifies exactly when no leading
/// monomial lies in K[U]. Ties prefer low variable indices, matching a greedy
/// ascending scan. Callers certify the set with an elimination check.
template <class F>
std::vector<std::size_t> independent_set(const Ideal<F>& P) {
    auto gb = buchberger(P, MonomialOrder::grevlex());
    if (gb.is_trivial()) throw Error("independent set of the unit ideal");
    const std::size_t n = P.nvars;

    std::vector<std::vector<std::size_t>> support;
    for (const auto& lm : gb.leading_monomials()) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i] > 0) s.push_back(i);
        support.push_back(std::move(s));
    }

    std::vector<bool> in_u(n, false), best_mask(n, false);
    std::size_t best_size = 0;
    bool have_best = false;

    // valid to add v: no leading-monomial support may land inside U + {v}
    auto can_add = [&](std::size_t v) {
        for (const auto& s : support) {
            bool contained = true;
            for (auto i : s)
                if (i != v && !in_u[i]) {
                    contained = false;
                    break;
                }
            if (contained) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t next, std::size_t count) -> void {
        if (have_best && count + (n - next) <= best_size) return;
        if (next == n) {
            best_size = count;
            best_mask = in_u;
            have_best = true;
            return;
        }
        if (can_add(next)) {
            in_u[next] = true;
            self(self, next + 1, count + 1);
            in_u[next] = false;
        }
        self(self, next + 1, count);
    };
    dfs(dfs, 0, 0);

    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < n; ++i)
        if (best_mask[i]) u.push_back(i);
    return u;
}

/// Number of standard monomials of a zero-dimensional basis. Errors when the
/// staircase is infinite, i.e. some variable lacks a pure power among the
/// leading monomials.
template <class F>
std::size_t colength(const GroebnerBasis<F>& G) {
    const std::size_t n = G.nvars();
    if (G.is_trivial()) return 0;
    const auto& lms = G.leading_monomials();
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& m : lms) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] > 0) pure = false;
            if (pure) {
                bound[i] = found ? std::min(bound[i], m[i]) : m[i];
                found = true;
            }
        }
        if (!found)
            throw Error("ideal is not zero-dimensional: no pure power in variable " +
                        std::to_string(i + 1));
    }
    std::size_t count = 0;
    Monomial cur(n);
    auto rec = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            for (const auto& m : lms)
                if (m.divides(cur)) return;
            ++count;
            return;
        }
        for (std::uint32_t e = 0; e < bound[var]; ++e) {
            cur = cur.with_exponent(var, e);
            self(self, var + 1);
        }
        cur = cur.with_exponent(var, 0);
    };
    rec(rec, 0);
    return count;
}

/// Ideal equality through canonical reduced bases.
template <class F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J, const MonomialOrder& ord) {
    return buchberger(I, ord) == buchberger(J, ord);
}

} // namespace noether

#endif
