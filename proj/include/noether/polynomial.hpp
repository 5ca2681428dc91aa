#ifndef NOETHER_POLYNOMIAL_HPP
#define NOETHER_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "noether/errors.hpp"
#include "noether/monomial.hpp"

namespace noether {

/// Sparse multivariate polynomial over a scalar field F.
///
/// Terms are kept sorted in decreasing canonical (grevlex) order with no zero
/// coefficients, so equal polynomials have identical term vectors and printing
/// is deterministic. Values are immutable after construction apart from whole-
/// value assignment.
template <class F>
class Polynomial {
public:
    using Field = F;
    using Coef = typename F::Elem;
    using Term = std::pair<Monomial, Coef>;

    Polynomial() : field_(), nvars_(0) {}
    Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Polynomial zero(const F& field, std::size_t nvars) { return Polynomial(field, nvars); }

    static Polynomial constant(const F& field, std::size_t nvars, Coef c) {
        Polynomial p(field, nvars);
        if (!field.is_zero(c)) p.terms_.emplace_back(Monomial::one(nvars), std::move(c));
        return p;
    }

    static Polynomial one(const F& field, std::size_t nvars) {
        return constant(field, nvars, field.one());
    }

    static Polynomial variable(const F& field, std::size_t nvars, std::size_t i) {
        return term(field, Monomial::variable(nvars, i), field.one());
    }

    static Polynomial term(const F& field, Monomial m, Coef c) {
        Polynomial p(field, m.nvars());
        if (!field.is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    /// Builds from an arbitrary term list: sorts, combines, drops zeros.
    static Polynomial from_terms(const F& field, std::size_t nvars, std::vector<Term> terms) {
        Polynomial p(field, nvars);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return canonical_compare(a.first, b.first) > 0;
        });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second = field.add(p.terms_.back().second, t.second);
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        std::erase_if(p.terms_, [&](const Term& t) { return field.is_zero(t.second); });
        return p;
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }

    bool operator==(const Polynomial& other) const {
        if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (!(terms_[i].first == other.terms_[i].first)) return false;
            if (!field_.eq(terms_[i].second, other.terms_[i].second)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator-() const {
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.emplace_back(t.first, field_.neg(t.second));
        return r;
    }

    Polynomial operator+(const Polynomial& other) const {
        check_context(other);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size() + other.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < other.terms_.size()) {
            int c = canonical_compare(terms_[i].first, other.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(other.terms_[j++]);
            } else {
                Coef s = field_.add(terms_[i].second, other.terms_[j].second);
                if (!field_.is_zero(s)) r.terms_.emplace_back(terms_[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& other) const { return *this + (-other); }

    /// Product with a single term, exact and allocation-light.
    Polynomial times_term(const Monomial& m, const Coef& c) const {
        if (field_.is_zero(c)) return zero(field_, nvars_);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Coef p = field_.mul(t.second, c);
            if (!field_.is_zero(p)) r.terms_.emplace_back(t.first.times(m), std::move(p));
        }
        // multiplying by a fixed monomial preserves the canonical term order
        return r;
    }

    Polynomial scaled(const Coef& c) const { return times_term(Monomial::one(nvars_), c); }

    Polynomial operator*(const Polynomial& other) const {
        check_context(other);
        const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
        const Polynomial& big = terms_.size() <= other.terms_.size() ? other : *this;
        auto greater = [](const Monomial& a, const Monomial& b) {
            return canonical_compare(a, b) > 0;
        };
        std::map<Monomial, Coef, decltype(greater)> acc(greater);
        for (const auto& s : small.terms_) {
            for (const auto& b : big.terms_) {
                Monomial m = s.first.times(b.first);
                Coef p = field_.mul(s.second, b.second);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(p));
                else
                    it->second = field_.add(it->second, p);
            }
        }
        Polynomial r(field_, nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!field_.is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = one(field_, nvars_);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Order-maximal term. Errors on the zero polynomial.
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw Error("leading term of the zero polynomial");
        const Term* best = &terms_[0];
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].first, best->first)) best = &terms_[i];
        return *best;
    }

    Coef coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.first == m) return t.second;
        return field_.zero();
    }

    /// Image under a variable substitution. `images[i]` replaces variable i;
    /// all images share one (possibly different) target context.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_)
            throw Error("substitution must map every variable of the source ring");
        const F& tf = terms_.empty() && images.empty() ? field_ : (images.empty() ? field_ : images[0].field());
        std::size_t tn = images.empty() ? nvars_ : images[0].nvars();
        Polynomial r = zero(tf, tn);
        for (const auto& t : terms_) {
            Polynomial factor = constant(tf, tn, t.second);
            for (std::size_t i = 0; i < nvars_; ++i) {
                std::uint32_t e = t.first[i];
                if (e > 0) factor = factor * images[i].pow(e);
            }
            r = r + factor;
        }
        return r;
    }

    /// Formal partial derivative with respect to variable i.
    Polynomial partial_derivative(std::size_t i) const {
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t e = t.first[i];
            if (e == 0) continue;
            Coef c = field_.mul(t.second, field_.from_long(static_cast<long>(e)));
            if (!field_.is_zero(c))
                r.terms_.emplace_back(t.first.with_exponent(i, e - 1), std::move(c));
        }
        // dividing the same variable out of distinct monomials keeps the
        // canonical order (it is multiplicative), so no re-sort is needed
        return r;
    }

    void check_context(const Polynomial& other) const {
        if (nvars_ != other.nvars_ || !field_.same(other.field_))
            throw RingMismatchError("polynomials live in different ring contexts");
    }

private:
    F field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Rescales by a nonzero field element into the field's primitive form.
/// The zero polynomial passes through.
template <class F>
Polynomial<F> make_primitive(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    std::vector<typename F::Elem> coeffs;
    coeffs.reserve(p.term_count());
    for (const auto& t : p.terms()) coeffs.push_back(t.second);
    p.field().scale_primitive(coeffs);
    std::vector<typename Polynomial<F>::Term> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.emplace_back(p.terms()[i].first, std::move(coeffs[i]));
    return Polynomial<F>::from_terms(p.field(), p.nvars(), std::move(terms));
}

template <class F>
std::uint32_t max_degree(const std::vector<Polynomial<F>>& polys) {
    std::uint32_t d = 0;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

} // namespace noether

#endif
