#include "noether/monomial.hpp"

#include <algorithm>

#include "noether/errors.hpp"

namespace noether {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
    Monomial m(nvars);
    m.exp_[i] = power;
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto e : exp_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
    if (nvars() != other.nvars())
        throw RingMismatchError("monomial product across different variable counts");
    Monomial r(nvars());
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] + other.exp_[i];
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this))
        throw Error("monomial division is not exact");
    Monomial r(nvars());
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] - other.exp_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw RingMismatchError("monomial lcm across different variable counts");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return r;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > 0 && other.exp_[i] > 0) return false;
    return true;
}

bool Monomial::supported_on(const std::vector<bool>& support) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > 0 && !support[i]) return false;
    return true;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t v) const {
    Monomial m(*this);
    m.exp_[i] = v;
    return m;
}

MonomialOrder MonomialOrder::elimination(const std::vector<bool>& drop) {
    std::vector<std::size_t> perm;
    perm.reserve(drop.size());
    std::size_t front = 0;
    for (std::size_t i = 0; i < drop.size(); ++i)
        if (drop[i]) {
            perm.push_back(i);
            ++front;
        }
    for (std::size_t i = 0; i < drop.size(); ++i)
        if (!drop[i]) perm.push_back(i);
    return block(front, std::move(perm));
}

namespace {

// grevlex on the slot range [lo, hi): higher degree wins; on ties the
// monomial with the smaller exponent at the last differing slot is larger.
template <class At>
int grevlex_range(const At& at, const Monomial& a, const Monomial& b,
                  std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t p = lo; p < hi; ++p) {
        da += at(a, p);
        db += at(b, p);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t p = hi; p-- > lo;) {
        std::uint32_t ea = at(a, p), eb = at(b, p);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

template <class At>
int lex_range(const At& at, const Monomial& a, const Monomial& b,
              std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
        std::uint32_t ea = at(a, p), eb = at(b, p);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    if (b.nvars() != n)
        throw RingMismatchError("monomial comparison across different variable counts");
    auto at = [this](const Monomial& m, std::size_t p) { return this->at(m, p); };
    switch (kind_) {
    case Kind::lex:
        return lex_range(at, a, b, 0, n);
    case Kind::grevlex:
        return grevlex_range(at, a, b, 0, n);
    case Kind::block: {
        int c = grevlex_range(at, a, b, 0, front_);
        if (c != 0) return c;
        return grevlex_range(at, a, b, front_, n);
    }
    }
    return 0;
}

int canonical_compare(const Monomial& a, const Monomial& b) {
    auto at = [](const Monomial& m, std::size_t p) { return m[p]; };
    return grevlex_range(at, a, b, 0, a.nvars());
}

} // namespace noether
