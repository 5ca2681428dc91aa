#ifndef NOETHER_MONOMIAL_HPP
#define NOETHER_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace noether {

/// Exponent vector of fixed length (the ambient variable count).
/// Variable identity is positional; display names live elsewhere.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

    std::size_t nvars() const { return exp_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
    std::uint32_t degree() const;
    bool is_one() const;

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const; // pre: other.divides(*this) fails loudly
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& other) const;

    /// True when every variable outside `support` has exponent zero.
    bool supported_on(const std::vector<bool>& support) const;

    Monomial with_exponent(std::size_t i, std::uint32_t v) const;

    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    bool operator==(const Monomial& other) const = default;

private:
    std::vector<std::uint32_t> exp_;
};

/// Total order on monomials: lexicographic, graded reverse lexicographic, or
/// a two-block elimination order (lex between blocks, grevlex inside).
/// An optional position permutation reorders variables before comparing:
/// slot p of the comparison reads variable perm[p].
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, block };

    static MonomialOrder lex() { return MonomialOrder{Kind::lex, 0, {}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Kind::grevlex, 0, {}}; }
    static MonomialOrder block(std::size_t front_size, std::vector<std::size_t> perm = {}) {
        return MonomialOrder{Kind::block, front_size, std::move(perm)};
    }
    /// Elimination order for the variables flagged in `drop`: they form the
    /// front block, the rest keep their relative positions in the back block.
    static MonomialOrder elimination(const std::vector<bool>& drop);

    Kind kind() const { return kind_; }
    std::size_t front_size() const { return front_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }

    /// Negative, zero, positive as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& other) const = default;

private:
    MonomialOrder(Kind k, std::size_t f, std::vector<std::size_t> p)
        : kind_(k), front_(f), perm_(std::move(p)) {}

    std::uint32_t at(const Monomial& m, std::size_t pos) const {
        return m[perm_.empty() ? pos : perm_[pos]];
    }

    Kind kind_;
    std::size_t front_;
    std::vector<std::size_t> perm_;
};

/// Structural order used for storing polynomial terms: grevlex with identity
/// permutation. Deterministic and independent of any computation's order.
int canonical_compare(const Monomial& a, const Monomial& b);

} // namespace noether

#endif
