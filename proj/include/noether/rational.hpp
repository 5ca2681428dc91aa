#ifndef NOETHER_RATIONAL_HPP
#define NOETHER_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "noether/errors.hpp"

namespace noether {

/// Arbitrary-precision rational number. GMP keeps values canonical
/// (reduced, positive denominator) through arithmetic.
using Rational = mpq_class;

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

/// The field of rational numbers. Stateless; every instance is the same field.
class RationalField {
public:
    using Elem = Rational;

    /// The engine reduces with integer-primitive scaled polynomials instead
    /// of monic ones; over the rationals this keeps every intermediate
    /// coefficient an integer.
    static constexpr bool prefer_fraction_free = true;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_long(long v) const { return Rational(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw DivisionByZeroError("division by zero rational");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    bool same(const RationalField&) const { return true; }

    std::string to_string(const Elem& a) const { return rational_to_string(a); }

    /// Rescales a coefficient vector by one nonzero rational so the entries
    /// become coprime integers with positive leading entry. Returns the
    /// factor that was applied.
    Elem scale_primitive(std::vector<Elem>& v) const;
};

} // namespace noether

#endif
