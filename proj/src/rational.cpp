#include "noether/rational.hpp"

namespace noether {

Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

RationalField::Elem RationalField::scale_primitive(std::vector<Elem>& v) const {
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& q : v) {
        if (q == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1); // all zero
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (const auto& q : v) {
        if (q != 0) {
            if (q < 0) scale = -scale;
            break;
        }
    }
    for (auto& q : v) q *= scale;
    return scale;
}

} // namespace noether
