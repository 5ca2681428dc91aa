#ifndef NOETHER_TEXT_IO_HPP
#define NOETHER_TEXT_IO_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "noether/groebner.hpp"
#include "noether/polynomial.hpp"
#include "noether/rational.hpp"

namespace noether {

/// Display names for the positional variables of a ring.
struct Ring {
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }
    /// Index of a declared name, or npos.
    std::size_t find(const std::string& name) const;

    static Ring with_prefix(const std::string& prefix, std::size_t n, std::size_t start = 1);
    Ring extended(const Ring& extra) const;
};

/// True for strings that can stand as a coefficient without parentheses.
bool is_plain_coefficient(const std::string& s);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

/// Canonical text form: terms in decreasing canonical order, `^` for powers,
/// `*` between factors, e.g. `x1^2-x2*x3`.
template <class F>
std::string polynomial_to_string(const Polynomial<F>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    const F& field = p.field();
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = field.to_string(c);
        bool negative = false;
        if (!is_plain_coefficient(cs)) {
            cs = "(" + cs + ")";
        } else if (!cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::string ms = monomial_to_string(m, names);
        std::string body;
        if (ms.empty()) {
            body = cs;
        } else if (cs == "1") {
            body = ms;
        } else {
            body = cs + "*" + ms;
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? "-" : "+";
            out += body;
        }
    }
    return out;
}

using QPoly = Polynomial<RationalField>;
using QIdeal = Ideal<RationalField>;

/// Parses the canonical text form over the rationals. The grammar supports
/// `+ - * ^ ( )`, integer and a/b literals, and implicit multiplication by
/// juxtaposition; unknown identifier runs are split greedily into declared
/// variable names.
QPoly parse_polynomial(const std::string& text, const Ring& ring);

std::vector<QPoly> parse_polynomial_list(const std::string& text, const Ring& ring);

/// A parsed problem file:
///
///   ring x1 x2 x3 x4;
///   ideal P = x1^2-x2*x3, x1*x2-x3*x4, x2^2-x1*x4;
///   ops L = 1, dx1, dx1^2-2*x2*dx2;
///
/// `#` starts a comment. Operator lists are parsed in the ring extended by
/// one `d<name>` symbol per variable and interpreted later against a scene.
struct ProblemFile {
    Ring ring;
    std::vector<std::pair<std::string, std::vector<QPoly>>> ideals;
    std::vector<std::pair<std::string, std::vector<QPoly>>> ops; // in the extended ring

    const std::vector<QPoly>& ideal(const std::string& name) const;
    const std::vector<QPoly>& op_list(const std::string& name) const;
    bool has_ideal(const std::string& name) const;
    bool has_ops(const std::string& name) const;

    /// The ring extended with the d<name> symbols, as used by `ops` entries.
    Ring extended_ring() const;
};

ProblemFile parse_problem_file(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

} // namespace noether

#endif
