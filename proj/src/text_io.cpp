#include "noether/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "noether/errors.hpp"

namespace noether {

std::size_t Ring::find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return static_cast<std::size_t>(-1);
}

Ring Ring::with_prefix(const std::string& prefix, std::size_t n, std::size_t start) {
    Ring r;
    r.names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.names.push_back(prefix + std::to_string(start + i));
    return r;
}

Ring Ring::extended(const Ring& extra) const {
    Ring r = *this;
    r.names.insert(r.names.end(), extra.names.begin(), extra.names.end());
    return r;
}

bool is_plain_coefficient(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    bool slash_seen = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash_seen) {
            slash_seen = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

namespace {

struct Token {
    enum class Kind { ident, number, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::Kind::end, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Kind::number, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::ident, s_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
        case '+': return {Token::Kind::plus, "+"};
        case '-': return {Token::Kind::minus, "-"};
        case '*': return {Token::Kind::star, "*"};
        case '^': return {Token::Kind::caret, "^"};
        case '/': return {Token::Kind::slash, "/"};
        case '(': return {Token::Kind::lparen, "("};
        case ')': return {Token::Kind::rparen, ")"};
        default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

class PolyParser {
public:
    PolyParser(const std::string& text, const Ring& ring)
        : ring_(ring), lexer_(text), field_() {
        advance();
    }

    QPoly parse() {
        QPoly p = expression();
        if (tok_.kind != Token::Kind::end) throw ParseError("trailing input after polynomial");
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    QPoly expression() {
        bool neg = false;
        if (tok_.kind == Token::Kind::minus) {
            neg = true;
            advance();
        } else if (tok_.kind == Token::Kind::plus) {
            advance();
        }
        QPoly p = term();
        if (neg) p = -p;
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            bool minus = tok_.kind == Token::Kind::minus;
            advance();
            QPoly q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    bool starts_factor() const {
        return tok_.kind == Token::Kind::ident || tok_.kind == Token::Kind::number ||
               tok_.kind == Token::Kind::lparen;
    }

    QPoly term() {
        QPoly p = factor();
        for (;;) {
            if (tok_.kind == Token::Kind::star) {
                advance();
                p = p * factor();
            } else if (starts_factor()) { // implicit multiplication
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    QPoly factor() {
        QPoly b = base();
        if (tok_.kind == Token::Kind::caret) {
            advance();
            if (tok_.kind != Token::Kind::number) throw ParseError("expected exponent after '^'");
            unsigned long e = std::stoul(tok_.text);
            advance();
            b = b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    QPoly base() {
        const std::size_t n = ring_.nvars();
        switch (tok_.kind) {
        case Token::Kind::number: {
            Rational num = rational_from_string(tok_.text);
            advance();
            if (tok_.kind == Token::Kind::slash) {
                advance();
                if (tok_.kind != Token::Kind::number)
                    throw ParseError("expected denominator after '/'");
                Rational den = rational_from_string(tok_.text);
                if (den == 0) throw ParseError("zero denominator in rational literal");
                advance();
                num /= den;
            }
            return QPoly::constant(field_, n, num);
        }
        case Token::Kind::ident: {
            QPoly p = variables_from_ident(tok_.text);
            advance();
            return p;
        }
        case Token::Kind::lparen: {
            advance();
            QPoly p = expression();
            if (tok_.kind != Token::Kind::rparen) throw ParseError("expected ')'");
            advance();
            return p;
        }
        default: throw ParseError("expected a number, variable, or '('");
        }
    }

    /// Splits an identifier run into declared variable names, longest first,
    /// so `x2x3` reads as x2*x3 when x2 and x3 are declared.
    QPoly variables_from_ident(const std::string& ident) {
        const std::size_t n = ring_.nvars();
        QPoly p = QPoly::one(field_, n);
        std::size_t pos = 0;
        while (pos < ident.size()) {
            std::size_t best_len = 0, best_var = 0;
            for (std::size_t v = 0; v < n; ++v) {
                const std::string& name = ring_.names[v];
                if (name.size() > best_len && ident.compare(pos, name.size(), name) == 0) {
                    best_len = name.size();
                    best_var = v;
                }
            }
            if (best_len == 0)
                throw ParseError("unknown variable in '" + ident + "'");
            p = p * QPoly::variable(field_, n, best_var);
            pos += best_len;
        }
        return p;
    }

    const Ring& ring_;
    Lexer lexer_;
    RationalField field_;
    Token tok_;
};

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment) out += c;
    }
    return out;
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

QPoly parse_polynomial(const std::string& text, const Ring& ring) {
    return PolyParser(text, ring).parse();
}

std::vector<QPoly> parse_polynomial_list(const std::string& text, const Ring& ring) {
    std::vector<QPoly> out;
    for (const auto& part : split_top_level(text, ',')) {
        std::string t = trim(part);
        if (t.empty()) throw ParseError("empty entry in polynomial list");
        out.push_back(parse_polynomial(t, ring));
    }
    return out;
}

const std::vector<QPoly>& ProblemFile::ideal(const std::string& name) const {
    for (const auto& [n, v] : ideals)
        if (n == name) return v;
    throw ParseError("no ideal named '" + name + "' in the problem file");
}

const std::vector<QPoly>& ProblemFile::op_list(const std::string& name) const {
    for (const auto& [n, v] : ops)
        if (n == name) return v;
    throw ParseError("no operator list named '" + name + "' in the problem file");
}

bool ProblemFile::has_ideal(const std::string& name) const {
    for (const auto& [n, v] : ideals)
        if (n == name) return true;
    return false;
}

bool ProblemFile::has_ops(const std::string& name) const {
    for (const auto& [n, v] : ops)
        if (n == name) return true;
    return false;
}

Ring ProblemFile::extended_ring() const {
    Ring d;
    for (const auto& n : ring.names) d.names.push_back("d" + n);
    return ring.extended(d);
}

ProblemFile parse_problem_file(const std::string& text) {
    ProblemFile file;
    bool have_ring = false;
    for (const auto& stmt_raw : split_top_level(strip_comments(text), ';')) {
        std::string stmt = trim(stmt_raw);
        if (stmt.empty()) continue;
        std::istringstream head(stmt);
        std::string keyword;
        head >> keyword;
        if (keyword == "ring") {
            if (have_ring) throw ParseError("duplicate ring declaration");
            std::string name;
            while (head >> name) file.ring.names.push_back(name);
            if (file.ring.names.empty()) throw ParseError("ring declaration names no variables");
            have_ring = true;
        } else if (keyword == "ideal" || keyword == "ops") {
            if (!have_ring) throw ParseError("'" + keyword + "' before the ring declaration");
            std::string name;
            head >> name;
            if (name.empty()) throw ParseError("'" + keyword + "' without a name");
            auto eq = stmt.find('=');
            if (eq == std::string::npos) throw ParseError("'" + keyword + "' without '='");
            std::string body = stmt.substr(eq + 1);
            if (keyword == "ideal") {
                file.ideals.emplace_back(name, parse_polynomial_list(body, file.ring));
            } else {
                file.ops.emplace_back(name, parse_polynomial_list(body, file.extended_ring()));
            }
        } else {
            throw ParseError("unknown statement '" + keyword + "'");
        }
    }
    if (!have_ring) throw ParseError("problem file has no ring declaration");
    return file;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_file(ss.str());
}

} // namespace noether
