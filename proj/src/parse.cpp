#include "bricard/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace bricard {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    std::optional<std::string> identifier() {
        skip_ws();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }
    std::optional<Z> integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return Z(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    const UniversePtr& u;

    RationalExpression sum() {
        bool neg = false;
        while (true) {
            if (lex.accept('-'))
                neg = !neg;
            else if (!lex.accept('+'))
                break;
        }
        RationalExpression r = product();
        if (neg) r = -r;
        while (true) {
            if (lex.accept('+'))
                r = r + product();
            else if (lex.accept('-'))
                r = r - product();
            else
                return r;
        }
    }

    RationalExpression product() {
        RationalExpression r = unary();
        while (true) {
            if (lex.accept('*'))
                r = r * unary();
            else if (lex.accept('/'))
                r = r / unary();
            else
                return r;
        }
    }

    RationalExpression unary() {
        bool neg = false;
        while (true) {
            if (lex.accept('-'))
                neg = !neg;
            else if (!lex.accept('+'))
                break;
        }
        RationalExpression r = power();
        return neg ? -r : r;
    }

    RationalExpression power() {
        RationalExpression base = atom();
        if (!lex.accept('^')) return base;
        auto n = lex.integer();
        if (!n) throw ParseError("exponent must be a non-negative integer", lex.pos);
        unsigned e = static_cast<unsigned>(n->get_ui());
        if (!n->fits_uint_p()) throw ParseError("exponent too large", lex.pos);
        if (lex.accept('^')) throw ParseError("chained '^' needs parentheses", lex.pos);
        return RationalExpression::of(base.numerator().pow(e), base.denominator().pow(e));
    }

    RationalExpression atom() {
        if (lex.accept('(')) {
            RationalExpression r = sum();
            lex.expect(')');
            return r;
        }
        if (auto name = lex.identifier()) {
            if (!u->contains(*name)) throw ParseError("unknown variable '" + *name + "'", lex.pos);
            return RationalExpression(Polynomial::variable(u, *name));
        }
        if (auto n = lex.integer())
            return RationalExpression(Polynomial::constant(u, Q(*n)));
        throw ParseError("expected a term", lex.pos);
    }
};

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

Relation parse_relation(const std::string& line, const UniversePtr& u) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("relation needs '='", 0);
    std::string lhs_text = line.substr(0, eq);
    Lexer lhs{lhs_text};
    auto target = lhs.identifier();
    if (!target || !u->contains(*target))
        throw ParseError("relation target must be a known variable", 0);
    unsigned power = 1;
    if (lhs.accept('^')) {
        auto n = lhs.integer();
        if (!n || *n < 1) throw ParseError("relation power must be a positive integer", lhs.pos);
        power = static_cast<unsigned>(n->get_ui());
    }
    if (!lhs.done()) throw ParseError("junk before '='", lhs.pos);
    RationalExpression rhs = parse_rational(line.substr(eq + 1), u);
    if (rhs.mentions(*target))
        throw ParseError("target '" + *target + "' appears on its own rhs", eq);
    return Relation{*target, power, rhs};
}

}  // namespace

RationalExpression parse_rational(const std::string& text, const UniversePtr& u) {
    Parser p{Lexer{text}, u};
    RationalExpression r = p.sum();
    if (!p.lex.done()) throw ParseError("unexpected trailing input", p.lex.pos);
    return r;
}

Polynomial parse_polynomial(const std::string& text, const UniversePtr& u) {
    RationalExpression r = parse_rational(text, u);
    if (!r.denominator().is_constant())
        throw ParseError("division leaves a non-polynomial result", text.size());
    return r.numerator() * (Q(1) / r.denominator().constant_value());
}

SolutionTable parse_table(const std::string& text, const UniversePtr& u) {
    auto tables = parse_tables(text, u);
    if (tables.empty()) throw ParseError("no relations found", 0);
    if (tables.size() > 1) throw ParseError("multiple tables where one expected", 0);
    return tables.front();
}

std::vector<SolutionTable> parse_tables(const std::string& text, const UniversePtr& u) {
    std::vector<SolutionTable> out;
    SolutionTable cur;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (!cur.relations.empty()) {
            out.push_back(std::move(cur));
            cur = SolutionTable{};
            seen.clear();
        }
    };
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) {
            flush();
            continue;
        }
        Relation r = parse_relation(line, u);
        if (!seen.insert(r.target).second)
            throw ParseError("repeated target '" + r.target + "'", 0);
        cur.relations.push_back(std::move(r));
    }
    flush();
    return out;
}

std::map<std::string, Q> parse_sides(const std::string& text) {
    std::map<std::string, Q> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("side line needs '='", 0);
        std::string lhs_text = line.substr(0, eq);
        Lexer lhs{lhs_text};
        auto name = lhs.identifier();
        if (!name || !lhs.done()) throw ParseError("bad side name", 0);
        std::string rhs = line.substr(eq + 1);
        Lexer v{rhs};
        bool neg = v.accept('-');
        auto num = v.integer();
        if (!num) throw ParseError("side value must be rational", v.pos);
        Q val(*num);
        if (v.accept('/')) {
            auto den = v.integer();
            if (!den || *den == 0) throw ParseError("bad denominator", v.pos);
            val /= Q(*den);
        }
        if (!v.done()) throw ParseError("junk after side value", v.pos);
        if (neg) val = -val;
        if (out.count(*name)) throw ParseError("repeated side '" + *name + "'", 0);
        out[*name] = val;
    }
    return out;
}

}  // namespace bricard
