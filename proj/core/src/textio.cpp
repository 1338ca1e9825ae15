#include "staudt/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

struct Token {
    enum class Kind { number, ident, op, end } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::Kind::end, ""};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Kind::number, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::ident, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_ = {Token::Kind::op, std::string(1, c)};
            ++i_;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::end, ""};
};

class PolyParser {
public:
    PolyParser(const std::string& text, const GroundField& k, const std::vector<std::string>& vars)
        : lex_(text), k_(k), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        if (lex_.peek().kind != Token::Kind::end)
            throw parse_error("trailing text after expression: '" + lex_.peek().text + "'");
        return p;
    }

private:
    bool is_op(const char* t) const {
        return lex_.peek().kind == Token::Kind::op && lex_.peek().text == t;
    }

    MultiPoly expr() {
        MultiPoly p = is_op("-") ? (lex_.take(), -term()) : term();
        while (is_op("+") || is_op("-")) {
            bool plus = lex_.take().text == "+";
            MultiPoly q = term();
            if (plus)
                p += q;
            else
                p -= q;
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (is_op("*") || is_op("/")) {
            bool mult = lex_.take().text == "*";
            MultiPoly q = factor();
            if (mult) {
                p = p * q;
            } else {
                auto d = q.total_degree();
                if (!d || *d != 0) throw parse_error("division is only allowed by nonzero constants");
                p = p.scaled(q.leading_coeff().inverse());
            }
        }
        return p;
    }

    MultiPoly factor() {
        if (is_op("-")) {
            lex_.take();
            return -factor();
        }
        MultiPoly p = atom();
        while (is_op("^")) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::number) throw parse_error("exponent must be a number");
            unsigned long n = std::strtoul(e.text.c_str(), nullptr, 10);
            if (e.text.size() > 9) throw parse_error("exponent out of range");
            MultiPoly r = MultiPoly::constant(k_, nvars(), FieldElem::one(k_));
            for (unsigned long i = 0; i < n; ++i) r = r * p;
            p = std::move(r);
        }
        return p;
    }

    MultiPoly atom() {
        Token t = lex_.take();
        if (t.kind == Token::Kind::number) return MultiPoly::constant(k_, nvars(), scalar(t.text));
        if (t.kind == Token::Kind::ident) {
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it == vars_.end()) throw parse_error("unknown variable '" + t.text + "'");
            return MultiPoly::variable(k_, nvars(), static_cast<std::uint32_t>(it - vars_.begin()));
        }
        if (t.kind == Token::Kind::op && t.text == "(") {
            MultiPoly p = expr();
            if (!is_op(")")) throw parse_error("expected ')'");
            lex_.take();
            return p;
        }
        throw parse_error(t.kind == Token::Kind::end ? "unexpected end of expression"
                                                     : "unexpected token '" + t.text + "'");
    }

    FieldElem scalar(const std::string& digits) const {
        Integer v(digits);
        if (k_.is_rational()) return FieldElem::from_rational(Rational(v));
        Integer r = v % Integer(k_.p);
        return FieldElem::residue(k_, r.convert_to<std::uint64_t>());
    }

    std::uint32_t nvars() const { return static_cast<std::uint32_t>(vars_.size()); }

    Lexer lex_;
    GroundField k_;
    const std::vector<std::string>& vars_;
};

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::array<FieldElem, 3> parse_triple(const std::string& text, const GroundField& k, char open,
                                      char close, const char* what) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw parse_error(std::string("expected ") + open + "a:b:c" + close + " for a " + what);
    auto parts = split_top(s.substr(1, s.size() - 2), ':');
    if (parts.size() != 3) throw parse_error(std::string(what) + " needs exactly three entries");
    return {parse_scalar(parts[0], k), parse_scalar(parts[1], k), parse_scalar(parts[2], k)};
}

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const GroundField& k,
                     const std::vector<std::string>& vars) {
    return PolyParser(text, k, vars).run();
}

FieldElem parse_scalar(const std::string& text, const GroundField& k) {
    MultiPoly p = parse_poly(text, k, {});
    if (p.is_zero()) return FieldElem::zero(k);
    return p.leading_coeff();
}

Rational parse_rational(const std::string& text) {
    FieldElem e = parse_scalar(text, GroundField::rationals());
    return e.rat();
}

ProjPoint parse_point(const std::string& text, const GroundField& k) {
    auto c = parse_triple(text, k, '[', ']', "point");
    return ProjPoint(c[0], c[1], c[2]);
}

ProjLine parse_line(const std::string& text, const GroundField& k) {
    std::string s = strip(text);
    char open = (!s.empty() && s.front() == '[') ? '[' : '<';
    char close = open == '[' ? ']' : '>';
    auto c = parse_triple(s, k, open, close, "line");
    return ProjLine(c[0], c[1], c[2]);
}

std::vector<Rational> parse_rational_set(const std::string& text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw parse_error("expected a set literal {...}");
    std::string body = strip(s.substr(1, s.size() - 2));
    std::vector<Rational> out;
    if (body.empty()) return out;
    auto items = split_top(body, ',');
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::string item = strip(items[i]);
        if (item == ".." || item == "...") {
            // "{a, ..., b}" style: fill between the neighbors
            if (out.empty() || i + 1 == items.size())
                throw parse_error("range ellipsis needs endpoints on both sides");
            std::string hi = strip(items[++i]);
            Rational lo = out.back();
            if (denominator(lo) != 1 || !is_integer_literal(hi))
                throw parse_error("range endpoints must be integers: '" + item + "'");
            Integer a = numerator(lo), b(hi);
            if (a > b) throw parse_error("empty range around '" + item + "'");
            for (Integer v = a + 1; v <= b; ++v) out.push_back(Rational(v));
            continue;
        }
        auto dots = item.find("..");
        if (dots != std::string::npos) {
            std::string lo = strip(item.substr(0, dots));
            std::string hi = strip(item.substr(dots + 2));
            if (!is_integer_literal(lo) || !is_integer_literal(hi))
                throw parse_error("range endpoints must be integers: '" + item + "'");
            Integer a(lo), b(hi);
            if (a > b) throw parse_error("empty range '" + item + "'");
            for (Integer v = a; v <= b; ++v) out.push_back(Rational(v));
        } else {
            out.push_back(parse_rational(item));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Monomial parse_exponent_vector(const std::string& text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error("expected an exponent vector (a,b,...)");
    Monomial m;
    for (const auto& raw : split_top(s.substr(1, s.size() - 2), ',')) {
        std::string item = strip(raw);
        if (!is_integer_literal(item) || item[0] == '-')
            throw parse_error("exponents must be nonnegative integers: '" + item + "'");
        unsigned long v = std::strtoul(item.c_str(), nullptr, 10);
        if (item.size() > 9) throw parse_error("exponent out of range");
        m.e.push_back(static_cast<std::uint32_t>(v));
    }
    return m;
}

} // namespace staudt
