#include "staudt/wso.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "staudt/errors.hpp"

namespace staudt::wso {

namespace {

// ---- lexing ----

struct Tok {
    enum class Type { ident, number, punct, end };
    Type type;
    std::string text;
    std::size_t pos;
};

bool is_reserved(const std::string& w) {
    return w == "forall" || w == "exists" || w == "not" || w == "and" || w == "or" ||
           w == "in" || w == "K" || w == "Set";
}

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c) || s[i] == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Type::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Type::number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::Type::punct, "->", i});
            i += 2;
            continue;
        }
        if (s[i] == '<') {
            if (s.compare(i, 3, "<->") == 0) {
                out.push_back({Tok::Type::punct, "<->", i});
                i += 3;
                continue;
            }
            throw parse_error("stray '<' at position " + std::to_string(i));
        }
        if (std::string("()+-*=:").find(s[i]) != std::string::npos) {
            out.push_back({Tok::Type::punct, std::string(1, s[i]), i});
            ++i;
            continue;
        }
        throw parse_error("unexpected character '" + std::string(1, s[i]) + "' at position " +
                          std::to_string(i));
    }
    out.push_back({Tok::Type::end, "", s.size()});
    return out;
}

// ---- parsing (sort-agnostic; quantifier annotations parked in var2) ----

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Formula parse() {
        Formula f = formula();
        if (toks_[pos_].type != Tok::Type::end) fail("trailing input");
        return f;
    }

private:
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;

    const Tok& peek() const { return toks_[pos_]; }
    bool is_punct(const std::string& p) const {
        return peek().type == Tok::Type::punct && peek().text == p;
    }
    bool is_kw(const std::string& k) const {
        return peek().type == Tok::Type::ident && peek().text == k;
    }
    void expect_punct(const std::string& p) {
        if (!is_punct(p)) fail("expected '" + p + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at position " + std::to_string(peek().pos));
    }

    static Formula node(Formula::Kind k, Formula a) {
        Formula f;
        f.kind = k;
        f.kids.push_back(std::move(a));
        return f;
    }
    static Formula node(Formula::Kind k, Formula a, Formula b) {
        Formula f = node(k, std::move(a));
        f.kids.push_back(std::move(b));
        return f;
    }
    static Term tnode(Term::Kind k, Term a) {
        Term t;
        t.kind = k;
        t.kids.push_back(std::move(a));
        return t;
    }
    static Term tnode(Term::Kind k, Term a, Term b) {
        Term t = tnode(k, std::move(a));
        t.kids.push_back(std::move(b));
        return t;
    }

    Formula formula() {
        Formula f = implication();
        while (is_punct("<->")) {
            ++pos_;
            f = node(Formula::Kind::iff, std::move(f), implication());
        }
        return f;
    }
    Formula implication() {
        Formula f = disjunction();
        if (is_punct("->")) {
            ++pos_;
            return node(Formula::Kind::implies, std::move(f), implication());
        }
        return f;
    }
    Formula disjunction() {
        Formula f = conjunction();
        while (is_kw("or")) {
            ++pos_;
            f = node(Formula::Kind::or_f, std::move(f), conjunction());
        }
        return f;
    }
    Formula conjunction() {
        Formula f = unary();
        while (is_kw("and")) {
            ++pos_;
            f = node(Formula::Kind::and_f, std::move(f), unary());
        }
        return f;
    }
    Formula unary() {
        if (is_kw("not")) {
            ++pos_;
            return node(Formula::Kind::not_f, unary());
        }
        if (is_kw("forall") || is_kw("exists")) return quantified();
        return atom();
    }
    Formula quantified() {
        bool universal = peek().text == "forall";
        ++pos_;
        if (peek().type != Tok::Type::ident || is_reserved(peek().text))
            fail("expected a variable name");
        std::string name = peek().text;
        ++pos_;
        std::string annotation;
        if (is_punct(":")) {
            ++pos_;
            if (!is_kw("K") && !is_kw("Set")) fail("expected sort K or Set");
            annotation = peek().text;
            ++pos_;
        }
        Formula f = node(universal ? Formula::Kind::forall_elem : Formula::Kind::exists_elem,
                         unary());
        f.var = std::move(name);
        f.var2 = std::move(annotation); // resolved and cleared later
        return f;
    }
    Formula atom() {
        if (is_punct("(")) {
            std::size_t save = pos_;
            try {
                ++pos_;
                Formula f = formula();
                expect_punct(")");
                return f;
            } catch (const parse_error&) {
                pos_ = save; // a parenthesized term, not a formula
            }
        }
        Term lhs = term();
        if (is_kw("in")) {
            ++pos_;
            if (peek().type != Tok::Type::ident || is_reserved(peek().text))
                fail("membership needs a set variable");
            Formula f;
            f.kind = Formula::Kind::member;
            f.terms.push_back(std::move(lhs));
            f.var = peek().text;
            ++pos_;
            return f;
        }
        if (is_punct("=")) {
            ++pos_;
            Formula f;
            f.kind = Formula::Kind::eq_elem; // may become eq_set after sorting
            f.terms.push_back(std::move(lhs));
            f.terms.push_back(term());
            return f;
        }
        fail("expected 'in' or '='");
    }
    Term term() {
        Term t = factor();
        while (is_punct("+") || is_punct("-")) {
            bool plus = peek().text == "+";
            ++pos_;
            t = tnode(plus ? Term::Kind::add : Term::Kind::sub, std::move(t), factor());
        }
        return t;
    }
    Term factor() {
        Term t = primary();
        while (is_punct("*")) {
            ++pos_;
            t = tnode(Term::Kind::mul, std::move(t), primary());
        }
        return t;
    }
    Term primary() {
        if (is_punct("-")) {
            ++pos_;
            return tnode(Term::Kind::neg, primary());
        }
        if (is_punct("(")) {
            ++pos_;
            Term t = term();
            expect_punct(")");
            return t;
        }
        if (peek().type == Tok::Type::number) {
            Term t;
            t.kind = Term::Kind::number;
            t.value = Integer(peek().text);
            ++pos_;
            return t;
        }
        if (peek().type == Tok::Type::ident && !is_reserved(peek().text)) {
            Term t;
            t.kind = Term::Kind::var;
            t.name = peek().text;
            ++pos_;
            return t;
        }
        fail("expected a term");
    }
};

// ---- sort resolution ----

bool term_mentions(const Term& t, const std::string& name) {
    if (t.kind == Term::Kind::var) return t.name == name;
    for (const auto& k : t.kids)
        if (term_mentions(k, name)) return true;
    return false;
}

bool is_quantifier(Formula::Kind k) {
    return k == Formula::Kind::forall_elem || k == Formula::Kind::exists_elem ||
           k == Formula::Kind::forall_set || k == Formula::Kind::exists_set;
}

enum class Seen { none, elem, set, both };

void merge_seen(Seen& s, Seen o) {
    if (o == Seen::none) return;
    if (s == Seen::none) {
        s = o;
    } else if (s != o) {
        s = Seen::both;
    }
}

// sort forced on `name` by its occurrences, honoring shadowing
Seen scan_constraints(const Formula& f, const std::string& name) {
    if (is_quantifier(f.kind)) {
        if (f.var == name) return Seen::none;
        return scan_constraints(f.kids[0], name);
    }
    Seen s = Seen::none;
    switch (f.kind) {
    case Formula::Kind::member:
        if (term_mentions(f.terms[0], name)) merge_seen(s, Seen::elem);
        if (f.var == name) merge_seen(s, Seen::set);
        return s;
    case Formula::Kind::eq_elem: {
        bool a_bare = f.terms[0].kind == Term::Kind::var;
        bool b_bare = f.terms[1].kind == Term::Kind::var;
        if (!a_bare && term_mentions(f.terms[0], name)) merge_seen(s, Seen::elem);
        if (!b_bare && term_mentions(f.terms[1], name)) merge_seen(s, Seen::elem);
        // a bare side next to a composite side is element-sorted
        if (a_bare && f.terms[0].name == name && !b_bare) merge_seen(s, Seen::elem);
        if (b_bare && f.terms[1].name == name && !a_bare) merge_seen(s, Seen::elem);
        return s;
    }
    case Formula::Kind::eq_set:
        if (f.var == name || f.var2 == name) merge_seen(s, Seen::set);
        return s;
    default:
        for (const auto& k : f.kids) merge_seen(s, scan_constraints(k, name));
        return s;
    }
}

Sort sort_by_case(const std::string& n) {
    return std::isupper(static_cast<unsigned char>(n[0])) ? Sort::set : Sort::element;
}

struct SortScope {
    std::vector<std::pair<std::string, Sort>> bound;
    std::map<std::string, Sort> free;

    std::optional<Sort> lookup(const std::string& n) const {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (it->first == n) return it->second;
        if (auto fit = free.find(n); fit != free.end()) return fit->second;
        return std::nullopt;
    }
    void bind_free(const std::string& n, Sort s) {
        auto [it, inserted] = free.emplace(n, s);
        if (!inserted && it->second != s)
            throw parse_error("variable '" + n + "' used at both sorts");
    }
};

void require_elem_term(const Term& t, SortScope& sc) {
    if (t.kind == Term::Kind::var) {
        if (auto s = sc.lookup(t.name)) {
            if (*s != Sort::element)
                throw parse_error("set variable '" + t.name + "' used in a field position");
        } else {
            sc.bind_free(t.name, Sort::element);
        }
    }
    for (const auto& k : t.kids) require_elem_term(k, sc);
}

void resolve_sorts(Formula& f, SortScope& sc) {
    if (is_quantifier(f.kind)) {
        Sort s;
        if (f.var2 == "K") {
            s = Sort::element;
        } else if (f.var2 == "Set") {
            s = Sort::set;
        } else {
            Seen seen = scan_constraints(f.kids[0], f.var);
            if (seen == Seen::both)
                throw parse_error("variable '" + f.var + "' used at both sorts");
            s = seen == Seen::set    ? Sort::set
                : seen == Seen::elem ? Sort::element
                                     : sort_by_case(f.var);
        }
        bool universal =
            f.kind == Formula::Kind::forall_elem || f.kind == Formula::Kind::forall_set;
        f.kind = universal ? (s == Sort::set ? Formula::Kind::forall_set
                                             : Formula::Kind::forall_elem)
                           : (s == Sort::set ? Formula::Kind::exists_set
                                             : Formula::Kind::exists_elem);
        f.var2.clear();
        sc.bound.emplace_back(f.var, s);
        resolve_sorts(f.kids[0], sc);
        sc.bound.pop_back();
        return;
    }
    switch (f.kind) {
    case Formula::Kind::member: {
        require_elem_term(f.terms[0], sc);
        if (auto s = sc.lookup(f.var)) {
            if (*s != Sort::set)
                throw parse_error("element variable '" + f.var + "' used as a set");
        } else {
            sc.bind_free(f.var, Sort::set);
        }
        return;
    }
    case Formula::Kind::eq_elem: {
        const Term& a = f.terms[0];
        const Term& b = f.terms[1];
        bool a_bare = a.kind == Term::Kind::var;
        bool b_bare = b.kind == Term::Kind::var;
        std::optional<Sort> sa =
            a_bare ? sc.lookup(a.name) : std::optional<Sort>(Sort::element);
        std::optional<Sort> sb =
            b_bare ? sc.lookup(b.name) : std::optional<Sort>(Sort::element);
        Sort decided;
        if (sa && sb) {
            if (*sa != *sb) throw parse_error("equality between different sorts");
            decided = *sa;
        } else if (sa || sb) {
            decided = sa ? *sa : *sb;
        } else {
            Sort ca = sort_by_case(a.name), cb = sort_by_case(b.name);
            if (ca != cb) throw parse_error("equality between different sorts");
            decided = ca;
        }
        if (decided == Sort::element) {
            require_elem_term(a, sc);
            require_elem_term(b, sc);
            return;
        }
        if (!a_bare || !b_bare) throw parse_error("sets cannot appear in arithmetic");
        if (!sa) sc.bind_free(a.name, Sort::set);
        if (!sb) sc.bind_free(b.name, Sort::set);
        f.kind = Formula::Kind::eq_set;
        f.var = a.name;
        f.var2 = b.name;
        f.terms.clear();
        return;
    }
    default:
        for (auto& k : f.kids) resolve_sorts(k, sc);
        return;
    }
}

void collect_term_vars(const Term& t, const std::vector<std::string>& bound,
                       std::map<std::string, Sort>& out) {
    if (t.kind == Term::Kind::var &&
        std::find(bound.begin(), bound.end(), t.name) == bound.end())
        out.emplace(t.name, Sort::element);
    for (const auto& k : t.kids) collect_term_vars(k, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::map<std::string, Sort>& out) {
    if (is_quantifier(f.kind)) {
        bound.push_back(f.var);
        collect_free(f.kids[0], bound, out);
        bound.pop_back();
        return;
    }
    switch (f.kind) {
    case Formula::Kind::member:
        collect_term_vars(f.terms[0], bound, out);
        if (std::find(bound.begin(), bound.end(), f.var) == bound.end())
            out.emplace(f.var, Sort::set);
        return;
    case Formula::Kind::eq_elem:
        collect_term_vars(f.terms[0], bound, out);
        collect_term_vars(f.terms[1], bound, out);
        return;
    case Formula::Kind::eq_set:
        for (const auto& n : {f.var, f.var2})
            if (std::find(bound.begin(), bound.end(), n) == bound.end())
                out.emplace(n, Sort::set);
        return;
    default:
        for (const auto& k : f.kids) collect_free(k, bound, out);
        return;
    }
}

// ---- evaluation ----

FieldElem elem_of_integer(const GroundField& k, const Integer& v) {
    if (k.is_rational()) return FieldElem::from_rational(Rational(v));
    Integer m = v % Integer(k.p);
    if (m < 0) m += Integer(k.p);
    return FieldElem::residue(k, m.convert_to<std::uint64_t>());
}

struct Evaluator {
    const Domain& dom;
    std::map<std::string, FieldElem> ev;
    std::map<std::string, std::uint32_t> sv;
    std::uint64_t elem_count = 0, set_count = 0;

    std::optional<std::size_t> index_of(const FieldElem& x) const {
        for (std::size_t i = 0; i < dom.elems.size(); ++i)
            if (dom.elems[i] == x) return i;
        return std::nullopt;
    }

    FieldElem term(const Term& t) {
        switch (t.kind) {
        case Term::Kind::number:
            return elem_of_integer(dom.field, t.value);
        case Term::Kind::var: {
            auto it = ev.find(t.name);
            if (it == ev.end())
                throw domain_error("unbound element variable '" + t.name + "'");
            return it->second;
        }
        case Term::Kind::add:
            return term(t.kids[0]) + term(t.kids[1]);
        case Term::Kind::sub:
            return term(t.kids[0]) - term(t.kids[1]);
        case Term::Kind::mul:
            return term(t.kids[0]) * term(t.kids[1]);
        case Term::Kind::neg:
            return -term(t.kids[0]);
        }
        throw std::logic_error("unreachable term kind");
    }

    std::uint32_t set_value(const std::string& name) const {
        auto it = sv.find(name);
        if (it == sv.end()) throw domain_error("unbound set variable '" + name + "'");
        return it->second;
    }

    bool eval(const Formula& f) {
        switch (f.kind) {
        case Formula::Kind::eq_elem:
            return term(f.terms[0]) == term(f.terms[1]);
        case Formula::Kind::eq_set:
            return set_value(f.var) == set_value(f.var2);
        case Formula::Kind::member: {
            FieldElem x = term(f.terms[0]);
            auto idx = index_of(x);
            if (!idx) return false;
            return (set_value(f.var) >> *idx) & 1u;
        }
        case Formula::Kind::not_f:
            return !eval(f.kids[0]);
        case Formula::Kind::and_f: {
            bool a = eval(f.kids[0]), b = eval(f.kids[1]);
            return a && b;
        }
        case Formula::Kind::or_f: {
            bool a = eval(f.kids[0]), b = eval(f.kids[1]);
            return a || b;
        }
        case Formula::Kind::implies: {
            bool a = eval(f.kids[0]), b = eval(f.kids[1]);
            return !a || b;
        }
        case Formula::Kind::iff: {
            bool a = eval(f.kids[0]), b = eval(f.kids[1]);
            return a == b;
        }
        case Formula::Kind::forall_elem:
        case Formula::Kind::exists_elem: {
            bool universal = f.kind == Formula::Kind::forall_elem;
            bool acc = universal;
            auto it = ev.find(f.var);
            std::optional<FieldElem> old;
            if (it != ev.end()) old = it->second;
            for (const auto& x : dom.elems) {
                ++elem_count;
                ev.insert_or_assign(f.var, x);
                bool r = eval(f.kids[0]);
                acc = universal ? (acc && r) : (acc || r);
            }
            if (old)
                ev.insert_or_assign(f.var, *old);
            else
                ev.erase(f.var);
            return acc;
        }
        case Formula::Kind::forall_set:
        case Formula::Kind::exists_set: {
            bool universal = f.kind == Formula::Kind::forall_set;
            bool acc = universal;
            auto it = sv.find(f.var);
            std::optional<std::uint32_t> old;
            if (it != sv.end()) old = it->second;
            for (std::uint32_t mask : dom.family) {
                ++set_count;
                sv.insert_or_assign(f.var, mask);
                bool r = eval(f.kids[0]);
                acc = universal ? (acc && r) : (acc || r);
            }
            if (old)
                sv.insert_or_assign(f.var, *old);
            else
                sv.erase(f.var);
            return acc;
        }
        }
        throw std::logic_error("unreachable formula kind");
    }
};

unsigned __int128 quantifier_cost(const Formula& f, const Domain& m) {
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
    unsigned __int128 cost = 1;
    auto walk = [&](const Formula& g, auto&& self) -> void {
        if (is_quantifier(g.kind)) {
            std::size_t range = (g.kind == Formula::Kind::forall_elem ||
                                 g.kind == Formula::Kind::exists_elem)
                                    ? m.elems.size()
                                    : m.family.size();
            if (range > 1 && cost < cap) cost *= range;
        }
        for (const auto& k : g.kids) self(k, self);
    };
    walk(f, walk);
    return cost;
}

} // namespace

Formula parse_formula(const std::string& text) {
    Parser p(text);
    Formula f = p.parse();
    SortScope sc;
    resolve_sorts(f, sc);
    return f;
}

std::vector<std::pair<std::string, Sort>> free_variables(const Formula& f) {
    std::vector<std::string> bound;
    std::map<std::string, Sort> out;
    collect_free(f, bound, out);
    return {out.begin(), out.end()};
}

FiniteStructure FiniteStructure::full(std::uint64_t p) {
    GroundField k = GroundField::prime(p);
    if (p > 13) throw domain_error("set sort is limited to p <= 13");
    std::vector<std::uint32_t> fam(std::size_t(1) << p);
    std::iota(fam.begin(), fam.end(), 0u);
    return {k, std::move(fam)};
}

FiniteStructure FiniteStructure::with_family(std::uint64_t p,
                                             std::vector<std::uint32_t> masks) {
    GroundField k = GroundField::prime(p);
    if (p > 13) throw domain_error("set sort is limited to p <= 13");
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (std::uint32_t m : masks)
        if (m >= (std::uint32_t(1) << p)) throw domain_error("mask outside the power set");
    return {k, std::move(masks)};
}

BoundedRationalStructure BoundedRationalStructure::over(std::vector<Rational> u) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.empty()) throw domain_error("universe is empty");
    if (u.size() > 20) throw domain_error("universe is limited to 20 elements");
    return {std::move(u)};
}

std::string Domain::describe() const {
    std::ostringstream os;
    if (field.is_rational()) {
        os << "U = {";
        for (std::size_t i = 0; i < elems.size(); ++i)
            os << (i ? ", " : "") << elems[i].str();
        os << "}";
    } else {
        os << field.describe();
    }
    os << ", " << family.size() << " subsets";
    return os.str();
}

Domain domain_of(const FiniteStructure& m) {
    Domain d;
    d.field = m.field;
    for (std::uint64_t r = 0; r < m.field.p; ++r)
        d.elems.push_back(FieldElem::residue(m.field, r));
    d.family = m.family;
    return d;
}

Domain domain_of(const BoundedRationalStructure& m) {
    Domain d;
    d.field = GroundField::rationals();
    for (const auto& r : m.universe) d.elems.push_back(FieldElem::from_rational(r));
    d.family.resize(std::size_t(1) << m.universe.size());
    std::iota(d.family.begin(), d.family.end(), 0u);
    return d;
}

EvalResult evaluate(const Formula& f, const Domain& m, const Valuation& val,
                    std::uint64_t budget) {
    unsigned __int128 cost = quantifier_cost(f, m);
    if (cost > budget)
        throw resource_limit_error("evaluation cost bound exceeds the budget of " +
                                   std::to_string(budget));
    Evaluator e{m, val.elem_vars, val.set_vars};
    bool truth = e.eval(f);
    return {truth, e.elem_count, e.set_count};
}

AxiomReport check_fin_axioms(const FiniteStructure& m, const std::vector<Formula>& induction) {
    Domain dom = domain_of(m);
    std::size_t n = dom.elems.size();
    std::vector<bool> present(std::size_t(1) << n, false);
    for (std::uint32_t mask : m.family) present[mask] = true;

    AxiomReport rep;
    rep.all_passed = true;
    auto add = [&](std::string clause, bool ok, std::string detail) {
        rep.all_passed = rep.all_passed && ok;
        rep.checks.push_back({std::move(clause), ok, std::move(detail)});
    };

    // extensionality: distinct members never share an extension; immediate in
    // the mask representation, still verified by exhaustion
    {
        bool ok = true;
        std::string det;
        for (std::size_t i = 0; i < m.family.size() && ok; ++i)
            for (std::size_t j = i + 1; j < m.family.size() && ok; ++j)
                if (m.family[i] == m.family[j]) {
                    ok = false;
                    det = "duplicate member " + set_str(m.family[i], dom);
                }
        add("extensionality", ok, det);
    }
    add("empty set", present[0], present[0] ? "" : "empty set missing from the family");
    {
        bool ok = true;
        std::string det;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (!present[std::size_t(1) << i]) {
                ok = false;
                det = "singleton " + set_str(std::uint32_t(1) << i, dom) + " missing";
            }
        add("singletons", ok, det);
    }
    {
        bool ok = true;
        std::string det;
        for (std::size_t i = 0; i < m.family.size() && ok; ++i)
            for (std::size_t j = i; j < m.family.size() && ok; ++j) {
                std::uint32_t u = m.family[i] | m.family[j];
                if (!present[u]) {
                    ok = false;
                    det = set_str(m.family[i], dom) + " union " + set_str(m.family[j], dom) +
                          " missing";
                }
            }
        add("binary unions", ok, det);
    }
    for (std::size_t idx = 0; idx < induction.size(); ++idx) {
        const Formula& phi = induction[idx];
        auto fv = free_variables(phi);
        if (fv.size() != 1 || fv[0].second != Sort::set)
            throw domain_error("induction instance needs exactly one free set variable");
        const std::string& name = fv[0].first;

        std::vector<bool> in_class(std::size_t(1) << n, false);
        std::size_t count = 0;
        for (std::uint32_t mask : m.family) {
            Valuation v;
            v.set_vars[name] = mask;
            if (evaluate(phi, dom, v).truth) {
                in_class[mask] = true;
                ++count;
            }
        }
        bool premise = in_class[0];
        for (std::uint32_t mask : m.family) {
            if (!premise) break;
            if (!in_class[mask]) continue;
            for (std::size_t i = 0; i < n && premise; ++i) {
                std::uint32_t adj = mask | (std::uint32_t(1) << i);
                premise = present[adj] && in_class[adj];
            }
        }
        bool ok = !premise || count == m.family.size();
        std::string det;
        if (!ok)
            for (std::uint32_t mask : m.family)
                if (!in_class[mask]) {
                    det = "defined class omits " + set_str(mask, dom);
                    break;
                }
        add("set induction #" + std::to_string(idx + 1), ok, det);
    }
    return rep;
}

std::optional<std::uint32_t> find_minimal_set(const Formula& phi, const FiniteStructure& m) {
    Domain dom = domain_of(m);
    auto fv = free_variables(phi);
    if (fv.size() != 1 || fv[0].second != Sort::set)
        throw domain_error("family predicate needs exactly one free set variable");
    const std::string& name = fv[0].first;

    std::vector<std::uint32_t> members;
    for (std::uint32_t mask : m.family) {
        Valuation v;
        v.set_vars[name] = mask;
        if (evaluate(phi, dom, v).truth) members.push_back(mask);
    }
    if (members.empty()) return std::nullopt;
    std::uint32_t best = members[0];
    for (std::uint32_t mask : members) {
        int pm = std::popcount(mask), pb = std::popcount(best);
        if (pm < pb || (pm == pb && mask < best)) best = mask;
    }
    for (std::uint32_t mask : members)
        if (mask != best && (mask & best) == mask)
            throw std::logic_error("minimality certification failed");
    return best;
}

std::vector<FieldElem> compute_K0(const Domain& m, std::uint64_t budget) {
    std::size_t n = m.elems.size();
    unsigned __int128 cost = static_cast<unsigned __int128>(n) * m.family.size() * (n + 1);
    if (cost > budget)
        throw resource_limit_error("witness search exceeds the budget of " +
                                   std::to_string(budget));

    std::vector<int> succ(n, -1);
    int zero_idx = -1;
    FieldElem one = FieldElem::one(m.field);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.elems[i].is_zero()) zero_idx = static_cast<int>(i);
        FieldElem next = m.elems[i] + one;
        for (std::size_t j = 0; j < n; ++j)
            if (m.elems[j] == next) succ[i] = static_cast<int>(j);
    }
    std::vector<FieldElem> out;
    if (zero_idx < 0) return out;
    for (std::size_t xi = 0; xi < n; ++xi) {
        bool found = false;
        for (std::uint32_t mask : m.family) {
            if (!((mask >> zero_idx) & 1u) || !((mask >> xi) & 1u)) continue;
            bool ok = true;
            for (std::size_t z = 0; z < n && ok; ++z) {
                if (!((mask >> z) & 1u) || z == xi) continue;
                ok = succ[z] >= 0 && ((mask >> succ[z]) & 1u);
            }
            if (ok) {
                found = true;
                break;
            }
        }
        if (found) out.push_back(m.elems[xi]);
    }
    return out;
}

std::string set_str(std::uint32_t mask, const Domain& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::size_t i = 0; i < m.elems.size(); ++i)
        if ((mask >> i) & 1u) {
            os << (first ? "" : ", ") << m.elems[i].str();
            first = false;
        }
    os << "}";
    return os.str();
}

} // namespace staudt::wso
