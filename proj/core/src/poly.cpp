#include "staudt/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace staudt {

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_constant() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) throw domain_error("monomial arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (e.size() != m.e.size()) throw domain_error("monomial arity mismatch");
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + m.e[i];
    return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
    if (!m.divides(*this)) throw domain_error("monomial quotient does not exist");
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - m.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw domain_error("monomial arity mismatch");
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw domain_error("monomial arity mismatch");
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(GroundField f, std::uint32_t nvars, const FieldElem& c) {
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(GroundField f, std::uint32_t nvars, std::uint32_t i, std::uint32_t power) {
    if (i >= nvars) throw domain_error("variable index out of range");
    Monomial m(nvars);
    m.e[i] = power;
    MultiPoly p(f, nvars);
    p.terms_.emplace(std::move(m), FieldElem::one(f));
    return p;
}

MultiPoly MultiPoly::term(GroundField f, Monomial m, const FieldElem& c) {
    MultiPoly p(f, static_cast<std::uint32_t>(m.arity()));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const FieldElem& c) {
    if (m.arity() != nvars_) throw domain_error("monomial arity mismatch");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, c);
}

void MultiPoly::add_term(const Monomial& m, const FieldElem& c) {
    if (m.arity() != nvars_) throw domain_error("monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::uint64_t> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<std::uint64_t> MultiPoly::homogeneous_degree() const {
    if (terms_.empty())
        throw domain_error("the zero polynomial has no homogeneous degree");
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return homogeneous_degree().has_value();
}

std::uint32_t MultiPoly::degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e.at(var));
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw domain_error("leading monomial of the zero polynomial");
    return terms_.rbegin()->first;
}

const FieldElem& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (field_ != o.field_)
        throw domain_error("polynomial arithmetic across ground fields (" + field_.describe() +
                           " vs " + o.field_.describe() + ")");
    if (nvars_ != o.nvars_)
        throw domain_error("polynomial arithmetic across arities");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
    if (c.is_zero()) return MultiPoly(field_, nvars_);
    MultiPoly r(field_, nvars_);
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MultiPoly MultiPoly::monic() const {
    return scaled(leading_coeff().inverse());
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const FieldElem& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

FieldElem MultiPoly::eval(const std::vector<FieldElem>& args) const {
    if (args.size() != nvars_) throw domain_error("evaluation argument count mismatch");
    for (const auto& a : args)
        if (a.field() != field_) throw domain_error("evaluation argument from a different ground field");
    FieldElem acc = FieldElem::zero(field_);
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= args[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
    if (args.size() != nvars_) throw domain_error("composition argument count mismatch");
    if (args.empty()) throw domain_error("composition requires at least one variable");
    GroundField f = args[0].field();
    std::uint32_t arity = args[0].nvars();
    for (const auto& a : args) {
        if (a.field() != f || a.nvars() != arity)
            throw domain_error("composition arguments disagree in field or arity");
    }
    if (f != field_) throw domain_error("composition across ground fields");
    MultiPoly acc = MultiPoly::zero(f, arity);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(f, arity, c);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= args[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::uint32_t var) const {
    if (var >= nvars_) throw domain_error("variable index out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial mm = m;
        std::uint32_t k = mm.e[var];
        mm.e[var] -= 1;
        r.add_term(mm, c * FieldElem::from_int(field_, static_cast<long long>(k)));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw domain_error("division by the zero polynomial");
    MultiPoly rem = *this;
    MultiPoly q(field_, nvars_);
    const Monomial& dlm = d.leading_monomial();
    const FieldElem& dlc = d.leading_coeff();
    while (!rem.is_zero()) {
        const Monomial& rlm = rem.leading_monomial();
        if (!dlm.divides(rlm)) return std::nullopt;
        Monomial qm = rlm.quotient(dlm);
        FieldElem qc = rem.leading_coeff() / dlc;
        q.add_term(qm, qc);
        rem -= d.times_monomial(qm, qc);
    }
    return q;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::uint32_t var) const {
    if (var >= nvars_) throw domain_error("variable index out of range");
    std::uint32_t d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(field_, nvars_));
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        std::uint32_t k = mm.e[var];
        mm.e[var] = 0;
        out[k].add_term(mm, c);
    }
    if (is_zero()) out.assign(1, MultiPoly(field_, nvars_));
    return out;
}

std::vector<std::string> default_var_names(std::uint32_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    if (names.size() != nvars_) throw domain_error("variable name count mismatch");
    std::ostringstream out;
    bool first = true;
    // descending lex: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        std::ostringstream mono;
        bool any_var = false;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << names[i];
            if (m.e[i] > 1) mono << "^" << m.e[i];
            any_var = true;
        }
        if (!any_var) {
            out << cs;
        } else if (cs == "1") {
            out << mono.str();
        } else {
            out << cs << "*" << mono.str();
        }
        first = false;
    }
    return out.str();
}

namespace {

// Bareiss fraction-free determinant over the polynomial ring; every division
// is exact by construction.
MultiPoly poly_matrix_det(std::vector<std::vector<MultiPoly>> m, GroundField f, std::uint32_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(f, nvars, FieldElem::one(f));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(f, nvars, FieldElem::one(f));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly::zero(f, nvars);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (num.is_zero()) {
                    m[i][j] = MultiPoly::zero(f, nvars);
                    continue;
                }
                auto q = num.divided_exactly_by(prev);
                if (!q) throw domain_error("internal: Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly::zero(f, nvars);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::uint32_t var) {
    if (p.field() != q.field() || p.nvars() != q.nvars())
        throw domain_error("resultant inputs disagree in field or arity");
    const std::uint32_t dp = p.degree_in(var);
    const std::uint32_t dq = q.degree_in(var);
    if (dp == 0 || dq == 0)
        throw domain_error("resultant requires positive degree in the eliminated variable");
    auto a = p.coefficients_in(var);
    auto b = q.coefficients_in(var);
    const std::size_t n = static_cast<std::size_t>(dp) + dq;
    GroundField f = p.field();
    std::vector<std::vector<MultiPoly>> syl(n, std::vector<MultiPoly>(n, MultiPoly::zero(f, p.nvars())));
    // dq rows of p's coefficients, then dp rows of q's, highest power first
    for (std::uint32_t r = 0; r < dq; ++r)
        for (std::uint32_t k = 0; k <= dp; ++k) syl[r][r + k] = a[dp - k];
    for (std::uint32_t r = 0; r < dp; ++r)
        for (std::uint32_t k = 0; k <= dq; ++k) syl[dq + r][r + k] = b[dq - k];
    return poly_matrix_det(std::move(syl), f, p.nvars());
}

std::vector<Monomial> homogeneous_monomials(std::uint32_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    // descending lex via recursive enumeration, first variable exponent high to low
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t pos, std::uint32_t rem) {
        if (pos + 1 == nvars) {
            cur.e[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (std::int64_t k = rem; k >= 0; --k) {
            cur.e[pos] = static_cast<std::uint32_t>(k);
            rec(pos + 1, rem - static_cast<std::uint32_t>(k));
        }
    };
    if (nvars == 0) throw domain_error("monomial enumeration requires at least one variable");
    rec(0, d);
    return out;
}

std::vector<Monomial> monomials_up_to(std::uint32_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::int64_t k = d; k >= 0; --k) {
        auto level = homogeneous_monomials(nvars, static_cast<std::uint32_t>(k));
        out.insert(out.end(), level.begin(), level.end());
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return lex_less(b, a); });
    return out;
}

} // namespace staudt
