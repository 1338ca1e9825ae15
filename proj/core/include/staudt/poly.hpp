#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "staudt/field.hpp"

namespace staudt {

// Exponent vector. Doubles as the element type of the componentwise-dominance
// poset; divisibility of monomials is exactly dominance of exponent vectors.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t arity() const { return e.size(); }
    std::uint64_t degree() const;
    bool is_constant() const;

    bool divides(const Monomial& m) const; // componentwise <=
    Monomial operator*(const Monomial& m) const;
    Monomial quotient(const Monomial& m) const; // *this / m, requires m.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Lexicographic order with x0 > x1 > ... (the only monomial order in play).
bool lex_less(const Monomial& a, const Monomial& b);

struct MonLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};

// Sparse multivariate polynomial over one ground field. The term map holds
// nonzero coefficients only and iterates in ascending lex order, so every
// traversal in the library is deterministic.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, FieldElem, MonLexLess>;

    MultiPoly(GroundField f, std::uint32_t nvars) : field_(f), nvars_(nvars) {}

    static MultiPoly zero(GroundField f, std::uint32_t nvars) { return MultiPoly(f, nvars); }
    static MultiPoly constant(GroundField f, std::uint32_t nvars, const FieldElem& c);
    static MultiPoly variable(GroundField f, std::uint32_t nvars, std::uint32_t i, std::uint32_t power = 1);
    static MultiPoly term(GroundField f, Monomial m, const FieldElem& c);

    const GroundField& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    FieldElem coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const FieldElem& c);
    void add_term(const Monomial& m, const FieldElem& c);

    // nullopt for the zero polynomial: degree is undefined there by fiat.
    std::optional<std::uint64_t> total_degree() const;
    // degree when homogeneous, nullopt when inhomogeneous; throws on zero.
    std::optional<std::uint64_t> homogeneous_degree() const;
    bool is_homogeneous() const;

    std::uint32_t degree_in(std::uint32_t var) const;

    // leading data under lex; domain_error on the zero polynomial
    const Monomial& leading_monomial() const;
    const FieldElem& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const FieldElem& c) const;
    MultiPoly monic() const; // leading coefficient 1; domain_error on zero
    MultiPoly times_monomial(const Monomial& m, const FieldElem& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Evaluation is the ring homomorphism sending variable i to args[i].
    FieldElem eval(const std::vector<FieldElem>& args) const;
    // Substitute polynomials for variables (composition); args[i] all share
    // one arity/field, which becomes the arity/field of the result.
    MultiPoly compose(const std::vector<MultiPoly>& args) const;

    MultiPoly derivative(std::uint32_t var) const;

    // Exact division test: q with *this == q * d, nullopt when no such q exists.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

    // Reads the polynomial as univariate in `var` with coefficients in the
    // remaining variables; index = power of var, `var`-exponent zeroed.
    std::vector<MultiPoly> coefficients_in(std::uint32_t var) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    GroundField field_;
    std::uint32_t nvars_;
    TermMap terms_;

    void check_compatible(const MultiPoly& o) const;
};

// Resultant of p and q with respect to `var`: fraction-free (Bareiss)
// elimination on the Sylvester matrix over the remaining-variable ring.
// Both inputs need positive degree in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::uint32_t var);

std::vector<std::string> default_var_names(std::uint32_t nvars);

// All monomials in `nvars` variables of total degree exactly d, descending lex.
std::vector<Monomial> homogeneous_monomials(std::uint32_t nvars, std::uint32_t d);
// All monomials of total degree <= d, descending lex.
std::vector<Monomial> monomials_up_to(std::uint32_t nvars, std::uint32_t d);

} // namespace staudt
