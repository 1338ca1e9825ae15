#pragma once

#include <vector>

#include "staudt/poly.hpp"

namespace staudt {

// Componentwise dominance order on exponent vectors and the finite minimal
// basis every subset of N^k admits under it. Monomial divisibility is the
// same relation read multiplicatively, which is how the ideal engine uses it.

// u dominates v: v <= u in every component. Equivalently v divides u as a monomial.
bool dominates(const Monomial& u, const Monomial& v);

// Minimal elements of the input under dominance, deduplicated, sorted
// ascending lex. The empty set has the empty basis.
std::vector<Monomial> dickson_basis(std::vector<Monomial> elems);

// The only monomial order required anywhere: lex with x0 > x1 > ... .
// The struct exists so order-sensitive operations name their order explicitly.
struct MonomialOrder {
    enum class Kind { lex } kind = Kind::lex;

    bool less(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
    const char* name() const { return "lex"; }
};

// Largest monomial of p under the order; domain_error on the zero polynomial.
Monomial initial_monomial(const MultiPoly& p, const MonomialOrder& order = {});

} // namespace staudt
