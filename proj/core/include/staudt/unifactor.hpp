#pragma once

#include <cstdint>
#include <vector>

#include "staudt/field.hpp"

namespace staudt {

// Dense univariate polynomials over Q, coefficient of t^i at index i, always
// trimmed (no trailing zero). Support code for the curve algebra: resultant
// root structure, conjugate-bundle tagging, divisor factorizations.
using QPoly = std::vector<Rational>;

namespace uni {

QPoly trim(QPoly p);
int deg(const QPoly& p); // -1 for zero
bool is_zero(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
// quotient/remainder over Q; divisor nonzero
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
bool divides(const QPoly& d, const QPoly& a);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b); // monic, gcd(0,0)=0
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
QPoly pow(const QPoly& a, std::uint32_t n);
std::string str(const QPoly& a, const std::string& var = "t");

} // namespace uni

struct QFactor {
    QPoly poly; // monic irreducible over Q
    std::uint32_t multiplicity;
};

struct QFactorization {
    Rational unit; // input = unit * prod(poly^multiplicity)
    std::vector<QFactor> factors; // sorted by (degree, coefficient sequence)
};

// Complete factorization into irreducibles over Q: Yun squarefree split,
// Berlekamp modulo a good small prime, quadratic Hensel lifting past the
// Landau-Mignotte bound, subset recombination. Input nonzero.
QFactorization factor_rational_poly(const QPoly& f);

// Squarefree part f / gcd(f, f').
QPoly squarefree_part(const QPoly& f);

// Roots in Q with multiplicities, via the linear factors.
std::vector<std::pair<Rational, std::uint32_t>> rational_roots(const QPoly& f);

} // namespace staudt
