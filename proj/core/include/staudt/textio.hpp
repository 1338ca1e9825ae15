#pragma once

#include <string>
#include <vector>

#include "staudt/field.hpp"
#include "staudt/plane.hpp"
#include "staudt/poly.hpp"

namespace staudt {

// Expression parser for polynomials: +, -, *, ^, parentheses, integer and
// a/b constants, and exactly the variable names passed in. Division is
// allowed by nonzero constants only. Throws parse_error on bad text.
MultiPoly parse_poly(const std::string& text, const GroundField& k,
                     const std::vector<std::string>& vars);

// Constant expression, e.g. "-3/4" or "(2+3)^2".
FieldElem parse_scalar(const std::string& text, const GroundField& k);

Rational parse_rational(const std::string& text);

// "[a:b:c]" with scalar entries.
ProjPoint parse_point(const std::string& text, const GroundField& k);

// "<a:b:c>" or "[a:b:c]" with scalar entries.
ProjLine parse_line(const std::string& text, const GroundField& k);

// "{1, 3/2, -2..3}" -> sorted distinct rationals; integer ranges a..b are
// inclusive.
std::vector<Rational> parse_rational_set(const std::string& text);

// "(2,0,3)" -> exponent vector.
Monomial parse_exponent_vector(const std::string& text);

} // namespace staudt
