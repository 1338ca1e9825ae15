#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "staudt/plane.hpp"
#include "staudt/unifactor.hpp"

namespace staudt {

// Galois orbit of plane points kept unsplit: the points [c0(t):c1(t):c2(t)]
// as t runs over the roots of one monic irreducible polynomial over Q. The
// first coordinate that is a unit mod min_poly is normalized to the constant 1,
// so orbits produced by one computation compare reliably.
struct ConjugateBundle {
    QPoly min_poly;              // monic irreducible, degree >= 2
    std::array<QPoly, 3> coords; // each reduced mod min_poly

    std::uint64_t size() const { return static_cast<std::uint64_t>(uni::deg(min_poly)); }
    bool operator==(const ConjugateBundle& o) const;
    bool operator<(const ConjugateBundle& o) const; // (degree, min_poly, coords)
    std::string str() const;
};

// A rational point or a conjugate orbit.
using PointLocus = std::variant<ProjPoint, ConjugateBundle>;

bool locus_equal(const PointLocus& a, const PointLocus& b);
bool locus_less(const PointLocus& a, const PointLocus& b); // rational points first
std::uint64_t locus_size(const PointLocus& l);             // 1, or the orbit size
std::string locus_str(const PointLocus& l);

struct IntersectionEntry {
    PointLocus locus;
    std::uint64_t multiplicity;
};

// C intersect D over the algebraic closure. Entries are in canonical order
// and sum of multiplicity * orbit size equals deg C * deg D.
struct IntersectionRecord {
    std::vector<IntersectionEntry> entries;
    std::uint64_t total = 0;

    std::string str() const;
};

// All intersection points of two curves without a common component, with
// Bezout multiplicities. Multiplicities are read off resultant root orders
// after moving the projection center to a point that lies on neither curve
// and on no chord of the intersection set; centers are drawn from the
// canonical plane enumeration until those conditions verify. Rational field
// only. Throws domain_error on a common component.
IntersectionRecord intersect_curves(const Curve& c, const Curve& d);

// The line sum_i dF/dx_i(P) x_i = 0. P must be a smooth point of C; the line
// always passes through P and meets C there with multiplicity at least 2.
Curve tangent_line(const Curve& c, const ProjPoint& p);

// A curve D with C intersect D = {P} exactly: for a line, the first other
// line through P; for a smooth conic, the tangent at P. Degree >= 3 is
// rejected (no bounded construction exists there). The result is re-verified
// before it is returned.
Curve prefactorial_witness(const Curve& c, const ProjPoint& p);

// Rational parametrization phi : P^1 -> C of a smooth conic through a given
// rational point, by the pencil of lines through that point. The three
// component forms are homogeneous quadratics in (s, u), and phi(base_param)
// equals base.
struct ConicParam {
    MultiPoly conic;                     // defining equation, 3 variables
    ProjPoint base;                      // the designated rational point
    std::array<MultiPoly, 3> map;        // quadratics in (s, u)
    std::array<FieldElem, 2> base_param; // phi(base_param) = base

    std::string str() const;
};

ConicParam parametrize_conic(const Curve& c, const ProjPoint& p0);

struct DivisorTerm {
    PointLocus locus;
    long long coeff; // nonzero
};

// Formal integer combination of point loci, kept sorted with nonzero
// coefficients. degree() weights each orbit by its size and is 0 for every
// divisor of a rational function.
class Divisor {
public:
    Divisor() = default;

    void add(const PointLocus& l, long long c);

    const std::vector<DivisorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long degree() const;

    Divisor operator-() const;
    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<DivisorTerm> terms_;
};

// Divisor of the rational function F/G restricted to a line or to a
// parametrized smooth conic: zeros of the pullback minus poles, grouped into
// rational parameter values and conjugate orbits. Unequal degrees are
// balanced by raising F and G to the complementary powers; a constant next to
// a nonconstant cannot be balanced and is rejected. F and G must not vanish
// on the curve. The result always has degree 0.
Divisor divisor_of_function(const Curve& line, const MultiPoly& num, const MultiPoly& den);
Divisor divisor_of_function(const Curve& conic, const ConicParam& param, const MultiPoly& num,
                            const MultiPoly& den);

// Verifies div(F1^d2 / F2^d1) = deg(C) d1 d2 (P1 - P2) on a smooth conic,
// where each Fi meets C exactly at Pi (checked via intersect_curves first).
bool check_torsion_divisor(const Curve& conic, const ProjPoint& p1, const ProjPoint& p2,
                           const Curve& f1, const Curve& f2);

// (d - 1)(d - 2) / 2 for d >= 1.
std::uint64_t genus_of_degree(std::uint64_t d);

} // namespace staudt
