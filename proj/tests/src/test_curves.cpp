#include <doctest.h>

#include <algorithm>
#include <random>

#include "staudt/curves.hpp"
#include "staudt/errors.hpp"
#include "staudt/textio.hpp"

using namespace staudt;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const GroundField Q = GroundField::rationals();

Curve crv(const std::string& s, bool check = true) { return Curve(parse_poly(s, Q, XYZ), check); }

ProjPoint pt(long long a, long long b, long long c) { return ProjPoint::of_ints(Q, a, b, c); }

// reduce a parameter polynomial mod the bundle's minimal polynomial
QPoly reduce_mod(const QPoly& a, const QPoly& m) { return uni::divmod(a, m).second; }

// evaluate a plane polynomial at the bundle's coordinate triple, mod min_poly
QPoly eval_on_bundle(const MultiPoly& f, const ConjugateBundle& b) {
    QPoly acc;
    for (const auto& [mono, coeff] : f.terms()) {
        QPoly term{coeff.rat()};
        for (std::size_t v = 0; v < 3; ++v)
            for (std::uint32_t e = 0; e < mono.e[v]; ++e)
                term = reduce_mod(uni::mul(term, b.coords[v]), b.min_poly);
        acc = uni::add(acc, term);
    }
    return uni::trim(acc);
}

const IntersectionEntry* find_rational(const IntersectionRecord& rec, const ProjPoint& p) {
    for (const auto& e : rec.entries)
        if (std::holds_alternative<ProjPoint>(e.locus) && std::get<ProjPoint>(e.locus) == p)
            return &e;
    return nullptr;
}

} // namespace

TEST_CASE("a conic meets a line in two rational points") {
    IntersectionRecord rec = intersect_curves(crv("x*z - y^2"), crv("x - y"));
    CHECK(rec.total == 2);
    REQUIRE(rec.entries.size() == 2);
    CHECK(find_rational(rec, pt(0, 0, 1)) != nullptr);
    CHECK(find_rational(rec, pt(1, 1, 1)) != nullptr);
    for (const auto& e : rec.entries) CHECK(e.multiplicity == 1);
}

TEST_CASE("tangency shows up as multiplicity two") {
    Curve conic = crv("x*z - y^2");
    ProjPoint p = pt(1, 1, 1);
    Curve tan = tangent_line(conic, p);
    CHECK(tan.contains(p));
    IntersectionRecord rec = intersect_curves(conic, tan);
    CHECK(rec.total == 2);
    REQUIRE(rec.entries.size() == 1);
    const IntersectionEntry* e = find_rational(rec, p);
    REQUIRE(e != nullptr);
    CHECK(e->multiplicity == 2);
}

TEST_CASE("conjugate intersections stay bundled") {
    // x^2 + y^2 = 1 meets x = 2y in the orbit of ((2t, t, 1)) with 5t^2 = 1
    IntersectionRecord rec = intersect_curves(crv("x^2 + y^2 - z^2"), crv("x - 2*y"));
    CHECK(rec.total == 2);
    REQUIRE(rec.entries.size() == 1);
    REQUIRE(std::holds_alternative<ConjugateBundle>(rec.entries[0].locus));
    const auto& b = std::get<ConjugateBundle>(rec.entries[0].locus);
    CHECK(b.size() == 2);
    CHECK(rec.entries[0].multiplicity == 1);
    // the orbit lies on both curves
    CHECK(eval_on_bundle(parse_poly("x^2 + y^2 - z^2", Q, XYZ), b).empty());
    CHECK(eval_on_bundle(parse_poly("x - 2*y", Q, XYZ), b).empty());
}

TEST_CASE("two conics meet in four counted points") {
    Curve a = crv("x*z - y^2");
    Curve b = crv("x^2 + y^2 - z^2");
    IntersectionRecord rec = intersect_curves(a, b);
    CHECK(rec.total == 4);
    std::uint64_t weighted = 0;
    for (const auto& e : rec.entries) {
        weighted += e.multiplicity * locus_size(e.locus);
        if (std::holds_alternative<ConjugateBundle>(e.locus)) {
            const auto& bun = std::get<ConjugateBundle>(e.locus);
            CHECK(eval_on_bundle(a.poly(), bun).empty());
            CHECK(eval_on_bundle(b.poly(), bun).empty());
        } else {
            const auto& p = std::get<ProjPoint>(e.locus);
            CHECK(a.contains(p));
            CHECK(b.contains(p));
        }
    }
    CHECK(weighted == 4);
}

TEST_CASE("intersection totals respect the degree product") {
    std::vector<Curve> lines;
    for (const char* s : {"x", "y - z", "x + y + z", "x - 2*y + z", "2*x + y - 3*z", "y + 2*z"})
        lines.push_back(crv(s));
    std::vector<Curve> pool{crv("x*z - y^2"), crv("x^2 + y^2 - z^2"),
                            crv("y^2*z - x^3 + x*z^2", false)};
    for (const auto& c : pool)
        for (const auto& l : lines) {
            IntersectionRecord rec = intersect_curves(c, l);
            CHECK(rec.total == c.degree());
            std::uint64_t weighted = 0;
            for (const auto& e : rec.entries) weighted += e.multiplicity * locus_size(e.locus);
            CHECK(weighted == rec.total);
        }
}

TEST_CASE("common components are refused") {
    CHECK_THROWS_WITH_AS(intersect_curves(crv("x*y", false), crv("y*z", false)),
                         "curves share a common component", domain_error);
    CHECK_THROWS_AS(intersect_curves(crv("x*z - y^2"), crv("x*z - y^2")), domain_error);
}

TEST_CASE("tangent lines touch and stay") {
    Curve cubic = crv("y^2*z - x^3 + x*z^2", false);
    ProjPoint p = pt(0, 0, 1); // on the cubic: 0 - 0 + 0
    REQUIRE(cubic.contains(p));
    Curve tan = tangent_line(cubic, p);
    CHECK(tan.contains(p));
    IntersectionRecord rec = intersect_curves(cubic, tan);
    const IntersectionEntry* e = find_rational(rec, p);
    REQUIRE(e != nullptr);
    CHECK(e->multiplicity >= 2);

    CHECK_THROWS_AS(tangent_line(cubic, pt(1, 1, 1)), domain_error); // off the curve
    Curve node = crv("y^2*z - x^3 - x^2*z", false);
    CHECK_THROWS_AS(tangent_line(node, pt(0, 0, 1)), domain_error); // singular point
}

TEST_CASE("prefactorial witnesses cut out one point") {
    // on a line: some other line through the point
    Curve line = crv("x - y");
    ProjPoint p = pt(1, 1, 1);
    Curve w = prefactorial_witness(line, p);
    IntersectionRecord rec = intersect_curves(line, w);
    CHECK(rec.total == 1);
    REQUIRE(rec.entries.size() == 1);
    CHECK(find_rational(rec, p) != nullptr);

    // on a smooth conic: the tangent
    Curve conic = crv("x*z - y^2");
    ProjPoint q = pt(1, 1, 1);
    Curve wt = prefactorial_witness(conic, q);
    IntersectionRecord rec2 = intersect_curves(conic, wt);
    REQUIRE(rec2.entries.size() == 1);
    CHECK(find_rational(rec2, q) != nullptr);
    CHECK(rec2.entries[0].multiplicity == 2);

    CHECK_THROWS_AS(prefactorial_witness(line, pt(1, 2, 3)), domain_error); // off the curve
    Curve cubic = crv("y^2*z - x^3 + x*z^2", false);
    CHECK_THROWS_AS(prefactorial_witness(cubic, pt(0, 0, 1)), domain_error); // degree 3
}

TEST_CASE("conic parametrization hits the curve and its base point") {
    Curve conic = crv("x*z - y^2");
    ProjPoint base = pt(0, 0, 1);
    ConicParam par = parametrize_conic(conic, base);
    CHECK(par.base == base);

    // composing the map with the conic gives the zero form in (s, u)
    std::vector<std::string> su{"s", "u"};
    MultiPoly pullback = MultiPoly::zero(Q, 2);
    for (const auto& [mono, coeff] : conic.poly().terms()) {
        MultiPoly term = MultiPoly::constant(Q, 2, coeff);
        for (std::size_t v = 0; v < 3; ++v)
            for (std::uint32_t e = 0; e < mono.e[v]; ++e) term = term * par.map[v];
        pullback += term;
    }
    CHECK(pullback.is_zero());

    // the base parameter maps to the base point
    std::vector<FieldElem> at{par.base_param[0], par.base_param[1]};
    std::array<FieldElem, 3> img{par.map[0].eval(at), par.map[1].eval(at), par.map[2].eval(at)};
    CHECK(ProjPoint(img[0], img[1], img[2]) == base);

    // distinct parameters map to distinct points (sampled)
    std::vector<ProjPoint> images;
    for (long long t = -3; t <= 3; ++t) {
        std::vector<FieldElem> param{FieldElem::from_int(Q, t), FieldElem::one(Q)};
        ProjPoint ip(par.map[0].eval(param), par.map[1].eval(param), par.map[2].eval(param));
        CHECK(conic.contains(ip));
        images.push_back(ip);
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());

    // the base point must lie on the conic
    CHECK_THROWS_AS(parametrize_conic(conic, pt(1, 2, 3)), domain_error);
}

TEST_CASE("divisors are formal sums with orbit-weighted degree") {
    Divisor d;
    CHECK(d.is_zero());
    CHECK(d.degree() == 0);
    d.add(PointLocus(pt(1, 0, 0)), 2);
    d.add(PointLocus(pt(0, 0, 1)), -2);
    CHECK(d.degree() == 0);
    CHECK(d.terms().size() == 2);
    d.add(PointLocus(pt(1, 0, 0)), -2); // cancels the first term
    CHECK(d.terms().size() == 1);
    Divisor e = d + (-d);
    CHECK(e.is_zero());

    Divisor f;
    f.add(PointLocus(pt(1, 0, 0)), 3);
    CHECK(f.degree() == 3);
    CHECK((f - f).is_zero());
}

TEST_CASE("divisors of functions on a line") {
    // z/x on the line y = 0: a zero where z meets it, a pole where x does
    Curve line = crv("y");
    Divisor d = divisor_of_function(line, parse_poly("z", Q, XYZ), parse_poly("x", Q, XYZ));
    CHECK(d.degree() == 0);
    REQUIRE(d.terms().size() == 2);
    Divisor want;
    want.add(PointLocus(pt(1, 0, 0)), 1);
    want.add(PointLocus(pt(0, 0, 1)), -1);
    CHECK(d == want);

    // constants have no zeros or poles
    Divisor c = divisor_of_function(line, parse_poly("3", Q, XYZ), parse_poly("7", Q, XYZ));
    CHECK(c.is_zero());

    // degree balancing: z^2 / (x*z) reduces to z/x
    Divisor bal = divisor_of_function(line, parse_poly("z^2", Q, XYZ), parse_poly("x*z", Q, XYZ));
    CHECK(bal == want + want - want); // same as want
    CHECK(bal.degree() == 0);

    // unbalanced degrees with a constant are rejected
    CHECK_THROWS_AS(divisor_of_function(line, parse_poly("z", Q, XYZ), parse_poly("1", Q, XYZ)),
                    domain_error);
    // functions vanishing on the curve are rejected
    CHECK_THROWS_AS(divisor_of_function(line, parse_poly("y", Q, XYZ), parse_poly("x", Q, XYZ)),
                    domain_error);
}

TEST_CASE("divisors of functions on a conic") {
    Curve conic = crv("x*z - y^2");
    ConicParam par = parametrize_conic(conic, pt(0, 0, 1));
    // z meets the conic doubly at [1:0:0], x doubly at [0:0:1]
    Divisor d = divisor_of_function(conic, par, parse_poly("z", Q, XYZ), parse_poly("x", Q, XYZ));
    CHECK(d.degree() == 0);
    Divisor want;
    want.add(PointLocus(pt(1, 0, 0)), 2);
    want.add(PointLocus(pt(0, 0, 1)), -2);
    CHECK(d == want);

    // swapping numerator and denominator flips the sign
    Divisor neg = divisor_of_function(conic, par, parse_poly("x", Q, XYZ), parse_poly("z", Q, XYZ));
    CHECK(neg == -d);

    // y/x: y meets the conic at [1:0:0] and [0:0:1], x doubly at [0:0:1];
    // balanced as y^2/(x*z)... the function itself has divisor
    // [1:0:0] + [0:0:1] - 2[1:0:0] after balancing y^2 / x^2 against... use
    // the library's answer, but pin the degree and consistency
    Divisor ratio = divisor_of_function(conic, par, parse_poly("y", Q, XYZ), parse_poly("x", Q, XYZ));
    CHECK(ratio.degree() == 0);
    Divisor twice = ratio + ratio;
    Divisor square = divisor_of_function(conic, par, parse_poly("y^2", Q, XYZ),
                                         parse_poly("x^2", Q, XYZ));
    CHECK(twice == square);

    // additivity: div(fg) = div(f) + div(g) for f = z/x, g = y/x
    Divisor prod = divisor_of_function(conic, par, parse_poly("z*y", Q, XYZ),
                                       parse_poly("x^2", Q, XYZ));
    CHECK(prod == d + ratio);
}

TEST_CASE("torsion relation on the standard conic") {
    Curve conic = crv("x*z - y^2");
    // F1 = z meets the conic only at P1 = [1:0:0], F2 = x only at P2 = [0:0:1]
    CHECK(check_torsion_divisor(conic, pt(1, 0, 0), pt(0, 0, 1), crv("z"), crv("x")));
    // swapped points no longer match the witnesses
    CHECK_THROWS_WITH_AS(check_torsion_divisor(conic, pt(0, 0, 1), pt(1, 0, 0), crv("z"), crv("x")),
                         "first witness meets the conic beyond its point", domain_error);
    // a secant line is not a one-point witness
    CHECK_THROWS_AS(check_torsion_divisor(conic, pt(1, 0, 0), pt(0, 0, 1), crv("z"), crv("x - y")),
                    domain_error);
}

TEST_CASE("genus drops out of the degree") {
    CHECK(genus_of_degree(1) == 0);
    CHECK(genus_of_degree(2) == 0);
    CHECK(genus_of_degree(3) == 1);
    CHECK(genus_of_degree(4) == 3);
    CHECK(genus_of_degree(5) == 6);
    CHECK_THROWS_AS(genus_of_degree(0), domain_error);
}
