#include <doctest.h>

#include <algorithm>

#include "staudt/errors.hpp"
#include "staudt/recover.hpp"
#include "staudt/textio.hpp"

using namespace staudt;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

Curve crv(const std::string& s, const GroundField& k, bool check = true) {
    return Curve(parse_poly(s, k, XYZ), check);
}

// same zero set up to a nonzero scalar
bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.term_count() != b.term_count()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    FieldElem ratio = ia->second / ib->second;
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ratio * ib->second)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("oracles answer membership and stream the curve") {
    GroundField k = GroundField::prime(7);
    Curve conic = crv("x*z - y^2", k);
    MembershipOracle o = oracle_from_curve(conic);
    std::size_t on_curve = 0;
    for (const auto& p : all_points(k)) {
        CHECK(o.member(p) == conic.contains(p));
        if (conic.contains(p)) ++on_curve;
    }
    CHECK(on_curve == 8); // a smooth conic over F_p carries p + 1 points

    std::vector<ProjPoint> pts = sample_curve_points(o, 8);
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (const auto& p : pts) CHECK(conic.contains(p));

    // a fresh oracle streams from the start; the exhausted one throws
    CHECK_THROWS_AS(sample_curve_points(o, 1), domain_error);
    CHECK(sample_curve_points(oracle_from_curve(conic), 8).size() == 8);
}

TEST_CASE("requesting more points than the curve carries fails") {
    GroundField k = GroundField::prime(3);
    MembershipOracle o = oracle_from_curve(crv("x", k));
    CHECK_THROWS_WITH_AS(sample_curve_points(o, 10), "curve has fewer points than requested",
                         domain_error);
}

TEST_CASE("rational oracles walk lines and conics forever") {
    GroundField q = GroundField::rationals();
    MembershipOracle line = oracle_from_curve(crv("x - y", q));
    auto pts = sample_curve_points(line, 30);
    CHECK(pts.size() == 30);
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());

    MembershipOracle conic = oracle_from_curve(crv("x*z - y^2", q));
    for (const auto& p : sample_curve_points(conic, 25)) CHECK(crv("x*z - y^2", q).contains(p));

    // rational cubics have no sanctioned enumerator
    Curve cubic(parse_poly("y^2*z - x^3 + x*z^2", q, XYZ), false);
    CHECK_THROWS_AS(oracle_from_curve(cubic).next(), domain_error);
}

TEST_CASE("a conic is recovered from eight points over F_7") {
    GroundField k = GroundField::prime(7);
    Curve conic = crv("x*z - y^2", k);
    auto pts = sample_curve_points(oracle_from_curve(conic), 8);
    RecoveredEquation rec = recover_equation(pts, 3);
    CHECK(rec.degree == 2);
    CHECK(proportional(rec.poly, conic.poly()));
}

TEST_CASE("a line is recovered from six points over F_5") {
    GroundField k = GroundField::prime(5);
    Curve line = crv("x + 3*y + z", k);
    auto pts = sample_curve_points(oracle_from_curve(line), 6);
    RecoveredEquation rec = recover_equation(pts, 3);
    CHECK(rec.degree == 1);
    CHECK(proportional(rec.poly, line.poly()));
}

TEST_CASE("the smallest consistent degree wins") {
    GroundField q = GroundField::rationals();
    // points on the line x = y also satisfy (x - y)^2 = 0 and x^2 - y^2 = 0,
    // but degree 1 already fits
    auto pts = sample_curve_points(oracle_from_curve(crv("x - y", q)), 12);
    RecoveredEquation rec = recover_equation(pts, 3);
    CHECK(rec.degree == 1);
    CHECK(proportional(rec.poly, parse_poly("x - y", q, XYZ)));
}

TEST_CASE("recovery reports failure modes separately") {
    GroundField k = GroundField::prime(7);
    Curve conic = crv("x*z - y^2", k);
    auto pts = sample_curve_points(oracle_from_curve(conic), 8);

    // too few points for the requested degree band
    CHECK_THROWS_AS(recover_equation({pts[0]}, 2), domain_error);
    CHECK_THROWS_AS(recover_equation({}, 3), domain_error);
    // two points have no holdout and legitimately fit their secant line
    RecoveredEquation secant = recover_equation({pts[0], pts[1]}, 2);
    CHECK(secant.degree == 1);
    CHECK(secant.poly.eval(pts[0].as_vector()).is_zero());
    CHECK(secant.poly.eval(pts[1].as_vector()).is_zero());
    // no curve of degree <= 1 passes through all conic points
    CHECK_THROWS_AS(recover_equation(pts, 1), domain_error);
    // underdetermined: four conic points leave a pencil in degree 2,
    // and no line passes through all four
    CHECK_THROWS_AS(recover_equation({pts[0], pts[1], pts[2], pts[3]}, 2), domain_error);
}

TEST_CASE("recovery over a large prime field") {
    GroundField k = GroundField::prime(101);
    Curve cubic = crv("y^2*z - x^3 - 4*z^3", k, false);
    auto pts = sample_curve_points(oracle_from_curve(cubic), 11);
    RecoveredEquation rec = recover_equation(pts, 3);
    CHECK(rec.degree == 3);
    CHECK(proportional(rec.poly, cubic.poly()));
}

TEST_CASE("holdout points validate the fit") {
    GroundField k = GroundField::prime(11);
    Curve conic = crv("x^2 + y^2 - z^2", k);
    // generous sample: the first 5 pin the space, the rest are holdout
    auto pts = sample_curve_points(oracle_from_curve(conic), 12);
    RecoveredEquation rec = recover_equation(pts, 2);
    CHECK(rec.degree == 2);
    CHECK(proportional(rec.poly, conic.poly()));

    // poisoning the holdout breaks the fit
    ProjPoint bad = ProjPoint::of_ints(k, 1, 0, 0);
    REQUIRE_FALSE(conic.contains(bad));
    pts.back() = bad;
    CHECK_THROWS_AS(recover_equation(pts, 2), domain_error);
}

TEST_CASE("incidence counts flag low degree") {
    GroundField k = GroundField::prime(11);
    Curve line = crv("x + y + z", k);
    MembershipOracle o = oracle_from_curve(line);
    std::vector<Curve> probes{crv("x", k), crv("y - z", k), crv("x - 3*y", k)};
    // a line meets each probe line at most once
    CHECK(detect_low_degree(oracle_from_curve(line), probes, 1));

    // a conic crosses some line twice, so the n = 1 test fails
    Curve conic = crv("x*z - y^2", k);
    std::vector<Curve> lines;
    for (const auto& l : all_lines(k)) {
        lines.emplace_back(l.form(), false);
        if (lines.size() == 20) break;
    }
    CHECK_FALSE(detect_low_degree(oracle_from_curve(conic), lines, 1));
    // but passes the n = 2 test against probe conics
    std::vector<Curve> conics{crv("x^2 + y^2 - z^2", k), crv("x^2 - y*z", k),
                              crv("x^2 + 3*y^2 - 2*z^2", k)};
    CHECK(detect_low_degree(oracle_from_curve(conic), conics, 2));

    // probing with the curve itself floods the count
    CHECK_FALSE(detect_low_degree(oracle_from_curve(line), {line}, 1));
    // probes of too high degree and empty probe sets are rejected
    CHECK_THROWS_AS(detect_low_degree(oracle_from_curve(line), conics, 1), domain_error);
    CHECK_THROWS_AS(detect_low_degree(oracle_from_curve(line), {}, 1), domain_error);
}

TEST_CASE("custom oracles plug in") {
    GroundField k = GroundField::prime(5);
    // hand-rolled oracle for the line y = 0, streaming a fixed list
    std::vector<ProjPoint> fixed{ProjPoint::of_ints(k, 0, 0, 1), ProjPoint::of_ints(k, 1, 0, 1),
                                 ProjPoint::of_ints(k, 2, 0, 1), ProjPoint::of_ints(k, 3, 0, 1),
                                 ProjPoint::of_ints(k, 4, 0, 1), ProjPoint::of_ints(k, 1, 0, 0)};
    auto cursor = std::make_shared<std::size_t>(0);
    MembershipOracle o(
        k, [](const ProjPoint& p) { return p[1].is_zero(); },
        [fixed, cursor]() -> std::optional<ProjPoint> {
            if (*cursor >= fixed.size()) return std::nullopt;
            return fixed[(*cursor)++];
        });
    auto pts = sample_curve_points(o, 6);
    RecoveredEquation rec = recover_equation(pts, 2);
    CHECK(rec.degree == 1);
    CHECK(proportional(rec.poly, parse_poly("y", k, XYZ)));
}
