#include "staudt/vonstaudt.hpp"

#include <sstream>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

void require_affine(const Frame& fr, const ProjPoint& p, const char* what) {
    if (!fr.is_affine(p)) throw domain_error(std::string(what) + " must be an affine point");
}

void require_on_axis(const Frame& fr, const ProjPoint& p, const char* what) {
    require_affine(fr, p, what);
    if (!fr.x_axis.incident(p)) throw domain_error(std::string(what) + " must lie on the x-axis");
}

bool parallel(const Frame& fr, const ProjLine& m, const ProjLine& n) {
    if (m == n) return true;
    return fr.at_infinity.incident(intersect_lines(m, n));
}

// first point of the stream that is affine and distinct from the origin
ProjPoint first_off_origin(const Frame& fr, const ProjLine& axis) {
    LinePointStream stream(axis);
    for (int tries = 0; tries < 256; ++tries) {
        auto p = stream.next();
        if (!p) break;
        if (*p != fr.origin && fr.is_affine(*p)) return *p;
    }
    throw domain_error("no affine point off the origin on the axis");
}

} // namespace

Frame::Frame(const ProjLine& linf, const ProjLine& lx, const ProjLine& ly, const ProjPoint& unit_pt)
    : at_infinity(linf), x_axis(lx), y_axis(ly), origin(intersect_lines(lx, ly)), unit(unit_pt) {
    if (lx == linf || ly == linf) throw domain_error("an axis coincides with the line at infinity");
    if (at_infinity.incident(origin)) throw domain_error("the axes must meet at an affine point");
    if (!x_axis.incident(unit)) throw domain_error("the unit must lie on the x-axis");
    if (unit == origin) throw domain_error("the unit must differ from the origin");
    if (at_infinity.incident(unit)) throw domain_error("the unit must be affine");
}

Frame Frame::standard(const GroundField& k) {
    return Frame(ProjLine::of_ints(k, 0, 0, 1), ProjLine::of_ints(k, 0, 1, 0),
                 ProjLine::of_ints(k, 1, 0, 0), ProjPoint::of_ints(k, 1, 0, 1));
}

Frame Frame::from_quad(const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3,
                       const ProjPoint& q4) {
    const ProjPoint* q[4] = {&q1, &q2, &q3, &q4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*q[i] == *q[j]) throw domain_error("frame points must be distinct");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(*q[i], *q[j], *q[k]))
                    throw domain_error("three of the frame points are collinear");
    ProjLine linf = line_through(q2, q3);
    ProjLine lx = line_through(q1, q3);
    ProjLine ly = line_through(q1, q2);
    ProjPoint unit = intersect_lines(lx, line_through(q4, q2));
    return Frame(linf, lx, ly, unit);
}

ProjLine parallel_through(const Frame& fr, const ProjPoint& p, const ProjLine& m) {
    if (m == fr.at_infinity) throw domain_error("no parallel direction along the line at infinity");
    require_affine(fr, p, "base point of a parallel");
    return line_through(p, intersect_lines(m, fr.at_infinity));
}

bool related_pairs(const Frame& fr, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d) {
    require_affine(fr, a, "pair entry");
    require_affine(fr, b, "pair entry");
    require_affine(fr, c, "pair entry");
    require_affine(fr, d, "pair entry");
    if (a == b || c == d || a == c || b == d) return false;
    ProjLine m1 = line_through(a, b);
    ProjLine m2 = line_through(c, d);
    if (m1 == m2 || !parallel(fr, m1, m2)) return false;
    ProjLine n1 = line_through(a, c);
    ProjLine n2 = line_through(b, d);
    if (n1 == n2) return false; // cannot happen once m1 != m2, kept as a guard
    return parallel(fr, n1, n2);
}

bool congruent(const Frame& fr, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
               const ProjPoint& d) {
    require_affine(fr, a, "pair entry");
    require_affine(fr, b, "pair entry");
    require_affine(fr, c, "pair entry");
    require_affine(fr, d, "pair entry");
    if (a == b) return c == d;
    if (c == d) return false;
    if (related_pairs(fr, a, b, c, d)) return true;
    ProjLine m1 = line_through(a, b);
    if (m1 != line_through(c, d)) return false;
    // equal carriers: hop through an auxiliary pair off the line
    PlanePointStream stream(fr.field());
    for (int tries = 0; tries < 256; ++tries) {
        auto e = stream.next();
        if (!e) break;
        if (!fr.is_affine(*e) || m1.incident(*e)) continue;
        ProjPoint f = intersect_lines(parallel_through(fr, *e, m1),
                                      parallel_through(fr, b, line_through(a, *e)));
        return related_pairs(fr, a, b, *e, f) && related_pairs(fr, *e, f, c, d);
    }
    throw domain_error("no auxiliary point available off the carrier line");
}

ProjPoint geom_add(const Frame& fr, const ProjPoint& x, const ProjPoint& y) {
    require_on_axis(fr, x, "summand");
    require_on_axis(fr, y, "summand");
    if (x == fr.origin) return y;
    if (y == fr.origin) return x;
    LinePointStream stream(fr.y_axis);
    for (int tries = 0; tries < 64; ++tries) {
        auto e = stream.next();
        if (!e) break;
        if (*e == fr.origin || !fr.is_affine(*e)) continue;
        try {
            ProjPoint f = intersect_lines(parallel_through(fr, *e, fr.x_axis),
                                          parallel_through(fr, x, fr.y_axis));
            ProjPoint z = intersect_lines(parallel_through(fr, f, line_through(*e, y)), fr.x_axis);
            require_on_axis(fr, z, "sum");
            return z;
        } catch (const domain_error&) {
            continue;
        }
    }
    throw domain_error("addition construction degenerated");
}

ProjPoint geom_mul(const Frame& fr, const ProjPoint& x, const ProjPoint& y) {
    require_on_axis(fr, x, "factor");
    require_on_axis(fr, y, "factor");
    LinePointStream stream(fr.y_axis);
    for (int tries = 0; tries < 64; ++tries) {
        auto a = stream.next();
        if (!a) break;
        if (*a == fr.origin || !fr.is_affine(*a)) continue;
        try {
            ProjPoint b = intersect_lines(parallel_through(fr, x, line_through(*a, fr.unit)),
                                          fr.y_axis);
            ProjPoint z = intersect_lines(parallel_through(fr, b, line_through(*a, y)), fr.x_axis);
            require_on_axis(fr, z, "product");
            return z;
        } catch (const domain_error&) {
            continue;
        }
    }
    throw domain_error("multiplication construction degenerated");
}

AxisPair coordinatize(const Frame& fr, const ProjPoint& p) {
    require_affine(fr, p, "coordinatized point");
    ProjPoint first = intersect_lines(parallel_through(fr, p, fr.y_axis), fr.x_axis);
    ProjPoint on_y = intersect_lines(parallel_through(fr, p, fr.x_axis), fr.y_axis);
    ProjPoint carrier = first_off_origin(fr, fr.y_axis);
    ProjLine m0 = line_through(carrier, fr.unit);
    ProjPoint second = intersect_lines(parallel_through(fr, on_y, m0), fr.x_axis);
    require_on_axis(fr, first, "first coordinate");
    require_on_axis(fr, second, "second coordinate");
    return {first, second};
}

FieldElem axis_value(const Frame& fr, const ProjPoint& p) {
    require_on_axis(fr, p, "axis point");
    AffineFrame chart(fr.at_infinity);
    auto [u0, v0] = chart.affine_coords(fr.origin);
    auto [u1, v1] = chart.affine_coords(fr.unit);
    auto [up, vp] = chart.affine_coords(p);
    FieldElem du = u1 - u0, dv = v1 - v0;
    FieldElem dup = up - u0, dvp = vp - v0;
    FieldElem t = !du.is_zero() ? dup * du.inverse() : dvp * dv.inverse();
    if (dup != t * du || dvp != t * dv) throw domain_error("point does not sit on the scaled axis");
    return t;
}

ProjPoint axis_point(const Frame& fr, const FieldElem& t) {
    AffineFrame chart(fr.at_infinity);
    auto [u0, v0] = chart.affine_coords(fr.origin);
    auto [u1, v1] = chart.affine_coords(fr.unit);
    return chart.from_affine(u0 + t * (u1 - u0), v0 + t * (v1 - v0));
}

CertificationReport certify_frame(const Frame& fr, std::uint64_t sample_size) {
    const GroundField& k = fr.field();
    std::vector<FieldElem> pool;
    if (k.is_rational()) {
        for (std::uint64_t i = 0; i < sample_size; ++i) pool.push_back(canonical_element(k, i));
    } else {
        for (std::uint64_t v = 0; v < k.p; ++v) pool.push_back(FieldElem::residue(k, v));
    }
    std::vector<ProjPoint> pts;
    pts.reserve(pool.size());
    for (const auto& s : pool) pts.push_back(axis_point(fr, s));

    CertificationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failure = msg;
    };

    for (std::size_t i = 0; i < pool.size() && rep.ok; ++i) {
        for (std::size_t j = 0; j < pool.size() && rep.ok; ++j) {
            ProjPoint sum = geom_add(fr, pts[i], pts[j]);
            ProjPoint prod = geom_mul(fr, pts[i], pts[j]);
            if (sum != axis_point(fr, pool[i] + pool[j]))
                fail("sum mismatch at " + pool[i].str() + ", " + pool[j].str());
            else if (prod != axis_point(fr, pool[i] * pool[j]))
                fail("product mismatch at " + pool[i].str() + ", " + pool[j].str());
            else if (sum != geom_add(fr, pts[j], pts[i]))
                fail("commutativity of addition fails at " + pool[i].str() + ", " + pool[j].str());
            else if (prod != geom_mul(fr, pts[j], pts[i]))
                fail("commutativity of multiplication fails at " + pool[i].str() + ", " +
                     pool[j].str());
            ++rep.pairs_checked;
        }
    }
    for (std::size_t i = 0; i < pool.size() && rep.ok; ++i) {
        for (std::size_t j = 0; j < pool.size() && rep.ok; ++j) {
            for (std::size_t l = 0; l < pool.size() && rep.ok; ++l) {
                const ProjPoint &a = pts[i], &b = pts[j], &c = pts[l];
                if (geom_add(fr, geom_add(fr, a, b), c) != geom_add(fr, a, geom_add(fr, b, c)))
                    fail("associativity of addition fails");
                else if (geom_mul(fr, geom_mul(fr, a, b), c) != geom_mul(fr, a, geom_mul(fr, b, c)))
                    fail("associativity of multiplication fails");
                else if (geom_mul(fr, a, geom_add(fr, b, c)) !=
                         geom_add(fr, geom_mul(fr, a, b), geom_mul(fr, a, c)))
                    fail("distributivity fails");
                ++rep.triples_checked;
            }
        }
    }
    return rep;
}

} // namespace staudt
