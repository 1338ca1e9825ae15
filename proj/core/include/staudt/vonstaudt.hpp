#pragma once

#include <cstdint>
#include <string>

#include "staudt/field.hpp"
#include "staudt/plane.hpp"

namespace staudt {

// Coordinate frame for the von Staudt constructions: a line at infinity, two
// axes meeting in an affine origin, and a unit point on the first axis.
struct Frame {
    ProjLine at_infinity;
    ProjLine x_axis;
    ProjLine y_axis;
    ProjPoint origin; // x_axis meet y_axis
    ProjPoint unit;   // on x_axis, distinct from the origin, affine

    Frame(const ProjLine& linf, const ProjLine& lx, const ProjLine& ly, const ProjPoint& unit_pt);

    static Frame standard(const GroundField& k); // z = 0, y = 0, x = 0, unit [1:0:1]

    // Frame determined by four points in general position: origin q1,
    // infinity through q2 and q3, axes through the origin and q3 / q2, unit
    // cut out on the x-axis by the line through q4 and q2.
    static Frame from_quad(const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3,
                           const ProjPoint& q4);

    const GroundField& field() const { return at_infinity.field(); }
    bool is_affine(const ProjPoint& p) const { return !at_infinity.incident(p); }
};

// Line through p that meets m on the frame's line at infinity. p must be
// affine and m must not be the line at infinity itself.
ProjLine parallel_through(const Frame& fr, const ProjPoint& p, const ProjLine& m);

// Parallelogram test: the ordered pairs (a,b) and (c,d) span one. Requires
// four affine points; true when ab and cd are parallel but distinct lines,
// ac and bd are parallel lines, and a != b, c != d, a != c, b != d.
bool related_pairs(const Frame& fr, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d);

// Transitive closure of related_pairs on pairs with parallel or equal
// carriers, plus the trivial pairs (a,a) ~ (c,c): equality of translations.
bool congruent(const Frame& fr, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
               const ProjPoint& d);

// Sum and product of points of the x-axis, by parallel projection through
// the y-axis. Inputs and output are affine points of the x-axis.
ProjPoint geom_add(const Frame& fr, const ProjPoint& x, const ProjPoint& y);
ProjPoint geom_mul(const Frame& fr, const ProjPoint& x, const ProjPoint& y);

// Both coordinates of an affine point, each encoded as a point of the
// x-axis. The second coordinate is measured on the y-axis and carried over
// by the fixed parallel projection that sends the first y-axis point off the
// origin to the unit.
struct AxisPair {
    ProjPoint first;
    ProjPoint second;
};
AxisPair coordinatize(const Frame& fr, const ProjPoint& p);

// The scalar t with p = origin + t * (unit - origin), read off in the affine
// chart of the frame; p must be an affine point of the x-axis.
FieldElem axis_value(const Frame& fr, const ProjPoint& p);
ProjPoint axis_point(const Frame& fr, const FieldElem& t);

struct CertificationReport {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t triples_checked = 0;
    std::string failure; // empty when ok
};

// Check that the geometric arithmetic on the x-axis matches the ground
// field through axis_point: sums and products of all pairs (exhaustive over
// F_p, the first sample_size canonical elements over Q), plus associativity
// and distributivity over all triples from the same pool.
CertificationReport certify_frame(const Frame& fr, std::uint64_t sample_size = 8);

} // namespace staudt
