#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staudt/field.hpp"
#include "staudt/linalg.hpp"
#include "staudt/poly.hpp"

namespace staudt {

// Point of the projective plane over K, stored with the first nonzero
// coordinate normalized to 1.
class ProjPoint {
public:
    ProjPoint(const FieldElem& a, const FieldElem& b, const FieldElem& c);
    static ProjPoint of_ints(const GroundField& k, long long a, long long b, long long c);

    const GroundField& field() const { return field_; }
    const std::array<FieldElem, 3>& coords() const { return c_; }
    const FieldElem& operator[](std::size_t i) const { return c_[i]; }
    std::vector<FieldElem> as_vector() const { return {c_[0], c_[1], c_[2]}; }

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const; // lex on normalized coordinates

    std::string str() const; // "[a:b:c]"

private:
    GroundField field_;
    std::array<FieldElem, 3> c_;
};

// Line a*x + b*y + c*z = 0, coefficients normalized like point coordinates.
class ProjLine {
public:
    ProjLine(const FieldElem& a, const FieldElem& b, const FieldElem& c);
    static ProjLine of_ints(const GroundField& k, long long a, long long b, long long c);

    const GroundField& field() const { return field_; }
    const std::array<FieldElem, 3>& coeffs() const { return c_; }
    const FieldElem& operator[](std::size_t i) const { return c_[i]; }

    bool incident(const ProjPoint& p) const;
    MultiPoly form() const; // the linear form in variables x, y, z

    bool operator==(const ProjLine& o) const;
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    bool operator<(const ProjLine& o) const;

    std::string str() const; // "<a:b:c>"

private:
    GroundField field_;
    std::array<FieldElem, 3> c_;
};

ProjLine line_through(const ProjPoint& p, const ProjPoint& q); // p != q
ProjPoint intersect_lines(const ProjLine& l, const ProjLine& m); // l != m
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n);

ProjPoint transform_point(const Matrix& t, const ProjPoint& p);

// All points / lines of the plane over F_p, normalized representatives in
// ascending lexicographic order: [0:0:1], [0:1:t], [1:s:t].
std::vector<ProjPoint> all_points(const GroundField& k);
std::vector<ProjLine> all_lines(const GroundField& k);

// Points of a line, one at a time, in a canonical order: the affine trace in
// the standard chart z = 1 is walked as base + t * dir with t running through
// the canonical field enumeration (dir = (-b, a) made primitive), and the
// remaining point of the line comes last (finite fields only; over Q the
// stream never ends). The line z = 0 is walked as [1:t:0], then [0:1:0].
class LinePointStream {
public:
    explicit LinePointStream(const ProjLine& l);
    std::optional<ProjPoint> next();

private:
    ProjLine line_;
    FieldEnumerator enumerator_;
    std::array<FieldElem, 2> base_, dir_;
    bool infinity_line_ = false;
    bool emitted_last_ = false;
};

// Deterministic stream of plane points. Over F_p it walks all_points();
// over Q it walks the affine chart [x:y:1] along diagonals of the canonical
// field enumeration and never ends.
class PlanePointStream {
public:
    explicit PlanePointStream(const GroundField& k);
    std::optional<ProjPoint> next();

private:
    GroundField field_;
    std::vector<ProjPoint> finite_;
    std::size_t index_ = 0;
    std::uint64_t diag_ = 0, step_ = 0;
};

// Classification of a plane conic by the rank of its symmetric matrix
// (characteristic 2 is rejected).
enum class ConicClass { smooth, crossed_lines, repeated_line };
ConicClass conic_classify(const MultiPoly& q);

// Rescale a polynomial over Q so the coefficients are coprime integers and
// the lex-leading one is positive.
MultiPoly primitive_integer_form(const MultiPoly& p);

// Plane curve: a nonzero homogeneous polynomial in x, y, z, stored monic.
//
// Construction policy: degree 1 always passes; degree 2 must be a smooth
// conic; for degree >= 3 the caller vouches for irreducibility and the
// constructor only rejects curves with a linear factor over the ground field
// (that scan is complete: over Q via rational root candidates on the three
// coordinate lines, over F_p by trying every line of the plane, p <= 101).
class Curve {
public:
    explicit Curve(MultiPoly poly, bool check = true);

    const MultiPoly& poly() const { return poly_; }
    const GroundField& field() const { return poly_.field(); }
    std::uint32_t degree() const { return degree_; }

    bool contains(const ProjPoint& p) const;
    MultiPoly partial(std::size_t i) const { return poly_.derivative(static_cast<std::uint32_t>(i)); }
    bool smooth_at(const ProjPoint& p) const; // p must lie on the curve

    // F(t * X): vanishes on the preimage under t of this curve's zero locus
    Curve pulled_back(const Matrix& t) const;

    bool operator==(const Curve& o) const { return poly_ == o.poly_; }
    std::string str() const;

private:
    MultiPoly poly_;
    std::uint32_t degree_;
};

// Lines of the plane over F_p that divide the given homogeneous polynomial.
std::vector<ProjLine> linear_components(const MultiPoly& p);

// Affine chart attached to a choice of line at infinity. The chart matrix has
// the line coefficients as its third row, completed with standard basis rows
// (so the standard line z = 0 gives the identity).
class AffineFrame {
public:
    explicit AffineFrame(const ProjLine& at_infinity);
    static AffineFrame standard(const GroundField& k);

    const ProjLine& at_infinity() const { return line_; }
    const Matrix& to_chart() const { return to_chart_; }
    const Matrix& from_chart() const { return from_chart_; }

    bool is_affine(const ProjPoint& p) const { return !line_.incident(p); }
    std::pair<FieldElem, FieldElem> affine_coords(const ProjPoint& p) const;
    ProjPoint from_affine(const FieldElem& u, const FieldElem& v) const;

private:
    ProjLine line_;
    Matrix to_chart_, from_chart_;
};

} // namespace staudt
