#include "staudt/plane.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "staudt/errors.hpp"
#include "staudt/unifactor.hpp"

namespace staudt {

namespace {

std::array<FieldElem, 3> normalize_triple(const GroundField& f, std::array<FieldElem, 3> c,
                                          const char* what) {
    for (auto& v : c) {
        if (!v.is_zero()) {
            FieldElem inv = v.inverse();
            for (auto& w : c) w = w * inv;
            return c;
        }
    }
    (void)f;
    throw domain_error(std::string(what) + " needs a nonzero coordinate triple");
}

std::array<FieldElem, 3> cross(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool triple_lex_less(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (FieldElem::value_less(a[i], b[i])) return true;
        if (FieldElem::value_less(b[i], a[i])) return false;
    }
    return false;
}

FieldElem dot3(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

FieldElem det3(const GroundField& f, const std::array<FieldElem, 3>& r0,
               const std::array<FieldElem, 3>& r1, const std::array<FieldElem, 3>& r2) {
    Matrix m(f, 3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        m.at(0, j) = r0[j];
        m.at(1, j) = r1[j];
        m.at(2, j) = r2[j];
    }
    return m.determinant();
}

// scale a direction vector to a canonical representative
std::array<FieldElem, 2> primitive_pair(const GroundField& f, std::array<FieldElem, 2> v) {
    if (v[0].is_zero() && v[1].is_zero()) throw domain_error("zero direction");
    if (!f.is_rational()) {
        FieldElem inv = (v[0].is_zero() ? v[1] : v[0]).inverse();
        return {v[0] * inv, v[1] * inv};
    }
    Integer l = boost::multiprecision::lcm(denominator(v[0].rat()), denominator(v[1].rat()));
    Integer n0 = numerator(v[0].rat()) * (l / denominator(v[0].rat()));
    Integer n1 = numerator(v[1].rat()) * (l / denominator(v[1].rat()));
    Integer g = boost::multiprecision::gcd(n0, n1);
    if ((n0 != 0 && n0 < 0) || (n0 == 0 && n1 < 0)) g = -g;
    return {FieldElem::from_rational(Rational(n0, g)), FieldElem::from_rational(Rational(n1, g))};
}

} // namespace

ProjPoint::ProjPoint(const FieldElem& a, const FieldElem& b, const FieldElem& c)
    : field_(a.field()), c_{a, b, c} {
    if (a.field() != b.field() || a.field() != c.field())
        throw domain_error("point coordinates from different fields");
    c_ = normalize_triple(field_, c_, "projective point");
}

ProjPoint ProjPoint::of_ints(const GroundField& k, long long a, long long b, long long c) {
    return ProjPoint(FieldElem::from_int(k, a), FieldElem::from_int(k, b), FieldElem::from_int(k, c));
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    return field_ == o.field_ && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool ProjPoint::operator<(const ProjPoint& o) const { return triple_lex_less(c_, o.c_); }

std::string ProjPoint::str() const {
    return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
}

ProjLine::ProjLine(const FieldElem& a, const FieldElem& b, const FieldElem& c)
    : field_(a.field()), c_{a, b, c} {
    if (a.field() != b.field() || a.field() != c.field())
        throw domain_error("line coefficients from different fields");
    c_ = normalize_triple(field_, c_, "projective line");
}

ProjLine ProjLine::of_ints(const GroundField& k, long long a, long long b, long long c) {
    return ProjLine(FieldElem::from_int(k, a), FieldElem::from_int(k, b), FieldElem::from_int(k, c));
}

bool ProjLine::incident(const ProjPoint& p) const {
    if (field_ != p.field()) throw domain_error("line and point over different fields");
    return dot3(c_, p.coords()).is_zero();
}

MultiPoly ProjLine::form() const {
    MultiPoly f = MultiPoly::zero(field_, 3);
    for (std::uint32_t i = 0; i < 3; ++i)
        f += MultiPoly::variable(field_, 3, i).scaled(c_[i]);
    return f;
}

bool ProjLine::operator==(const ProjLine& o) const {
    return field_ == o.field_ && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool ProjLine::operator<(const ProjLine& o) const { return triple_lex_less(c_, o.c_); }

std::string ProjLine::str() const {
    return "<" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ">";
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw domain_error("no unique line through a repeated point");
    auto c = cross(p.coords(), q.coords());
    return ProjLine(c[0], c[1], c[2]);
}

ProjPoint intersect_lines(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw domain_error("no unique intersection of a repeated line");
    auto c = cross(l.coeffs(), m.coeffs());
    return ProjPoint(c[0], c[1], c[2]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.field(), p.coords(), q.coords(), r.coords()).is_zero();
}

bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
    return det3(l.field(), l.coeffs(), m.coeffs(), n.coeffs()).is_zero();
}

ProjPoint transform_point(const Matrix& t, const ProjPoint& p) {
    auto v = t.apply(p.as_vector());
    return ProjPoint(v[0], v[1], v[2]);
}

std::vector<ProjPoint> all_points(const GroundField& k) {
    if (k.is_rational()) throw domain_error("cannot list the rational projective plane");
    std::vector<ProjPoint> out;
    out.reserve(static_cast<std::size_t>(k.p) * k.p + k.p + 1);
    out.push_back(ProjPoint::of_ints(k, 0, 0, 1));
    for (std::uint64_t t = 0; t < k.p; ++t)
        out.push_back(ProjPoint(FieldElem::zero(k), FieldElem::one(k), FieldElem::residue(k, t)));
    for (std::uint64_t s = 0; s < k.p; ++s)
        for (std::uint64_t t = 0; t < k.p; ++t)
            out.push_back(ProjPoint(FieldElem::one(k), FieldElem::residue(k, s), FieldElem::residue(k, t)));
    return out;
}

std::vector<ProjLine> all_lines(const GroundField& k) {
    if (k.is_rational()) throw domain_error("cannot list the lines of the rational projective plane");
    std::vector<ProjLine> out;
    out.reserve(static_cast<std::size_t>(k.p) * k.p + k.p + 1);
    out.push_back(ProjLine::of_ints(k, 0, 0, 1));
    for (std::uint64_t t = 0; t < k.p; ++t)
        out.push_back(ProjLine(FieldElem::zero(k), FieldElem::one(k), FieldElem::residue(k, t)));
    for (std::uint64_t s = 0; s < k.p; ++s)
        for (std::uint64_t t = 0; t < k.p; ++t)
            out.push_back(ProjLine(FieldElem::one(k), FieldElem::residue(k, s), FieldElem::residue(k, t)));
    return out;
}

LinePointStream::LinePointStream(const ProjLine& l)
    : line_(l),
      enumerator_(l.field()),
      base_{FieldElem::zero(l.field()), FieldElem::zero(l.field())},
      dir_{FieldElem::zero(l.field()), FieldElem::zero(l.field())} {
    const auto& c = l.coeffs();
    if (c[0].is_zero() && c[1].is_zero()) {
        infinity_line_ = true;
        return;
    }
    dir_ = primitive_pair(l.field(), {-c[1], c[0]});
    if (!c[0].is_zero())
        base_ = {-(c[2] * c[0].inverse()), FieldElem::zero(l.field())};
    else
        base_ = {FieldElem::zero(l.field()), -(c[2] * c[1].inverse())};
}

std::optional<ProjPoint> LinePointStream::next() {
    const GroundField& k = line_.field();
    if (auto t = enumerator_.next()) {
        if (infinity_line_) return ProjPoint(FieldElem::one(k), *t, FieldElem::zero(k));
        return ProjPoint(base_[0] + *t * dir_[0], base_[1] + *t * dir_[1], FieldElem::one(k));
    }
    if (!emitted_last_) {
        emitted_last_ = true;
        if (infinity_line_) return ProjPoint::of_ints(k, 0, 1, 0);
        return ProjPoint(dir_[0], dir_[1], FieldElem::zero(k));
    }
    return std::nullopt;
}

PlanePointStream::PlanePointStream(const GroundField& k) : field_(k) {
    if (!k.is_rational()) finite_ = all_points(k);
}

std::optional<ProjPoint> PlanePointStream::next() {
    if (!field_.is_rational()) {
        if (index_ >= finite_.size()) return std::nullopt;
        return finite_[index_++];
    }
    FieldElem x = canonical_element(field_, step_);
    FieldElem y = canonical_element(field_, diag_ - step_);
    if (step_ == diag_) {
        ++diag_;
        step_ = 0;
    } else {
        ++step_;
    }
    return ProjPoint(x, y, FieldElem::one(field_));
}

ConicClass conic_classify(const MultiPoly& q) {
    if (q.nvars() != 3) throw domain_error("conic classification expects three variables");
    if (q.field().characteristic() == 2) throw domain_error("conic classification needs characteristic != 2");
    if (q.is_zero() || q.homogeneous_degree() != 2)
        throw domain_error("conic classification expects a homogeneous quadratic");
    const GroundField& k = q.field();
    FieldElem half = FieldElem::from_int(k, 2).inverse();
    Matrix m(k, 3, 3);
    for (std::uint32_t i = 0; i < 3; ++i) {
        for (std::uint32_t j = 0; j < 3; ++j) {
            Monomial mono{{0, 0, 0}};
            mono.e[i] += 1;
            mono.e[j] += 1;
            FieldElem c = q.coeff(mono);
            m.at(i, j) = (i == j) ? c : c * half;
        }
    }
    switch (m.rank()) {
        case 3: return ConicClass::smooth;
        case 2: return ConicClass::crossed_lines;
        default: return ConicClass::repeated_line;
    }
}

MultiPoly primitive_integer_form(const MultiPoly& p) {
    if (!p.field().is_rational()) throw domain_error("integer normalization needs rational coefficients");
    if (p.is_zero()) return p;
    Integer l(1), g(0);
    for (const auto& [mono, c] : p.terms()) l = boost::multiprecision::lcm(l, denominator(c.rat()));
    for (const auto& [mono, c] : p.terms())
        g = boost::multiprecision::gcd(g, numerator(c.rat()) * (l / denominator(c.rat())));
    Rational scale(l, g);
    if (p.leading_coeff().rat() < 0) scale = -scale;
    return p.scaled(FieldElem::from_rational(scale));
}

namespace {

// rational points of the plane where a Q-linear factor could cross the
// scan line {x_idx = 0}
std::vector<ProjPoint> scan_line_candidates(const MultiPoly& p, std::uint32_t idx,
                                            std::vector<ProjLine>& coordinate_factors) {
    const GroundField& k = p.field();
    std::uint32_t vi = (idx == 0) ? 1 : 0;            // dehomogenization variable
    std::uint32_t vj = (idx == 2) ? 1 : 2;            // variable pinned to 1
    QPoly g;                                          // restriction, as poly in x_vi with x_vj = 1
    bool restriction_zero = true;
    FieldElem top = FieldElem::zero(k);               // coefficient of x_vi^d in the restriction
    for (const auto& [mono, c] : p.terms()) {
        if (mono.e[idx] != 0) continue;
        restriction_zero = false;
        std::size_t a = mono.e[vi];
        if (g.size() <= a) g.resize(a + 1, Rational(0));
        g[a] += c.rat();
        if (mono.e[vj] == 0) top = c;
    }
    if (restriction_zero) {
        std::array<FieldElem, 3> c{FieldElem::zero(k), FieldElem::zero(k), FieldElem::zero(k)};
        c[idx] = FieldElem::one(k);
        coordinate_factors.push_back(ProjLine(c[0], c[1], c[2]));
        return {};
    }
    std::vector<ProjPoint> pts;
    auto make_point = [&](const FieldElem& at_i, const FieldElem& at_j) {
        std::array<FieldElem, 3> c{FieldElem::zero(k), FieldElem::zero(k), FieldElem::zero(k)};
        c[vi] = at_i;
        c[vj] = at_j;
        return ProjPoint(c[0], c[1], c[2]);
    };
    g = uni::trim(std::move(g));
    if (!uni::is_zero(g) && uni::deg(g) >= 1) {
        for (const auto& [root, mult] : rational_roots(g))
            pts.push_back(make_point(FieldElem::from_rational(root), FieldElem::one(k)));
    }
    if (top.is_zero()) pts.push_back(make_point(FieldElem::one(k), FieldElem::zero(k)));
    return pts;
}

std::vector<ProjLine> linear_components_q(const MultiPoly& p) {
    std::vector<ProjLine> coordinate_factors;
    std::array<std::vector<ProjPoint>, 3> pts;
    for (std::uint32_t idx = 0; idx < 3; ++idx)
        pts[idx] = scan_line_candidates(p, idx, coordinate_factors);
    std::set<ProjLine> candidates(coordinate_factors.begin(), coordinate_factors.end());
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = i + 1; j < 3; ++j)
            for (const auto& a : pts[i])
                for (const auto& b : pts[j])
                    if (a != b) candidates.insert(line_through(a, b));
    std::vector<ProjLine> out;
    for (const auto& l : candidates)
        if (p.divided_exactly_by(l.form())) out.push_back(l);
    return out;
}

} // namespace

std::vector<ProjLine> linear_components(const MultiPoly& p) {
    if (p.nvars() != 3) throw domain_error("linear component scan expects three variables");
    if (p.is_zero() || !p.is_homogeneous())
        throw domain_error("linear component scan expects a nonzero homogeneous polynomial");
    if (p.field().is_rational()) return linear_components_q(p);
    if (p.field().p > 101) throw domain_error("linear component scan over F_p is limited to p <= 101");
    std::vector<ProjLine> out;
    for (const auto& l : all_lines(p.field()))
        if (p.divided_exactly_by(l.form())) out.push_back(l);
    return out;
}

Curve::Curve(MultiPoly poly, bool check) : poly_(std::move(poly)), degree_(0) {
    if (poly_.nvars() != 3) throw domain_error("plane curve equation must use three variables");
    if (poly_.is_zero()) throw domain_error("plane curve equation must be nonzero");
    auto d = poly_.homogeneous_degree();
    if (!d) throw domain_error("plane curve equation must be homogeneous");
    if (*d == 0) throw domain_error("plane curve equation must have positive degree");
    degree_ = static_cast<std::uint32_t>(*d);
    poly_ = poly_.monic();
    if (!check || degree_ == 1) return;
    if (degree_ == 2) {
        if (conic_classify(poly_) != ConicClass::smooth) throw domain_error("degenerate conic");
        return;
    }
    if (!linear_components(poly_).empty()) throw domain_error("curve has a linear component");
}

bool Curve::contains(const ProjPoint& p) const {
    if (p.field() != field()) throw domain_error("curve and point over different fields");
    return poly_.eval(p.as_vector()).is_zero();
}

bool Curve::smooth_at(const ProjPoint& p) const {
    if (!contains(p)) throw domain_error("smoothness test at a point off the curve");
    for (std::uint32_t i = 0; i < 3; ++i)
        if (!poly_.derivative(i).eval(p.as_vector()).is_zero()) return true;
    return false;
}

Curve Curve::pulled_back(const Matrix& t) const {
    if (t.rows() != 3 || t.cols() != 3) throw domain_error("coordinate change must be 3 x 3");
    if (t.determinant().is_zero()) throw domain_error("coordinate change must be invertible");
    std::vector<MultiPoly> args;
    args.reserve(3);
    for (std::size_t r = 0; r < 3; ++r) {
        MultiPoly row = MultiPoly::zero(field(), 3);
        for (std::uint32_t c = 0; c < 3; ++c)
            row += MultiPoly::variable(field(), 3, c).scaled(t.at(r, c));
        args.push_back(std::move(row));
    }
    return Curve(poly_.compose(args), false);
}

std::string Curve::str() const {
    static const std::vector<std::string> xyz{"x", "y", "z"};
    if (field().is_rational()) return primitive_integer_form(poly_).str(xyz);
    return poly_.str(xyz);
}

AffineFrame::AffineFrame(const ProjLine& at_infinity)
    : line_(at_infinity),
      to_chart_(at_infinity.field(), 3, 3),
      from_chart_(at_infinity.field(), 3, 3) {
    const GroundField& k = line_.field();
    static const std::array<std::array<int, 2>, 3> choices{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& rows : choices) {
        Matrix m(k, 3, 3);
        m.at(0, static_cast<std::size_t>(rows[0])) = FieldElem::one(k);
        m.at(1, static_cast<std::size_t>(rows[1])) = FieldElem::one(k);
        for (std::size_t j = 0; j < 3; ++j) m.at(2, j) = line_.coeffs()[j];
        if (!m.determinant().is_zero()) {
            to_chart_ = m;
            from_chart_ = m.inverse();
            return;
        }
    }
    throw domain_error("could not complete the chart matrix"); // unreachable for a valid line
}

AffineFrame AffineFrame::standard(const GroundField& k) {
    return AffineFrame(ProjLine::of_ints(k, 0, 0, 1));
}

std::pair<FieldElem, FieldElem> AffineFrame::affine_coords(const ProjPoint& p) const {
    auto w = to_chart_.apply(p.as_vector());
    if (w[2].is_zero()) throw domain_error("point is at infinity in this chart");
    FieldElem inv = w[2].inverse();
    return {w[0] * inv, w[1] * inv};
}

ProjPoint AffineFrame::from_affine(const FieldElem& u, const FieldElem& v) const {
    auto w = from_chart_.apply({u, v, FieldElem::one(u.field())});
    return ProjPoint(w[0], w[1], w[2]);
}

} // namespace staudt
