#include "staudt/recover.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "staudt/errors.hpp"
#include "staudt/linalg.hpp"

namespace staudt {

namespace {

MembershipOracle finite_field_oracle(const Curve& c) {
    struct State {
        std::vector<ProjPoint> pts;
        std::size_t i = 0;
    };
    auto st = std::make_shared<State>();
    for (const auto& p : all_points(c.field()))
        if (c.contains(p)) st->pts.push_back(p);
    Curve copy = c;
    return MembershipOracle(
        c.field(), [copy](const ProjPoint& p) { return copy.contains(p); },
        [st]() -> std::optional<ProjPoint> {
            if (st->i >= st->pts.size()) return std::nullopt;
            return st->pts[st->i++];
        });
}

MembershipOracle rational_line_oracle(const Curve& c) {
    const MultiPoly& f = c.poly();
    ProjLine l(f.coeff(Monomial({1, 0, 0})), f.coeff(Monomial({0, 1, 0})),
               f.coeff(Monomial({0, 0, 1})));
    auto st = std::make_shared<LinePointStream>(l);
    Curve copy = c;
    return MembershipOracle(
        c.field(), [copy](const ProjPoint& p) { return copy.contains(p); },
        [st]() { return st->next(); });
}

MembershipOracle rational_conic_oracle(const Curve& c) {
    GroundField k = c.field();
    PlanePointStream search(k);
    std::optional<ProjPoint> base;
    for (std::size_t i = 0; i < 4096 && !base; ++i) {
        ProjPoint p = *search.next();
        if (c.contains(p)) base = p;
    }
    if (!base) throw domain_error("no rational point found on the conic");
    struct State {
        ConicParam param;
        FieldEnumerator en;
        bool infinity_done = false;
    };
    auto st = std::make_shared<State>(State{parametrize_conic(c, *base), FieldEnumerator(k)});
    Curve copy = c;
    return MembershipOracle(
        k, [copy](const ProjPoint& p) { return copy.contains(p); },
        [st, k]() -> std::optional<ProjPoint> {
            const auto& m = st->param.map;
            if (!st->infinity_done) {
                st->infinity_done = true;
                return ProjPoint(m[0].eval({FieldElem::one(k), FieldElem::zero(k)}),
                                 m[1].eval({FieldElem::one(k), FieldElem::zero(k)}),
                                 m[2].eval({FieldElem::one(k), FieldElem::zero(k)}));
            }
            FieldElem t = *st->en.next();
            std::vector<FieldElem> args{t, FieldElem::one(k)};
            return ProjPoint(m[0].eval(args), m[1].eval(args), m[2].eval(args));
        });
}

} // namespace

MembershipOracle oracle_from_curve(const Curve& c) {
    if (!c.field().is_rational()) return finite_field_oracle(c);
    if (c.degree() == 1) return rational_line_oracle(c);
    if (c.degree() == 2) return rational_conic_oracle(c);
    throw domain_error("rational point enumeration needs a line or a conic");
}

std::vector<ProjPoint> sample_curve_points(const MembershipOracle& o, std::size_t n) {
    std::vector<ProjPoint> out;
    out.reserve(n);
    while (out.size() < n) {
        auto p = o.next();
        if (!p) throw domain_error("curve has fewer points than requested");
        if (!o.member(*p)) throw std::logic_error("enumerator strayed off the curve");
        if (std::find(out.begin(), out.end(), *p) != out.end()) continue;
        out.push_back(*p);
    }
    return out;
}

RecoveredEquation recover_equation(const std::vector<ProjPoint>& points,
                                   std::uint32_t max_degree) {
    if (points.empty()) throw domain_error("no points to recover from");
    if (max_degree < 1) throw domain_error("maximal degree must be positive");
    GroundField k = points[0].field();
    for (const auto& p : points)
        if (p.field() != k) throw domain_error("points live over different fields");

    auto fill_row = [&](Matrix& a, std::size_t row, const std::vector<Monomial>& basis,
                        const ProjPoint& p) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            FieldElem v = FieldElem::one(k);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::uint32_t e = 0; e < basis[j].e[i]; ++e) v *= p[i];
            a.at(row, j) = v;
        }
    };
    auto to_poly = [&](const std::vector<Monomial>& basis, const std::vector<FieldElem>& v) {
        MultiPoly f(k, 3);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!v[j].is_zero()) f.add_term(basis[j], v[j]);
        return f;
    };

    for (std::uint32_t d = 1; d <= max_degree; ++d) {
        auto basis = homogeneous_monomials(3, d);
        std::size_t cols = basis.size(), rows = cols - 1;
        if (points.size() < rows)
            throw domain_error("too few points to determine a curve of degree " +
                               std::to_string(d));
        Matrix a(k, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) fill_row(a, i, basis, points[i]);
        auto ns = a.null_space();
        if (ns.empty()) continue;

        if (ns.size() == 1) {
            MultiPoly f = to_poly(basis, ns[0]);
            bool ok = true;
            for (std::size_t i = rows; i < points.size() && ok; ++i)
                ok = f.eval(points[i].as_vector()).is_zero();
            if (ok) return RecoveredEquation{d, f.monic()};
            continue;
        }

        // the leading rows are in special position: decide against all points
        Matrix full(k, points.size(), cols);
        for (std::size_t i = 0; i < points.size(); ++i) fill_row(full, i, basis, points[i]);
        auto fns = full.null_space();
        if (fns.size() == 1) return RecoveredEquation{d, to_poly(basis, fns[0]).monic()};
        if (fns.size() > 1)
            throw domain_error("points underdetermine the curve at degree " + std::to_string(d));
    }
    throw domain_error("no curve of degree at most " + std::to_string(max_degree) +
                       " fits the points");
}

bool detect_low_degree(const MembershipOracle& o, const std::vector<Curve>& probes,
                       std::uint64_t n, std::size_t sample_limit) {
    if (probes.empty()) throw domain_error("probe set is empty");
    for (const auto& probe : probes)
        if (probe.degree() > n) throw domain_error("probe degree exceeds the bound");
    std::vector<ProjPoint> pts;
    while (pts.size() < sample_limit) {
        auto p = o.next();
        if (!p) break;
        pts.push_back(*p);
    }
    if (pts.empty()) throw domain_error("oracle yields no points");
    for (const auto& probe : probes) {
        std::uint64_t count = 0;
        for (const auto& p : pts)
            if (probe.contains(p)) ++count;
        if (count > n) return false;
    }
    return true;
}

} // namespace staudt
