#include "staudt/curves.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

int qp_cmp(const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// Arithmetic in Q[t]/(g) for a monic irreducible g: the residue field a
// conjugate bundle lives in.
struct ModRing {
    QPoly g;

    QPoly reduce(QPoly a) const {
        a = uni::trim(std::move(a));
        if (uni::deg(a) < uni::deg(g)) return a;
        return uni::divmod(a, g).second;
    }
    QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(uni::mul(a, b)); }
    QPoly inv(const QPoly& a) const {
        QPoly r0 = g, r1 = reduce(a);
        QPoly t0, t1{Rational(1)};
        while (!uni::is_zero(r1)) {
            auto [q, r] = uni::divmod(r0, r1);
            QPoly t2 = uni::sub(t0, uni::mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (uni::deg(r0) != 0) throw domain_error("division by a non-unit in the residue field");
        return reduce(uni::scale(t0, Rational(1) / r0[0]));
    }
};

// Polynomials in one variable over Q[t]/(g), index = power, zero coefficients
// stored as empty vectors and the top coefficient always nonzero.
using KPoly = std::vector<QPoly>;

void kp_trim(KPoly& a) {
    while (!a.empty() && uni::is_zero(a.back())) a.pop_back();
}

int kp_deg(const KPoly& a) { return static_cast<int>(a.size()) - 1; }

KPoly kp_monic(const ModRing& r, KPoly a) {
    QPoly lead_inv = r.inv(a.back());
    for (auto& c : a) c = r.mul(c, lead_inv);
    return a;
}

// b must be monic
std::pair<KPoly, KPoly> kp_divmod(const ModRing& r, KPoly a, const KPoly& b) {
    if (a.size() < b.size()) return {KPoly{}, std::move(a)};
    KPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        QPoly c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = uni::sub(a[shift + i], r.mul(c, b[i]));
        kp_trim(a);
    }
    kp_trim(q);
    return {std::move(q), std::move(a)};
}

KPoly kp_gcd(const ModRing& r, KPoly a, KPoly b) {
    kp_trim(a);
    kp_trim(b);
    while (!b.empty()) {
        KPoly bm = kp_monic(r, std::move(b));
        KPoly rem = kp_divmod(r, std::move(a), bm).second;
        a = std::move(bm);
        b = std::move(rem);
    }
    if (!a.empty()) a = kp_monic(r, std::move(a));
    return a;
}

KPoly kp_derivative(const KPoly& a) {
    KPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(uni::scale(a[i], Rational(i)));
    kp_trim(out);
    return out;
}

// a monic; returns the monic product of the distinct irreducible factors
KPoly kp_squarefree(const ModRing& r, const KPoly& a) {
    KPoly g = kp_gcd(r, a, kp_derivative(a));
    if (kp_deg(g) <= 0) return a;
    auto [q, rem] = kp_divmod(r, a, g);
    if (!rem.empty()) throw std::logic_error("squarefree split failed in the residue field");
    return q;
}

MultiPoly mpow(const MultiPoly& f, std::uint64_t n) {
    MultiPoly out = MultiPoly::constant(f.field(), f.nvars(), FieldElem::one(f.field()));
    for (std::uint64_t i = 0; i < n; ++i) out *= f;
    return out;
}

ProjLine line_of(const Curve& c) {
    const MultiPoly& f = c.poly();
    return ProjLine(f.coeff(Monomial({1, 0, 0})), f.coeff(Monomial({0, 1, 0})),
                    f.coeff(Monomial({0, 0, 1})));
}

// Coefficients of x0^i as polynomials in t, after (x1, x2) -> (t, 1).
std::vector<QPoly> fiber_generic(const MultiPoly& f) {
    std::vector<QPoly> out(f.degree_in(0) + 1);
    for (const auto& [m, c] : f.terms()) {
        QPoly& q = out[m.e[0]];
        if (q.size() <= m.e[1]) q.resize(m.e[1] + 1, Rational(0));
        q[m.e[1]] += c.rat();
    }
    for (auto& q : out) q = uni::trim(std::move(q));
    return out;
}

QPoly fiber_at(const std::vector<QPoly>& coeffs, const Rational& t0) {
    QPoly out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(uni::eval(c, t0));
    return uni::trim(std::move(out));
}

// (x1, x2) -> (1, 0)
QPoly fiber_at_infinity(const MultiPoly& f) {
    QPoly out(f.degree_in(0) + 1, Rational(0));
    for (const auto& [m, c] : f.terms())
        if (m.e[2] == 0) out[m.e[0]] += c.rat();
    return uni::trim(std::move(out));
}

// One point chart coordinate [x0(t) : t : 1] mapped through the columns of
// tr, reduced mod q and normalized so the first nonzero coordinate is 1.
ConjugateBundle make_bundle(const QPoly& q, const Matrix& tr, const QPoly& x0) {
    ModRing r{q};
    std::array<QPoly, 3> crd;
    for (std::size_t row = 0; row < 3; ++row) {
        QPoly acc = uni::scale(x0, tr.at(row, 0).rat());
        acc = uni::add(acc, uni::scale(QPoly{Rational(0), Rational(1)}, tr.at(row, 1).rat()));
        acc = uni::add(acc, uni::trim(QPoly{tr.at(row, 2).rat()}));
        crd[row] = r.reduce(std::move(acc));
    }
    std::size_t lead = 0;
    while (lead < 3 && uni::is_zero(crd[lead])) ++lead;
    if (lead == 3) throw std::logic_error("conjugate point has no nonzero coordinate");
    QPoly lead_inv = r.inv(crd[lead]);
    for (auto& c : crd) c = r.mul(c, lead_inv);
    return ConjugateBundle{q, crd};
}

// Same normalization for a bundle drawn from a parameter value of phi.
ConjugateBundle make_param_bundle(const QPoly& q, const std::array<MultiPoly, 3>& phi) {
    ModRing r{q};
    std::array<QPoly, 3> crd;
    for (std::size_t i = 0; i < 3; ++i) {
        QPoly w;
        for (const auto& [m, c] : phi[i].terms()) {
            if (w.size() <= m.e[0]) w.resize(m.e[0] + 1, Rational(0));
            w[m.e[0]] += c.rat();
        }
        crd[i] = r.reduce(uni::trim(std::move(w)));
    }
    std::size_t lead = 0;
    while (lead < 3 && uni::is_zero(crd[lead])) ++lead;
    if (lead == 3) throw std::logic_error("conjugate point has no nonzero coordinate");
    QPoly lead_inv = r.inv(crd[lead]);
    for (auto& c : crd) c = r.mul(c, lead_inv);
    return ConjugateBundle{q, crd};
}

ProjPoint eval_map(const std::array<MultiPoly, 3>& phi, const FieldElem& s, const FieldElem& u) {
    FieldElem a = phi[0].eval({s, u}), b = phi[1].eval({s, u}), c = phi[2].eval({s, u});
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::logic_error("parametrization has a base point");
    return ProjPoint(a, b, c);
}

// True exactly when w meets c at p and nowhere else over the closure (over a
// finite field: nowhere else among rational points of the line w).
bool meets_exactly_at(const Curve& c, const Curve& w, const ProjPoint& p) {
    if (c.field().is_rational()) {
        IntersectionRecord rec = intersect_curves(c, w);
        return rec.entries.size() == 1 && std::holds_alternative<ProjPoint>(rec.entries[0].locus) &&
               std::get<ProjPoint>(rec.entries[0].locus) == p;
    }
    LinePointStream st(line_of(w));
    bool seen = false;
    while (auto q = st.next()) {
        if (!c.contains(*q)) continue;
        if (*q != p) return false;
        seen = true;
    }
    return seen;
}

// Joint canonical rescaling of the three component forms: over Q coprime
// integer coefficients with the first nonzero component lex-leading positive,
// over F_p that leading coefficient normalized to 1.
void normalize_map(std::array<MultiPoly, 3>& map, const GroundField& k) {
    std::size_t lead = 0;
    while (lead < 3 && map[lead].is_zero()) ++lead;
    if (lead == 3) throw std::logic_error("zero parametrization");
    if (!k.is_rational()) {
        FieldElem inv = map[lead].leading_coeff().inverse();
        for (auto& f : map) f = f.scaled(inv);
        return;
    }
    Integer den = 1, num = 0;
    for (const auto& f : map)
        for (const auto& [m, c] : f.terms()) {
            den = boost::multiprecision::lcm(den, Integer(boost::multiprecision::denominator(c.rat())));
            num = boost::multiprecision::gcd(num, Integer(boost::multiprecision::numerator(c.rat())));
        }
    FieldElem s = FieldElem::from_rational(Rational(den, num));
    for (auto& f : map) f = f.scaled(s);
    if (map[lead].leading_coeff().rat() < 0)
        for (auto& f : map) f = f.scaled(FieldElem::from_int(k, -1));
}

// Zeros of the pullback (a homogeneous form in (s, u)) as parameter loci of
// phi, added to the divisor with the given sign.
void accumulate_zeros(Divisor& out, const MultiPoly& pull, long long sign,
                      const std::array<MultiPoly, 3>& phi) {
    GroundField k = pull.field();
    std::uint64_t m = *pull.homogeneous_degree();
    QPoly a(m + 1, Rational(0));
    for (const auto& [mo, c] : pull.terms()) a[mo.e[0]] += c.rat();
    a = uni::trim(std::move(a));
    std::uint64_t inf_mult = m - static_cast<std::uint64_t>(uni::deg(a));
    for (const auto& fa : factor_rational_poly(a).factors) {
        long long coeff = sign * static_cast<long long>(fa.multiplicity);
        if (uni::deg(fa.poly) == 1) {
            Rational t0 = -fa.poly[0];
            out.add(eval_map(phi, FieldElem::from_rational(t0), FieldElem::one(k)), coeff);
        } else {
            out.add(make_param_bundle(fa.poly, phi), coeff);
        }
    }
    if (inf_mult > 0)
        out.add(eval_map(phi, FieldElem::one(k), FieldElem::zero(k)),
                sign * static_cast<long long>(inf_mult));
}

Divisor divisor_via_map(const std::array<MultiPoly, 3>& phi, const MultiPoly& num,
                        const MultiPoly& den) {
    for (const MultiPoly* f : {&num, &den}) {
        if (f->nvars() != 3 || !f->field().is_rational())
            throw domain_error("function components must be rational forms in three variables");
        if (f->is_zero()) throw domain_error("the zero polynomial defines no function");
        if (!f->is_homogeneous()) throw domain_error("function components must be homogeneous");
    }
    std::uint64_t dn = *num.homogeneous_degree(), dd = *den.homogeneous_degree();
    if (dn == 0 && dd == 0) return Divisor{};
    if (dn == 0 || dd == 0)
        throw domain_error("a constant cannot be balanced against a positive degree");
    std::uint64_t l = std::lcm(dn, dd);
    MultiPoly a = mpow(num, l / dn).compose({phi[0], phi[1], phi[2]});
    if (a.is_zero()) throw domain_error("numerator vanishes identically on the curve");
    MultiPoly b = mpow(den, l / dd).compose({phi[0], phi[1], phi[2]});
    if (b.is_zero()) throw domain_error("denominator vanishes identically on the curve");
    Divisor out;
    accumulate_zeros(out, a, 1, phi);
    accumulate_zeros(out, b, -1, phi);
    if (out.degree() != 0) throw std::logic_error("divisor of a function must have degree zero");
    return out;
}

} // namespace

bool ConjugateBundle::operator==(const ConjugateBundle& o) const {
    return min_poly == o.min_poly && coords == o.coords;
}

bool ConjugateBundle::operator<(const ConjugateBundle& o) const {
    if (int c = qp_cmp(min_poly, o.min_poly); c != 0) return c < 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (int c = qp_cmp(coords[i], o.coords[i]); c != 0) return c < 0;
    return false;
}

std::string ConjugateBundle::str() const {
    std::ostringstream os;
    os << "([" << uni::str(coords[0]) << " : " << uni::str(coords[1]) << " : "
       << uni::str(coords[2]) << "] where " << uni::str(min_poly) << " = 0)";
    return os.str();
}

bool locus_equal(const PointLocus& a, const PointLocus& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<ProjPoint>(a))
        return std::get<ProjPoint>(a) == std::get<ProjPoint>(b);
    return std::get<ConjugateBundle>(a) == std::get<ConjugateBundle>(b);
}

bool locus_less(const PointLocus& a, const PointLocus& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<ProjPoint>(a))
        return std::get<ProjPoint>(a) < std::get<ProjPoint>(b);
    return std::get<ConjugateBundle>(a) < std::get<ConjugateBundle>(b);
}

std::uint64_t locus_size(const PointLocus& l) {
    return std::holds_alternative<ProjPoint>(l) ? 1 : std::get<ConjugateBundle>(l).size();
}

std::string locus_str(const PointLocus& l) {
    return std::holds_alternative<ProjPoint>(l) ? std::get<ProjPoint>(l).str()
                                                : std::get<ConjugateBundle>(l).str();
}

std::string IntersectionRecord::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << locus_str(entries[i].locus) << "^" << entries[i].multiplicity;
    }
    os << "} total " << total;
    return os.str();
}

IntersectionRecord intersect_curves(const Curve& c, const Curve& d) {
    if (c.field() != d.field()) throw domain_error("curves live over different fields");
    if (!c.field().is_rational())
        throw domain_error("curve intersection is implemented over the rationals only");
    GroundField k = c.field();
    const std::uint64_t budget = static_cast<std::uint64_t>(c.degree()) * d.degree();

    PlanePointStream centers(k);
    int attempts = 0;
    for (std::size_t drawn = 0; drawn < 512 && attempts < 64; ++drawn) {
        ProjPoint z = *centers.next();
        if (c.poly().eval(z.as_vector()).is_zero() || d.poly().eval(z.as_vector()).is_zero())
            continue;
        ++attempts;

        // complete the center to a basis with two standard vectors
        std::size_t piv = 0;
        while (z[piv].is_zero()) ++piv;
        Matrix tr(k, 3, 3);
        for (std::size_t row = 0; row < 3; ++row) tr.at(row, 0) = z[row];
        std::size_t col = 1;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != piv) tr.at(i, col++) = FieldElem::one(k);

        Curve c1 = c.pulled_back(tr), d1 = d.pulled_back(tr);
        MultiPoly res = resultant(c1.poly(), d1.poly(), 0);
        if (res.is_zero()) throw domain_error("curves share a common component");
        if (!res.is_homogeneous() || res.homogeneous_degree() != budget)
            throw std::logic_error("resultant degree out of balance");

        QPoly rt(budget + 1, Rational(0));
        for (const auto& [m, co] : res.terms()) rt[m.e[1]] += co.rat();
        rt = uni::trim(std::move(rt));
        std::uint64_t inf_mult = budget - static_cast<std::uint64_t>(uni::deg(rt));

        auto coef_c = fiber_generic(c1.poly());
        auto coef_d = fiber_generic(d1.poly());

        std::vector<IntersectionEntry> entries;
        bool good = true;

        // fiber over a rational parameter: at_inf selects (1 : 0)
        auto rational_fiber = [&](const Rational& t0, bool at_inf, std::uint64_t mult) {
            QPoly f = at_inf ? fiber_at_infinity(c1.poly()) : fiber_at(coef_c, t0);
            QPoly g = at_inf ? fiber_at_infinity(d1.poly()) : fiber_at(coef_d, t0);
            QPoly h = uni::gcd(f, g);
            if (uni::deg(h) < 1) throw std::logic_error("resultant root without a fiber point");
            QPoly s = squarefree_part(h);
            if (uni::deg(s) != 1) return false;
            FieldElem x0 = FieldElem::from_rational(-(s[0] / s[1]));
            ProjPoint chart = at_inf
                                  ? ProjPoint(x0, FieldElem::one(k), FieldElem::zero(k))
                                  : ProjPoint(x0, FieldElem::from_rational(t0), FieldElem::one(k));
            entries.push_back({transform_point(tr, chart), mult});
            return true;
        };

        auto bundle_fiber = [&](const QPoly& q, std::uint64_t mult) {
            ModRing r{q};
            KPoly f, g;
            for (const auto& co : coef_c) f.push_back(r.reduce(co));
            for (const auto& co : coef_d) g.push_back(r.reduce(co));
            KPoly h = kp_gcd(r, std::move(f), std::move(g));
            if (kp_deg(h) < 1) throw std::logic_error("resultant root without a fiber point");
            KPoly s = kp_squarefree(r, h);
            if (kp_deg(s) != 1) return false;
            entries.push_back({make_bundle(q, tr, uni::scale(s[0], Rational(-1))), mult});
            return true;
        };

        for (const auto& fa : factor_rational_poly(rt).factors) {
            good = uni::deg(fa.poly) == 1 ? rational_fiber(-fa.poly[0], false, fa.multiplicity)
                                          : bundle_fiber(fa.poly, fa.multiplicity);
            if (!good) break;
        }
        if (good && inf_mult > 0) good = rational_fiber(Rational(0), true, inf_mult);
        if (!good) continue; // two points share a fiber line: try the next center

        IntersectionRecord rec;
        rec.entries = std::move(entries);
        std::sort(rec.entries.begin(), rec.entries.end(),
                  [](const IntersectionEntry& a, const IntersectionEntry& b) {
                      return locus_less(a.locus, b.locus);
                  });
        for (const auto& e : rec.entries) rec.total += e.multiplicity * locus_size(e.locus);
        if (rec.total != budget) throw std::logic_error("intersection count out of balance");
        return rec;
    }
    throw resource_limit_error("exhausted projection centers for curve intersection");
}

Curve tangent_line(const Curve& c, const ProjPoint& p) {
    if (!c.contains(p)) throw domain_error("point does not lie on the curve");
    auto v = p.as_vector();
    FieldElem a = c.partial(0).eval(v), b = c.partial(1).eval(v), e = c.partial(2).eval(v);
    if (a.is_zero() && b.is_zero() && e.is_zero())
        throw domain_error("curve is singular at the point");
    return Curve(ProjLine(a, b, e).form());
}

Curve prefactorial_witness(const Curve& c, const ProjPoint& p) {
    if (!c.contains(p)) throw domain_error("point does not lie on the curve");
    if (c.degree() > 2)
        throw domain_error("witness construction is limited to lines and conics");
    std::optional<Curve> w;
    if (c.degree() == 2) {
        if (conic_classify(c.poly()) != ConicClass::smooth)
            throw domain_error("witness construction needs a smooth conic");
        w = tangent_line(c, p);
    } else {
        ProjLine l = line_of(c);
        PlanePointStream stream(c.field());
        while (auto q = stream.next()) {
            if (l.incident(*q)) continue;
            w = Curve(line_through(p, *q).form());
            break;
        }
        if (!w) throw std::logic_error("no point off the line");
    }
    if (!meets_exactly_at(c, *w, p)) throw std::logic_error("witness verification failed");
    return *w;
}

std::string ConicParam::str() const {
    std::vector<std::string> names{"s", "u"};
    std::ostringstream os;
    os << "[" << map[0].str(names) << " : " << map[1].str(names) << " : " << map[2].str(names)
       << "]";
    return os.str();
}

ConicParam parametrize_conic(const Curve& c, const ProjPoint& p0) {
    if (c.degree() != 2) throw domain_error("parametrization needs a conic");
    if (conic_classify(c.poly()) != ConicClass::smooth)
        throw domain_error("parametrization needs a smooth conic");
    if (!c.contains(p0)) throw domain_error("base point does not lie on the conic");
    GroundField k = c.field();
    FieldElem two = FieldElem::from_int(k, 2);
    FieldElem half = two.inverse();

    // symmetric matrix of the quadratic form
    Matrix m(k, 3, 3);
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = i; j < 3; ++j) {
            Monomial mo(3);
            ++mo.e[i];
            ++mo.e[j];
            FieldElem co = c.poly().coeff(mo);
            if (i == j) {
                m.at(i, i) = co;
            } else {
                m.at(i, j) = co * half;
                m.at(j, i) = m.at(i, j);
            }
        }

    // a coordinate line avoiding p0, spanned by two standard basis points
    std::array<std::size_t, 2> sp{1, 2};
    if (!p0[2].is_zero())
        sp = {0, 1};
    else if (!p0[1].is_zero())
        sp = {0, 2};
    std::array<MultiPoly, 3> v{MultiPoly::zero(k, 2), MultiPoly::zero(k, 2),
                               MultiPoly::zero(k, 2)};
    v[sp[0]] = MultiPoly::variable(k, 2, 0);
    v[sp[1]] = MultiPoly::variable(k, 2, 1);

    // second intersection of the line p0--v with the conic:
    // phi = F(v) p0 - 2 B(p0, v) v
    MultiPoly q = c.poly().compose({v[0], v[1], v[2]});
    MultiPoly lform = MultiPoly::zero(k, 2);
    for (std::size_t j = 0; j < 3; ++j) {
        FieldElem w = FieldElem::zero(k);
        for (std::size_t i = 0; i < 3; ++i) w += p0[i] * m.at(i, j);
        lform += v[j].scaled(w);
    }
    std::array<MultiPoly, 3> map{MultiPoly::zero(k, 2), MultiPoly::zero(k, 2),
                                 MultiPoly::zero(k, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        map[i] = q.scaled(p0[i]) - (lform * v[i]).scaled(two);
    normalize_map(map, k);

    // the tangent direction through p0 is the parameter mapping to p0
    FieldElem alpha = lform.coeff(Monomial({1, 0})), beta = lform.coeff(Monomial({0, 1}));
    if (alpha.is_zero() && beta.is_zero())
        throw std::logic_error("degenerate pencil for the parametrization");
    std::array<FieldElem, 2> bp{FieldElem::zero(k), FieldElem::one(k)};
    if (!beta.is_zero()) bp = {FieldElem::one(k), alpha * (-beta).inverse()};

    if (!c.poly().compose({map[0], map[1], map[2]}).is_zero())
        throw std::logic_error("parametrization does not satisfy the conic");
    if (eval_map(map, bp[0], bp[1]) != p0)
        throw std::logic_error("parametrization misses its base point");
    return ConicParam{c.poly(), p0, map, bp};
}

void Divisor::add(const PointLocus& l, long long c) {
    if (c == 0) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), l,
        [](const DivisorTerm& t, const PointLocus& x) { return locus_less(t.locus, x); });
    if (it != terms_.end() && locus_equal(it->locus, l)) {
        it->coeff += c;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, DivisorTerm{l, c});
    }
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& t : terms_) d += t.coeff * static_cast<long long>(locus_size(t.locus));
    return d;
}

Divisor Divisor::operator-() const {
    Divisor out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor out(*this);
    for (const auto& t : o.terms_) out.add(t.locus, t.coeff);
    return out;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

bool Divisor::operator==(const Divisor& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !locus_equal(terms_[i].locus, o.terms_[i].locus))
            return false;
    return true;
}

std::string Divisor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        long long c = terms_[i].coeff;
        if (i == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << locus_str(terms_[i].locus);
    }
    return os.str();
}

Divisor divisor_of_function(const Curve& line, const MultiPoly& num, const MultiPoly& den) {
    if (line.degree() != 1) throw domain_error("divisor support must be a line here");
    if (!line.field().is_rational())
        throw domain_error("divisors are implemented over the rationals only");
    LinePointStream st(line_of(line));
    ProjPoint a = *st.next(), b = *st.next();
    GroundField k = line.field();
    std::array<MultiPoly, 3> phi{MultiPoly::zero(k, 2), MultiPoly::zero(k, 2),
                                 MultiPoly::zero(k, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        phi[i] = MultiPoly::variable(k, 2, 0).scaled(a[i]) +
                 MultiPoly::variable(k, 2, 1).scaled(b[i]);
    return divisor_via_map(phi, num, den);
}

Divisor divisor_of_function(const Curve& conic, const ConicParam& param, const MultiPoly& num,
                            const MultiPoly& den) {
    if (conic.degree() != 2) throw domain_error("divisor support must be a conic here");
    if (!conic.field().is_rational())
        throw domain_error("divisors are implemented over the rationals only");
    if (param.conic != conic.poly())
        throw domain_error("parametrization belongs to a different conic");
    return divisor_via_map(param.map, num, den);
}

bool check_torsion_divisor(const Curve& conic, const ProjPoint& p1, const ProjPoint& p2,
                           const Curve& f1, const Curve& f2) {
    if (conic.degree() != 2) throw domain_error("torsion check needs a conic");
    if (!conic.field().is_rational())
        throw domain_error("torsion check is implemented over the rationals only");
    if (!conic.contains(p1) || !conic.contains(p2))
        throw domain_error("points must lie on the conic");
    if (!meets_exactly_at(conic, f1, p1))
        throw domain_error("first witness meets the conic beyond its point");
    if (!meets_exactly_at(conic, f2, p2))
        throw domain_error("second witness meets the conic beyond its point");
    std::uint64_t d1 = f1.degree(), d2 = f2.degree();
    ConicParam param = parametrize_conic(conic, p1);
    Divisor div =
        divisor_of_function(conic, param, mpow(f1.poly(), d2), mpow(f2.poly(), d1));
    long long n = 2LL * static_cast<long long>(d1) * static_cast<long long>(d2);
    Divisor target;
    target.add(PointLocus(p1), n);
    target.add(PointLocus(p2), -n);
    return div == target;
}

std::uint64_t genus_of_degree(std::uint64_t d) {
    if (d < 1) throw domain_error("degree must be positive");
    return (d - 1) * (d - 2) / 2;
}

} // namespace staudt
