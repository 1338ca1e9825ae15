#include "staudt/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

// deterministic total order on polynomials: descending term walk
bool poly_lex_less(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (lex_less(ia->first, ib->first)) return true;
        if (lex_less(ib->first, ia->first)) return false;
        if (FieldElem::value_less(ia->second, ib->second)) return true;
        if (FieldElem::value_less(ib->second, ia->second)) return false;
    }
    return ia == ea && ib != eb;
}

struct Entry {
    MultiPoly p;                  // monic
    std::vector<MultiPoly> cof;   // p == sum cof[j] * gen[j]
};

// one reduction pass: subtract multiples of entries until no support
// monomial of r is divisible by any entry's initial monomial
void reduce_tracked(MultiPoly& r, std::vector<MultiPoly>& cof, const std::vector<Entry>& entries) {
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            const Monomial& m = it->first;
            for (const auto& e : entries) {
                const Monomial& lt = e.p.leading_monomial();
                if (!lt.divides(m)) continue;
                FieldElem c = it->second;
                Monomial q = m.quotient(lt);
                r -= e.p.times_monomial(q, c);
                for (std::size_t j = 0; j < cof.size(); ++j)
                    cof[j] += e.cof[j].times_monomial(q, c);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

MultiPoly reverse_vars(const MultiPoly& p) {
    MultiPoly r = MultiPoly::zero(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial rm = m;
        std::reverse(rm.e.begin(), rm.e.end());
        r.add_term(rm, c);
    }
    return r;
}

} // namespace

Ideal::Ideal(const GroundField& k, std::uint32_t nvars, std::vector<MultiPoly> gens)
    : field_(k), nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.field() != field_) throw domain_error("ideal generator over the wrong field");
        if (g.nvars() != nvars_) throw domain_error("ideal generator with the wrong arity");
        if (g.is_zero()) throw domain_error("ideal generators must be nonzero");
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    return basis_.size() == 1 && basis_[0].total_degree() == 0;
}

MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder&) {
    if (p.is_zero() || q.is_zero()) throw domain_error("S-polynomial of the zero polynomial");
    MultiPoly pm = p.monic(), qm = q.monic();
    Monomial l = Monomial::lcm(pm.leading_monomial(), qm.leading_monomial());
    return pm.times_monomial(l.quotient(pm.leading_monomial()), FieldElem::one(p.field())) -
           qm.times_monomial(l.quotient(qm.leading_monomial()), FieldElem::one(p.field()));
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder&, std::vector<MultiPoly>* quotients) {
    std::vector<Entry> entries;
    entries.reserve(basis.size());
    // cofactors over the basis itself: unit vectors
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) throw domain_error("zero element in a divisor list");
        std::vector<MultiPoly> unit(basis.size(), MultiPoly::zero(p.field(), p.nvars()));
        FieldElem lc = basis[i].leading_coeff();
        unit[i] = MultiPoly::constant(p.field(), p.nvars(), lc.inverse());
        entries.push_back(Entry{basis[i].monic(), std::move(unit)});
    }
    MultiPoly r = p;
    std::vector<MultiPoly> cof(basis.size(), MultiPoly::zero(p.field(), p.nvars()));
    reduce_tracked(r, cof, entries);
    if (quotients) *quotients = std::move(cof);
    return r;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g) {
    return normal_form(p, g.basis(), g.order());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord) {
    const GroundField& k = ideal.field();
    const std::uint32_t n = ideal.nvars();
    const std::size_t ngens = ideal.gens().size();

    auto zero = [&] { return MultiPoly::zero(k, n); };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < ngens; ++i) {
        const MultiPoly& g = ideal.gens()[i];
        std::vector<MultiPoly> cof(ngens, zero());
        cof[i] = MultiPoly::constant(k, n, g.leading_coeff().inverse());
        entries.push_back(Entry{g.monic(), std::move(cof)});
    }

    // pending pairs keyed by the normal strategy: lcm degree, lcm, then ids
    struct PairKey {
        std::uint64_t degree;
        Monomial l;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (lex_less(l, o.l)) return true;
            if (lex_less(o.l, l)) return false;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> pending;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            Monomial l = Monomial::lcm(entries[i].p.leading_monomial(),
                                       entries[upto].p.leading_monomial());
            pending.insert(PairKey{l.degree(), l, i, upto});
        }
    };
    for (std::size_t t = 1; t < entries.size(); ++t) push_pairs(t);

    while (!pending.empty()) {
        PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const Monomial& lti = entries[key.i].p.leading_monomial();
        const Monomial& ltj = entries[key.j].p.leading_monomial();
        if (monomial_coprime(lti, ltj)) continue;
        Monomial l = Monomial::lcm(lti, ltj);
        MultiPoly s = entries[key.i].p.times_monomial(l.quotient(lti), FieldElem::one(k)) -
                      entries[key.j].p.times_monomial(l.quotient(ltj), FieldElem::one(k));
        // reduce_tracked keeps r + sum cof*gen constant, so seed with the
        // negated expansion of s: the final r is then -sum cof*gen
        std::vector<MultiPoly> cof(ngens, zero());
        for (std::size_t t = 0; t < ngens; ++t)
            cof[t] = entries[key.j].cof[t].times_monomial(l.quotient(ltj), FieldElem::one(k)) -
                     entries[key.i].cof[t].times_monomial(l.quotient(lti), FieldElem::one(k));
        reduce_tracked(s, cof, entries);
        if (s.is_zero()) continue;
        FieldElem inv = s.leading_coeff().inverse();
        s = s.scaled(inv);
        for (auto& c : cof) c = (-c).scaled(inv);
        entries.push_back(Entry{std::move(s), std::move(cof)});
        push_pairs(entries.size() - 1);
    }

    // minimal basis: one entry per Dickson-minimal initial monomial
    std::vector<Monomial> lts;
    lts.reserve(entries.size());
    for (const auto& e : entries) lts.push_back(e.p.leading_monomial());
    std::vector<Monomial> minimal = dickson_basis(lts);
    std::vector<Entry> kept;
    for (const auto& m : minimal) {
        for (const auto& e : entries) {
            if (e.p.leading_monomial() == m) {
                kept.push_back(e);
                break;
            }
        }
    }

    // full reduction of each element against the others, to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Entry> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            MultiPoly r = kept[i].p;
            std::vector<MultiPoly> delta(ngens, zero());
            reduce_tracked(r, delta, others);
            if (r == kept[i].p) continue;
            changed = true;
            if (r.is_zero()) throw domain_error("internal: minimal basis element reduced to zero");
            FieldElem inv = r.leading_coeff().inverse();
            for (std::size_t t = 0; t < ngens; ++t)
                kept[i].cof[t] = (kept[i].cof[t] - delta[t]).scaled(inv);
            kept[i].p = r.scaled(inv);
        }
    }

    std::sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) {
        return lex_less(b.p.leading_monomial(), a.p.leading_monomial());
    });

    GroebnerBasis out(ideal, ord);
    for (auto& e : kept) {
        out.basis_.push_back(std::move(e.p));
        out.cofactors_.push_back(std::move(e.cof));
    }
    return out;
}

bool ideal_member(const MultiPoly& p, const Ideal& ideal) {
    if (p.field() != ideal.field() || p.nvars() != ideal.nvars())
        throw domain_error("membership query in the wrong ring");
    return normal_form(p, buchberger(ideal)).is_zero();
}

Ideal eliminate(const Ideal& ideal, std::uint32_t keep) {
    if (keep > ideal.nvars()) throw domain_error("cannot keep more variables than the ring has");
    GroebnerBasis g = buchberger(ideal);
    const std::uint32_t cut = ideal.nvars() - keep;
    std::vector<MultiPoly> out;
    for (const auto& b : g.basis()) {
        bool kept_only = true;
        for (const auto& [m, c] : b.terms()) {
            for (std::uint32_t v = 0; v < cut && kept_only; ++v)
                if (m.e[v] != 0) kept_only = false;
            if (!kept_only) break;
        }
        if (kept_only) out.push_back(b);
    }
    return Ideal(ideal.field(), ideal.nvars(), std::move(out));
}

bool GenericZeroDescription::evaluates_to_zero(const MultiPoly& p) const {
    return normal_form(reverse_vars(p), reversed_basis_).is_zero();
}

GenericZeroDescription generic_zero(const Ideal& ideal) {
    const std::uint32_t n = ideal.nvars();
    std::vector<MultiPoly> rev_gens;
    rev_gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) rev_gens.push_back(reverse_vars(g));
    GroebnerBasis rgb = buchberger(Ideal(ideal.field(), n, std::move(rev_gens)));
    if (rgb.is_unit_ideal()) throw domain_error("the unit ideal has no generic zero");

    GenericZeroDescription out;
    out.reversed_basis_ = rgb.basis();
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t j = n - 1 - k; // the variable in reversed indexing
        // basis elements supported on reversed variables >= j+1: the tower below
        std::vector<MultiPoly> lower;
        std::vector<const MultiPoly*> involving;
        for (const auto& b : rgb.basis()) {
            bool lower_only = true, block_only = true;
            for (const auto& [m, c] : b.terms()) {
                for (std::uint32_t v = 0; v < j && (lower_only || block_only); ++v)
                    if (m.e[v] != 0) lower_only = block_only = false;
                if (m.e[j] != 0) lower_only = false;
                if (!lower_only && !block_only) break;
            }
            if (lower_only) lower.push_back(b);
            else if (block_only && b.degree_in(j) >= 1) involving.push_back(&b);
        }
        const MultiPoly* best = nullptr;
        for (const MultiPoly* cand : involving) {
            MultiPoly top = cand->coefficients_in(j).back();
            if (normal_form(top, lower).is_zero()) continue;
            if (!best || cand->degree_in(j) < best->degree_in(j) ||
                (cand->degree_in(j) == best->degree_in(j) && poly_lex_less(*cand, *best)))
                best = cand;
        }
        TowerEntry entry;
        if (best) {
            entry.algebraic = true;
            entry.min_poly = reverse_vars(*best).monic();
        }
        out.entries_.push_back(std::move(entry));
    }
    return out;
}

} // namespace staudt
