#include "staudt/finset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace staudt {

FinSetK::FinSetK(const GroundField& k, std::vector<FieldElem> elems)
    : field_(k), elems_(std::move(elems)) {
    for (const auto& e : elems_)
        if (e.field() != field_) throw domain_error("set element from the wrong field");
    std::sort(elems_.begin(), elems_.end(), FieldElem::value_less);
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FinSetK::contains(const FieldElem& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e, FieldElem::value_less);
}

FinSetK FinSetK::with(const FieldElem& e) const {
    std::vector<FieldElem> v = elems_;
    v.push_back(e);
    return FinSetK(field_, std::move(v));
}

std::string FinSetK::str() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ", ";
        out << elems_[i].str();
    }
    out << "}";
    return out.str();
}

PairCode encode_pairs(const GroundField& k,
                      const std::vector<std::pair<FieldElem, FieldElem>>& xs) {
    std::vector<FieldElem> firsts, seconds;
    for (const auto& [x, y] : xs) {
        firsts.push_back(x);
        seconds.push_back(y);
    }
    FinSetK a(k, std::move(firsts));
    FinSetK b(k, std::move(seconds));
    const FieldElem one = FieldElem::one(k);

    std::uint64_t limit = k.is_rational() ? UINT64_MAX : k.p;
    for (std::uint64_t idx = 0; idx < limit; ++idx) {
        FieldElem alpha = canonical_element(k, idx);
        std::set<FieldElem, FieldElemValueLess> image;
        bool injective = true;
        for (const auto& x : a.elems()) {
            for (const auto& y : b.elems()) {
                if (!image.insert(alpha * x + y).second) {
                    injective = false;
                    break;
                }
            }
            if (!injective) break;
        }
        if (!injective) continue;
        std::vector<FieldElem> codes;
        for (const auto& [x, y] : xs) codes.push_back(alpha * x + y);
        return PairCode{std::move(a), std::move(b), alpha, one, FinSetK(k, std::move(codes))};
    }
    throw domain_error("field too small to code this set of pairs");
}

bool decode_member(const PairCode& code, const FieldElem& x, const FieldElem& y) {
    return code.a.contains(x) && code.b.contains(y) &&
           code.c.contains(code.alpha * x + code.beta * y);
}

bool valid_pair_code(const PairCode& code) {
    if (code.alpha.is_zero() && code.beta.is_zero()) return false;
    std::set<FieldElem, FieldElemValueLess> image;
    for (const auto& x : code.a.elems())
        for (const auto& y : code.b.elems())
            if (!image.insert(code.alpha * x + code.beta * y).second) return false;
    for (const auto& c : code.c.elems())
        if (!image.count(c)) return false;
    return true;
}

bool codes_equivalent(const PairCode& c1, const PairCode& c2) {
    for (const auto& x : c1.a.elems())
        for (const auto& y : c1.b.elems())
            if (decode_member(c1, x, y) != decode_member(c2, x, y)) return false;
    for (const auto& x : c2.a.elems())
        for (const auto& y : c2.b.elems())
            if (decode_member(c1, x, y) != decode_member(c2, x, y)) return false;
    return true;
}

TripleCode encode_triples(const GroundField& k,
                          const std::vector<std::array<FieldElem, 3>>& xs) {
    auto lex = [](const std::array<FieldElem, 3>& u, const std::array<FieldElem, 3>& v) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (FieldElem::value_less(u[i], v[i])) return true;
            if (FieldElem::value_less(v[i], u[i])) return false;
        }
        return false;
    };
    std::vector<std::array<FieldElem, 3>> sorted = xs;
    std::sort(sorted.begin(), sorted.end(), lex);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::array<std::vector<std::pair<FieldElem, FieldElem>>, 3> parts;
    std::set<FieldElem, FieldElemValueLess> used_tags;
    std::uint64_t limit = k.is_rational() ? UINT64_MAX : k.p;
    for (const auto& triple : sorted) {
        std::optional<FieldElem> tag;
        for (std::uint64_t idx = 0; idx < limit; ++idx) {
            FieldElem t = canonical_element(k, idx);
            if (!used_tags.count(t)) {
                tag = t;
                break;
            }
        }
        if (!tag) throw domain_error("field too small to supply fresh tags");
        used_tags.insert(*tag);
        for (std::size_t i = 0; i < 3; ++i) parts[i].emplace_back(triple[i], *tag);
    }
    return TripleCode{encode_pairs(k, parts[0]), encode_pairs(k, parts[1]),
                      encode_pairs(k, parts[2])};
}

bool decode_triple_member(const TripleCode& code, const FieldElem& x, const FieldElem& y,
                          const FieldElem& z) {
    for (const auto& t : code.x1.b.elems())
        if (decode_member(code.x1, x, t) && decode_member(code.x2, y, t) &&
            decode_member(code.x3, z, t))
            return true;
    return false;
}

std::optional<NatWitness> nat_witness(const FieldElem& x) {
    const GroundField& k = x.field();
    if (!k.is_rational()) {
        std::vector<FieldElem> all;
        for (std::uint64_t v = 0; v < k.p; ++v) all.push_back(FieldElem::residue(k, v));
        return NatWitness{x, FinSetK(k, std::move(all))};
    }
    const Rational& r = x.rat();
    if (denominator(r) != 1 || r < 0) return std::nullopt;
    std::vector<FieldElem> range;
    for (Rational v(0); v <= r; v += 1) range.push_back(FieldElem::from_rational(v));
    return NatWitness{x, FinSetK(k, std::move(range))};
}

bool verify_witness(const NatWitness& w) {
    const GroundField& k = w.f.field();
    if (w.x.field() != k) return false;
    const FieldElem zero = FieldElem::zero(k);
    const FieldElem one = FieldElem::one(k);
    if (!w.f.contains(zero) || !w.f.contains(w.x)) return false;
    for (const auto& z : w.f.elems()) {
        if (z != zero && !w.f.contains(z - one)) return false;
        if (z != w.x && !w.f.contains(z + one)) return false;
    }
    return true;
}

} // namespace staudt
