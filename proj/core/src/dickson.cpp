#include "staudt/dickson.hpp"

#include <algorithm>

namespace staudt {

bool dominates(const Monomial& u, const Monomial& v) {
    return v.divides(u);
}

std::vector<Monomial> dickson_basis(std::vector<Monomial> elems) {
    if (elems.empty()) return {};
    const std::size_t arity = elems.front().arity();
    for (const auto& m : elems)
        if (m.arity() != arity) throw domain_error("mixed arities in dominance basis input");
    std::sort(elems.begin(), elems.end(), lex_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Monomial> basis;
    for (const auto& m : elems) {
        bool minimal = true;
        for (const auto& other : elems) {
            if (other != m && dominates(m, other)) {
                minimal = false;
                break;
            }
        }
        if (minimal) basis.push_back(m);
    }
    return basis;
}

Monomial initial_monomial(const MultiPoly& p, const MonomialOrder&) {
    return p.leading_monomial();
}

} // namespace staudt
