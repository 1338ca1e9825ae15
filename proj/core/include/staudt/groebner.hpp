#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "staudt/dickson.hpp"
#include "staudt/poly.hpp"

namespace staudt {

// Finitely generated ideal of K[x0..x_{n-1}]. Generators must be nonzero and
// share field and arity; the empty list is the zero ideal.
class Ideal {
public:
    Ideal(const GroundField& k, std::uint32_t nvars, std::vector<MultiPoly> gens);

    const GroundField& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::vector<MultiPoly>& gens() const { return gens_; }

private:
    GroundField field_;
    std::uint32_t nvars_;
    std::vector<MultiPoly> gens_;
};

// Reduced basis: monic elements, no S-polynomial survives reduction, no
// element's initial monomial divides another's, no tail monomial reducible.
class GroebnerBasis {
public:
    const std::vector<MultiPoly>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    const Ideal& ideal() const { return ideal_; }

    // basis()[i] == sum over j of cofactors()[i][j] * ideal().gens()[j]
    const std::vector<std::vector<MultiPoly>>& cofactors() const { return cofactors_; }

    bool is_unit_ideal() const;

private:
    friend GroebnerBasis buchberger(const Ideal&, const MonomialOrder&);
    GroebnerBasis(Ideal ideal, MonomialOrder order) : ideal_(std::move(ideal)), order_(order) {}

    Ideal ideal_;
    MonomialOrder order_;
    std::vector<MultiPoly> basis_;
    std::vector<std::vector<MultiPoly>> cofactors_;
};

// lcm-cancelling combination of two nonzero polynomials (normalized monic
// first); its initial monomial drops below the lcm.
MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q, const MonomialOrder& ord = {});

// Remainder of division by the list: no support monomial of the result is
// divisible by any initial monomial of the list. With `quotients` non-null,
// fills p = sum quotients[i] * basis[i] + remainder.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord = {},
                      std::vector<MultiPoly>* quotients = nullptr);
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g);

// Buchberger's algorithm, normal pair-selection strategy with the coprime
// criterion, followed by minimalization and full reduction. Cofactors of the
// returned basis over the input generators are tracked throughout.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord = {});

bool ideal_member(const MultiPoly& p, const Ideal& ideal);

// Ideal of the members that use only the trailing `keep` variables, generated
// by the matching slice of the lex basis (plain lex already has the
// eliminated leading variables greatest). Same ambient ring.
Ideal eliminate(const Ideal& ideal, std::uint32_t keep);

// One tower coordinate of a generic zero: transcendental over the preceding
// variables, or algebraic with a recorded minimal polynomial.
struct TowerEntry {
    bool algebraic = false;
    std::optional<MultiPoly> min_poly; // monic, in the original ring
};

class GenericZeroDescription {
public:
    // one entry per variable, in ring order (x0 is the base of the tower)
    const std::vector<TowerEntry>& entries() const { return entries_; }

    // ev(p, zero) == 0, realized as normal-form vanishing; agrees with
    // membership in the ideal.
    bool evaluates_to_zero(const MultiPoly& p) const;

private:
    friend GenericZeroDescription generic_zero(const Ideal&);
    GenericZeroDescription() = default;

    std::vector<TowerEntry> entries_;
    std::vector<MultiPoly> reversed_basis_; // basis of the variable-reversed ideal
};

// Coordinate tower for a generic zero of a proper prime ideal (primality is
// the caller's assertion; the unit ideal is rejected).
GenericZeroDescription generic_zero(const Ideal& ideal);

} // namespace staudt
