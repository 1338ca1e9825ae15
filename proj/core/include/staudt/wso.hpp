#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staudt/field.hpp"

namespace staudt::wso {

enum class Sort { element, set };

// K-sort term: arithmetic over field elements and element variables.
struct Term {
    enum class Kind { number, var, add, sub, mul, neg };
    Kind kind;
    Integer value;          // number
    std::string name;       // var
    std::vector<Term> kids; // add/sub/mul: 2, neg: 1
};

// Two-sorted formula. Quantifier kinds carry the resolved sort of the bound
// variable; `var` holds the bound variable, the set side of a membership, or
// the left side of a set equality (right side in var2).
struct Formula {
    enum class Kind {
        eq_elem,
        eq_set,
        member,
        not_f,
        and_f,
        or_f,
        implies,
        iff,
        forall_elem,
        exists_elem,
        forall_set,
        exists_set
    };
    Kind kind;
    std::vector<Term> terms;
    std::string var, var2;
    std::vector<Formula> kids;
};

// Parses the published grammar (docs/wso-grammar.ebnf) and resolves sorts:
// explicit binder annotations (x:K, F:Set) win, then usage (membership right
// side is a set, arithmetic operands are elements), then the initial-letter
// convention (capitalized names are sets). Syntax and sort violations raise
// parse_error.
Formula parse_formula(const std::string& text);

// Free variables with their sorts, sorted by name.
std::vector<std::pair<std::string, Sort>> free_variables(const Formula& f);

// F_p (p prime, at most 13) with a family of subsets as the set sort: the
// full power set by default, or an explicit deficient family for exhibiting
// axiom failures.
struct FiniteStructure {
    GroundField field;
    std::vector<std::uint32_t> family; // bitmasks over residues, sorted

    static FiniteStructure full(std::uint64_t p);
    static FiniteStructure with_family(std::uint64_t p, std::vector<std::uint32_t> masks);
};

// Finite listed universe U inside Q; quantifiers of both sorts stay in U,
// so every verdict is relative to U.
struct BoundedRationalStructure {
    std::vector<Rational> universe; // sorted, distinct

    static BoundedRationalStructure over(std::vector<Rational> u);
};

// Common evaluation domain: the element range and the subset family (bit i
// of a mask marks elems[i]).
struct Domain {
    GroundField field;
    std::vector<FieldElem> elems;
    std::vector<std::uint32_t> family;

    std::string describe() const;
};

Domain domain_of(const FiniteStructure& m);
Domain domain_of(const BoundedRationalStructure& m);

struct Valuation {
    std::map<std::string, FieldElem> elem_vars;
    std::map<std::string, std::uint32_t> set_vars;
};

struct EvalResult {
    bool truth;
    std::uint64_t elem_enumerations; // element values visited by quantifiers
    std::uint64_t set_enumerations;  // subsets visited by quantifiers
};

// Exhaustive Tarskian evaluation. Quantifier loops never short-circuit, so
// the enumeration counts depend only on the formula and the domain. The
// static cost bound (product of all quantifier ranges) is checked against
// the budget before anything runs; overruns raise resource_limit_error.
EvalResult evaluate(const Formula& f, const Domain& m, const Valuation& val = {},
                    std::uint64_t budget = 100000000);

struct AxiomCheck {
    std::string clause;
    bool passed;
    std::string detail; // failure witness, empty when passed
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed;
};

// Exhaustively checks extensionality, empty set, singletons and binary
// unions over the structure's family, then each supplied set-induction
// instance (a formula with exactly one free variable, of set sort): if the
// class it defines contains the empty set and is closed under adjoining one
// element, it must be the whole family.
AxiomReport check_fin_axioms(const FiniteStructure& m,
                             const std::vector<Formula>& induction = {});

// Subset-minimal member of the family defined by phi (one free set
// variable): smallest cardinality, then smallest mask. Minimality is
// certified against every member; nullopt when the class is empty.
std::optional<std::uint32_t> find_minimal_set(const Formula& phi, const FiniteStructure& m);

// All x with a witness set F in the family: 0 and x lie in F and every z in
// F other than x has z + 1 in F. The whole field over F_p; the reachable
// nonnegative integers over a bounded rational universe.
std::vector<FieldElem> compute_K0(const Domain& m, std::uint64_t budget = 100000000);

std::string set_str(std::uint32_t mask, const Domain& m);

} // namespace staudt::wso
