#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staudt/errors.hpp"
#include "staudt/field.hpp"

namespace staudt {

// Finite subset of the ground field, kept strictly sorted (by value over Q,
// by residue over F_p).
class FinSetK {
public:
    explicit FinSetK(const GroundField& k) : field_(k) {}
    FinSetK(const GroundField& k, std::vector<FieldElem> elems);

    const GroundField& field() const { return field_; }
    const std::vector<FieldElem>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(const FieldElem& e) const;
    FinSetK with(const FieldElem& e) const;

    bool operator==(const FinSetK& o) const { return field_ == o.field_ && elems_ == o.elems_; }
    bool operator!=(const FinSetK& o) const { return !(*this == o); }

    std::string str() const; // "{a, b, c}"

private:
    GroundField field_;
    std::vector<FieldElem> elems_;
};

// Finite set of pairs coded by the quintuple (A, B, alpha, beta, C):
// (x, y) is a member iff x in A, y in B and alpha*x + beta*y in C.
struct PairCode {
    FinSetK a;
    FinSetK b;
    FieldElem alpha;
    FieldElem beta;
    FinSetK c;
};

// beta = 1; alpha is the least element of the canonical field enumeration
// that makes (x, y) -> alpha*x + y injective on A x B. Over F_p the search
// can run out of field elements.
PairCode encode_pairs(const GroundField& k,
                      const std::vector<std::pair<FieldElem, FieldElem>>& xs);

bool decode_member(const PairCode& code, const FieldElem& x, const FieldElem& y);

// Do the invariants hold: (alpha,beta) != (0,0), injectivity on A x B,
// C inside the image?
bool valid_pair_code(const PairCode& code);

// Same decoded set, decided pointwise over A1 x B1 union A2 x B2.
bool codes_equivalent(const PairCode& c1, const PairCode& c2);

// Finite set of triples coded componentwise: (a, b, c) is a member iff some
// tag t has (a,t), (b,t), (c,t) in the three pair sets.
struct TripleCode {
    PairCode x1;
    PairCode x2;
    PairCode x3;
};

// One fresh tag per triple: the least canonical element not yet used as a
// second coordinate in any component.
TripleCode encode_triples(const GroundField& k,
                          const std::vector<std::array<FieldElem, 3>>& xs);

bool decode_triple_member(const TripleCode& code, const FieldElem& x, const FieldElem& y,
                          const FieldElem& z);

// Finite witness for "x is a natural number": 0 and x belong to F, F is
// closed under predecessor away from 0 and under successor away from x.
struct NatWitness {
    FieldElem x;
    FinSetK f;
};

// Over Q: {0, 1, ..., x} when x is a nonnegative integer, absent otherwise.
// Over F_p: the whole field, for every x.
std::optional<NatWitness> nat_witness(const FieldElem& x);

// All four clauses, checked by enumerating F.
bool verify_witness(const NatWitness& w);

namespace detail {

template <typename V, typename H>
void check_combiner(const std::vector<V>& pool, H&& h) {
    std::size_t n = std::min<std::size_t>(pool.size(), 4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(h(pool[i], pool[j]) == h(pool[j], pool[i])))
                throw domain_error("fold combiner is not commutative on the inputs");
            for (std::size_t l = 0; l < n; ++l)
                if (!(h(h(pool[i], pool[j]), pool[l]) == h(pool[i], h(pool[j], pool[l]))))
                    throw domain_error("fold combiner is not associative on the inputs");
        }
}

} // namespace detail

// Order-independent aggregation: G(empty) = y0, G(A + x) = h(G(A), g(x)).
// h must be commutative and associative on the reachable values; a spot
// check over sampled pairs and triples of mapped inputs enforces that.
template <typename V, typename G, typename H>
V set_fold(const FinSetK& a, V y0, G&& g, H&& h) {
    std::vector<V> mapped;
    mapped.reserve(a.size());
    for (const auto& x : a.elems()) mapped.push_back(g(x));
    detail::check_combiner(mapped, h);
    V acc = std::move(y0);
    for (const auto& v : mapped) acc = h(acc, v);
    return acc;
}

// Primitive recursion: f(0) = y0, f(k+1) = h(k, f(k)).
template <typename V, typename H>
V nat_fold(std::uint64_t n, V y0, H&& h) {
    V acc = std::move(y0);
    for (std::uint64_t k = 0; k < n; ++k) acc = h(k, acc);
    return acc;
}

} // namespace staudt
