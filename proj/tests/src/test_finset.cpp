#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "staudt/errors.hpp"
#include "staudt/finset.hpp"

using namespace staudt;

namespace {

FieldElem fe(const GroundField& k, long long n) { return FieldElem::from_int(k, n); }

std::vector<std::pair<FieldElem, FieldElem>> pairs_of(const GroundField& k,
                                                      std::initializer_list<std::pair<long long, long long>> xs) {
    std::vector<std::pair<FieldElem, FieldElem>> out;
    for (auto [a, b] : xs) out.emplace_back(fe(k, a), fe(k, b));
    return out;
}

} // namespace

TEST_CASE("sets keep themselves sorted and deduplicated") {
    GroundField q = GroundField::rationals();
    FinSetK s(q, {fe(q, 3), fe(q, 1), fe(q, 3), fe(q, -2)});
    CHECK(s.size() == 3);
    CHECK(s.str() == "{-2, 1, 3}");
    CHECK(s.contains(fe(q, 1)));
    CHECK_FALSE(s.contains(fe(q, 2)));
    CHECK(s.with(fe(q, 2)).str() == "{-2, 1, 2, 3}");
    CHECK(s.with(fe(q, 1)) == s);
    CHECK(FinSetK(q).empty());
}

TEST_CASE("pair codes decode the encoded set and nothing else") {
    GroundField q = GroundField::rationals();
    auto xs = pairs_of(q, {{0, 1}, {2, 3}, {-1, 1}});
    PairCode code = encode_pairs(q, xs);
    CHECK(valid_pair_code(code));
    CHECK(code.beta == FieldElem::one(q));
    for (const auto& [x, y] : xs) CHECK(decode_member(code, x, y));
    // every pair of A x B outside the input decodes to false
    std::size_t members = 0;
    for (const auto& x : code.a.elems())
        for (const auto& y : code.b.elems())
            if (decode_member(code, x, y)) ++members;
    CHECK(members == xs.size());
    // pairs outside A x B decode to false regardless of C
    CHECK_FALSE(decode_member(code, fe(q, 7), fe(q, 1)));
}

TEST_CASE("the multiplier is the least one that works") {
    GroundField q = GroundField::rationals();
    // A = B = {0, 1}: alpha = 0 collapses columns, alpha = 1 collapses the
    // antidiagonal, alpha = -1 the diagonal; 2 is the first that separates
    PairCode code = encode_pairs(q, pairs_of(q, {{0, 0}, {1, 1}}));
    CHECK(code.alpha == fe(q, 2));

    // singleton input: nothing to separate, the first candidate 0 works
    PairCode single = encode_pairs(q, pairs_of(q, {{4, 5}}));
    CHECK(single.alpha == FieldElem::zero(q));
}

TEST_CASE("pair codes over a prime field can run out of multipliers") {
    GroundField k = GroundField::prime(3);
    std::vector<std::pair<FieldElem, FieldElem>> all;
    for (long long a = 0; a < 3; ++a)
        for (long long b = 0; b < 3; ++b) all.emplace_back(fe(k, a), fe(k, b));
    // 9 pairs cannot be separated by x -> alpha*x + y into 3 residues
    CHECK_THROWS_AS(encode_pairs(k, all), domain_error);
    // injectivity is demanded on the whole rectangle A x B, so even two
    // members spanning a 2 x 2 rectangle overflow F_3
    CHECK_THROWS_AS(encode_pairs(k, pairs_of(k, {{0, 1}, {1, 2}})), domain_error);

    // sets whose rectangle fits do code
    PairCode code = encode_pairs(k, pairs_of(k, {{0, 1}, {1, 1}}));
    CHECK(valid_pair_code(code));
    CHECK(decode_member(code, fe(k, 0), fe(k, 1)));
    CHECK(decode_member(code, fe(k, 1), fe(k, 1)));
    CHECK_FALSE(decode_member(code, fe(k, 2), fe(k, 1)));
}

TEST_CASE("exhaustive pair coding over a 2 x 2 rectangle in F_5") {
    GroundField k = GroundField::prime(5);
    std::vector<std::pair<FieldElem, FieldElem>> rect;
    for (long long a : {0, 1})
        for (long long b : {2, 3}) rect.emplace_back(fe(k, a), fe(k, b));
    // every subset of the rectangle round trips, checked against the whole
    // 25-pair universe
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::pair<FieldElem, FieldElem>> xs;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i)) xs.push_back(rect[i]);
        PairCode code = encode_pairs(k, xs);
        CHECK(valid_pair_code(code));
        for (long long a = 0; a < 5; ++a)
            for (long long b = 0; b < 5; ++b) {
                auto cand = std::make_pair(fe(k, a), fe(k, b));
                bool want = std::find(xs.begin(), xs.end(), cand) != xs.end();
                CHECK(decode_member(code, cand.first, cand.second) == want);
            }
    }
}

TEST_CASE("equivalence of codes is extensional") {
    GroundField q = GroundField::rationals();
    auto xs = pairs_of(q, {{0, 1}, {2, 3}});
    PairCode c1 = encode_pairs(q, xs);
    // same set, built in the other order
    std::reverse(xs.begin(), xs.end());
    PairCode c2 = encode_pairs(q, xs);
    CHECK(codes_equivalent(c1, c2));

    PairCode c3 = encode_pairs(q, pairs_of(q, {{0, 1}}));
    CHECK_FALSE(codes_equivalent(c1, c3));

    // hand-built code with fatter A x B but the same members
    PairCode padded = c1;
    padded.a = padded.a.with(fe(q, 9));
    CHECK(codes_equivalent(c1, padded));
}

TEST_CASE("triple codes tag componentwise") {
    GroundField q = GroundField::rationals();
    std::vector<std::array<FieldElem, 3>> xs{{fe(q, 1), fe(q, 2), fe(q, 3)}};
    TripleCode code = encode_triples(q, xs);
    // one triple, one tag: the first canonical element 0
    CHECK(decode_member(code.x1, fe(q, 1), FieldElem::zero(q)));
    CHECK(decode_member(code.x2, fe(q, 2), FieldElem::zero(q)));
    CHECK(decode_member(code.x3, fe(q, 3), FieldElem::zero(q)));
    CHECK(decode_triple_member(code, fe(q, 1), fe(q, 2), fe(q, 3)));
    CHECK_FALSE(decode_triple_member(code, fe(q, 1), fe(q, 3), fe(q, 2)));
}

TEST_CASE("triple codes keep permuted triples apart") {
    GroundField q = GroundField::rationals();
    std::vector<std::array<FieldElem, 3>> xs{{fe(q, 1), fe(q, 2), fe(q, 3)},
                                             {fe(q, 3), fe(q, 2), fe(q, 1)},
                                             {fe(q, 1), fe(q, 1), fe(q, 1)}};
    TripleCode code = encode_triples(q, xs);
    for (const auto& t : xs) CHECK(decode_triple_member(code, t[0], t[1], t[2]));
    CHECK_FALSE(decode_triple_member(code, fe(q, 2), fe(q, 1), fe(q, 3)));
    CHECK_FALSE(decode_triple_member(code, fe(q, 2), fe(q, 2), fe(q, 2)));

    // mixing tags across components must not fabricate members: (1,2,1) picks
    // up x1 and x2 from the first triple and x3 from the second
    CHECK_FALSE(decode_triple_member(code, fe(q, 1), fe(q, 2), fe(q, 1)));
}

TEST_CASE("natural number witnesses exist exactly for naturals over Q") {
    GroundField q = GroundField::rationals();
    auto w3 = nat_witness(fe(q, 3));
    REQUIRE(w3.has_value());
    CHECK(w3->f.str() == "{0, 1, 2, 3}");
    CHECK(verify_witness(*w3));

    auto w0 = nat_witness(FieldElem::zero(q));
    REQUIRE(w0.has_value());
    CHECK(w0->f.str() == "{0}");
    CHECK(verify_witness(*w0));

    CHECK_FALSE(nat_witness(fe(q, -1)).has_value());
    CHECK_FALSE(nat_witness(FieldElem::from_rational(Rational(1, 2))).has_value());
}

TEST_CASE("over a prime field every element is a natural") {
    GroundField k = GroundField::prime(5);
    for (long long t = 0; t < 5; ++t) {
        auto w = nat_witness(fe(k, t));
        REQUIRE(w.has_value());
        CHECK(w->f.size() == 5);
        CHECK(verify_witness(*w));
    }
}

TEST_CASE("corrupted witnesses fail verification") {
    GroundField q = GroundField::rationals();
    NatWitness w = *nat_witness(fe(q, 3));
    NatWitness gap{w.x, FinSetK(q, {fe(q, 0), fe(q, 1), fe(q, 3)})}; // 2 missing
    CHECK_FALSE(verify_witness(gap));
    NatWitness no_zero{w.x, FinSetK(q, {fe(q, 1), fe(q, 2), fe(q, 3)})};
    CHECK_FALSE(verify_witness(no_zero));
    NatWitness no_x{w.x, FinSetK(q, {fe(q, 0), fe(q, 1), fe(q, 2)})};
    CHECK_FALSE(verify_witness(no_x));
    NatWitness overgrown{w.x, FinSetK(q, {fe(q, 0), fe(q, 1), fe(q, 2), fe(q, 3), fe(q, 5)})};
    CHECK_FALSE(verify_witness(overgrown)); // 5 has no predecessor in F
}

TEST_CASE("set folds ignore enumeration order") {
    GroundField q = GroundField::rationals();
    std::vector<FieldElem> elems;
    for (long long i = 1; i <= 9; ++i) elems.push_back(fe(q, i));
    std::mt19937 rng(17);
    FieldElem want = fe(q, 45);
    for (int rep = 0; rep < 50; ++rep) {
        std::shuffle(elems.begin(), elems.end(), rng);
        FinSetK a(q, elems);
        FieldElem got = set_fold(a, FieldElem::zero(q), [](const FieldElem& x) { return x; },
                                 [](const FieldElem& u, const FieldElem& v) { return u + v; });
        CHECK(got == want);
    }
    FieldElem prod = set_fold(FinSetK(q, elems), FieldElem::one(q),
                              [](const FieldElem& x) { return x; },
                              [](const FieldElem& u, const FieldElem& v) { return u * v; });
    CHECK(prod == fe(q, 362880));
}

TEST_CASE("folds reject combiners that depend on order") {
    GroundField q = GroundField::rationals();
    FinSetK a(q, {fe(q, 1), fe(q, 2), fe(q, 3)});
    CHECK_THROWS_AS(set_fold(a, FieldElem::zero(q), [](const FieldElem& x) { return x; },
                             [](const FieldElem& u, const FieldElem& v) { return u - v; }),
                    domain_error);
    // the spot check samples the pool, so even a singleton trips it up
    FinSetK single(q, {fe(q, 5)});
    CHECK_THROWS_AS(set_fold(single, FieldElem::zero(q), [](const FieldElem& x) { return x; },
                             [](const FieldElem& u, const FieldElem& v) { return u - v; }),
                    domain_error);
    // an empty pool leaves nothing to check and returns the seed
    CHECK(set_fold(FinSetK(q), fe(q, 7), [](const FieldElem& x) { return x; },
                   [](const FieldElem& u, const FieldElem& v) { return u - v; })
          == fe(q, 7));
}

TEST_CASE("primitive recursion computes powers and factorials") {
    GroundField q = GroundField::rationals();
    FieldElem two = fe(q, 2);
    FieldElem p10 = nat_fold(10, FieldElem::one(q),
                             [&](std::uint64_t, const FieldElem& acc) { return acc * two; });
    CHECK(p10 == fe(q, 1024));
    FieldElem fact = nat_fold(6, FieldElem::one(q), [&](std::uint64_t k, const FieldElem& acc) {
        return acc * fe(q, static_cast<long long>(k) + 1);
    });
    CHECK(fact == fe(q, 720));
    CHECK(nat_fold(0, fe(q, 7), [](std::uint64_t, const FieldElem& acc) { return acc; })
          == fe(q, 7));
}
