#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "staudt/dickson.hpp"
#include "staudt/textio.hpp"

using namespace staudt;

namespace {

Monomial mon(std::initializer_list<std::uint32_t> es) {
    Monomial m(static_cast<std::uint32_t>(es.size()));
    std::size_t i = 0;
    for (auto e : es) m.e[i++] = e;
    return m;
}

} // namespace

TEST_CASE("dominates is componentwise divisibility") {
    CHECK(dominates(mon({2, 3}), mon({1, 3})));
    CHECK(dominates(mon({2, 3}), mon({2, 3})));
    CHECK_FALSE(dominates(mon({1, 3}), mon({2, 3})));
    CHECK(mon({1, 3}).divides(mon({2, 3})));
}

TEST_CASE("basis of a small exponent set") {
    std::vector<Monomial> in{mon({2, 2}), mon({1, 1}), mon({0, 3}), mon({2, 0})};
    auto basis = dickson_basis(in);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].e == mon({0, 3}).e);
    CHECK(basis[1].e == mon({1, 1}).e);
    CHECK(basis[2].e == mon({2, 0}).e);
}

TEST_CASE("empty input gives an empty basis") {
    CHECK(dickson_basis({}).empty());
}

TEST_CASE("basis matches brute force on random subsets") {
    std::mt19937 rng(3);
    for (std::uint32_t dim : {2u, 3u}) {
        for (int rep = 0; rep < 250; ++rep) {
            std::vector<Monomial> in;
            std::size_t count = rng() % 13;
            for (std::size_t i = 0; i < count; ++i) {
                Monomial m(dim);
                for (std::uint32_t v = 0; v < dim; ++v) m.e[v] = rng() % 9;
                in.push_back(m);
            }
            auto got = dickson_basis(in);
            auto want = oracles::brute_minimal(in);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].e == want[i].e);
        }
    }
}

TEST_CASE("every input is dominated by some basis element") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Monomial> in;
        for (std::size_t i = 0; i < 8; ++i) {
            Monomial m(3);
            for (std::uint32_t v = 0; v < 3; ++v) m.e[v] = rng() % 6;
            in.push_back(m);
        }
        auto basis = dickson_basis(in);
        for (const auto& m : in) {
            bool covered = false;
            for (const auto& b : basis) covered = covered || dominates(m, b);
            CHECK(covered);
        }
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (!(a.e == b.e)) CHECK_FALSE(dominates(a, b));
    }
}

TEST_CASE("initial monomial uses lex order") {
    GroundField q = GroundField::rationals();
    MultiPoly p = parse_poly("x*y + y^3", q, {"x", "y"});
    MonomialOrder ord;
    CHECK(ord.name() == "lex");
    CHECK(initial_monomial(p, ord).e == mon({1, 1}).e);
}
