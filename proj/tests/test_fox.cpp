#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "talex/fox.hpp"

using namespace talex;

namespace {
GroupRingElement geometric_sum(int gen, int from, int to) {
    // from <= to, inclusive exponent range of +1 terms
    GroupRingElement e;
    for (int m = from; m <= to; ++m) e.add_term(Word::generator(gen, m), 1);
    return e;
}
}  // namespace

TEST_CASE("derivative of a positive power is the geometric sum") {
    for (int p : {1, 2, 3, 7}) {
        GroupRingElement d = fox_derivative(Word::generator(0, p), 0);
        CHECK(d == geometric_sum(0, 0, p - 1));
        CHECK(d.num_terms() == static_cast<std::size_t>(p));
    }
}

TEST_CASE("derivative of a negative power has all coefficients -1") {
    for (int p : {1, 2, 5}) {
        GroupRingElement d = fox_derivative(Word::generator(0, -p), 0);
        CHECK(d.num_terms() == static_cast<std::size_t>(p));
        for (const auto& [w, c] : d.terms()) CHECK(c == -1);
        // -(x^-1 + ... + x^-p)
        GroupRingElement expected;
        for (int m = 1; m <= p; ++m) expected.add_term(Word::generator(0, -m), -1);
        CHECK(d == expected);
    }
}

TEST_CASE("base cases and out-of-alphabet generators") {
    CHECK(fox_derivative(Word::generator(0), 0) == GroupRingElement::one());
    CHECK(fox_derivative(Word::generator(1), 0).is_zero());
    CHECK(fox_derivative(Word{}, 0).is_zero());
}

TEST_CASE("commutator relator derivative matches the closed form") {
    // r_i = x^p m x^-p m^-1 (x = gen 1, m = gen 0):
    // d r_i / d m = x^p - x^p m x^-p m^-1
    for (int p : {1, 2, 3}) {
        Word xp = Word::generator(1, p);
        Word m = Word::generator(0);
        Word r = xp * m * xp.inverse() * m.inverse();
        GroupRingElement d = fox_derivative(r, 0);
        GroupRingElement expected = GroupRingElement::from_word(xp, 1);
        expected.add_term(r, -1);
        CHECK(d == expected);

        // d r_i / d x = (1 + ... + x^{p-1}) - x^p m x^-p (1 + ... + x^{p-1})
        GroupRingElement dx = fox_derivative(r, 1);
        GroupRingElement expected_x = geometric_sum(1, 0, p - 1);
        Word prefix = xp * m * xp.inverse();
        for (int k = 0; k < p; ++k) expected_x.add_term(prefix * Word::generator(1, k), -1);
        CHECK(dx == expected_x);
    }
}

TEST_CASE("torus relator y-derivative keeps the product-rule form") {
    // r = x^p y^-q: d r / d y = -x^p (y^-1 + ... + y^-q)
    const int p = 2, q = 3;
    Word r = Word::generator(0, p) * Word::generator(1, -q);
    GroupRingElement d = fox_derivative(r, 1);
    GroupRingElement expected;
    for (int m = 1; m <= q; ++m)
        expected.add_term(Word::generator(0, p) * Word::generator(1, -m), -1);
    CHECK(d == expected);
    // and d r / d x is the plain geometric sum
    CHECK(fox_derivative(r, 0) == geometric_sum(0, 0, p - 1));
}

TEST_CASE("product rule holds on random word pairs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        Word u = talex::testing::random_word(rng, 3, 5);
        Word v = talex::testing::random_word(rng, 3, 5);
        for (int j = 0; j < 3; ++j) {
            GroupRingElement lhs = fox_derivative(u * v, j);
            GroupRingElement rhs = fox_derivative(u, j) + u * fox_derivative(v, j);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("linearity on group ring elements") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        GroupRingElement u = GroupRingElement::from_word(talex::testing::random_word(rng, 2, 5), 2);
        GroupRingElement v = GroupRingElement::from_word(talex::testing::random_word(rng, 2, 5), -3);
        CHECK(fox_derivative(u + v, 0) == fox_derivative(u, 0) + fox_derivative(v, 0));
    }
}

TEST_CASE("fundamental identity on fixed words") {
    CHECK(fox_fundamental_check(Word::generator(0), 2));
    CHECK(fox_fundamental_check(Word::generator(0, 2) * Word::generator(1, -3), 2));
    CHECK(fox_fundamental_check(Word{}, 2));
}

TEST_CASE("fundamental identity on 1000 random words") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 1000; ++i) {
        Word w = talex::testing::random_word(rng, 4, 10);
        CHECK(fox_fundamental_check(w, 4));
    }
}
