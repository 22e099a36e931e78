#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "talex/laurent.hpp"
#include "talex/poly_matrix.hpp"

using namespace talex;
using Cyc = CyclotomicScalar;
using P = LaurentPoly<Cyc>;

namespace {

P t1(int nvars, int e = 1) { return P::variable(nvars, 0, e); }
P cpoly(int nvars, long v) { return P::constant(nvars, Cyc(v)); }

P random_entry(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 2);
    P p(nvars);
    for (int t = 0; t < nterms(rng); ++t) {
        std::vector<int> e(nvars);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, Cyc(static_cast<long>(coef(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    P a = t1(1) + cpoly(1, 1);
    P b = t1(1) - cpoly(1, 1);
    P prod = a * b;
    P expected = P::variable(1, 0, 2) - cpoly(1, 1);
    CHECK(prod == expected);

    std::mt19937_64 rng(3);
    P p = random_entry(rng, 2);
    CHECK(p + P(2) == p);

    P m1 = P::monomial({1, -1}, Cyc(1));
    P m2 = P::monomial({-1, 1}, Cyc(1));
    CHECK(m1 * m2 == P::constant(2, Cyc(1)));
}

TEST_CASE("no zero coefficients are stored") {
    P a = t1(1) + cpoly(1, 1);
    P b = -a;
    CHECK((a + b).is_zero());
    CHECK((a - a).num_terms() == 0);
}

TEST_CASE("divexact divides exactly and rejects non-divisors") {
    P num = P::variable(1, 0, 2) - cpoly(1, 1);
    P den = t1(1) - cpoly(1, 1);
    CHECK(divexact(num, den) == t1(1) + cpoly(1, 1));

    P bad = P::variable(1, 0, 2) + cpoly(1, 1);
    CHECK_THROWS_WITH_AS(divexact(bad, den), "inexact division", error);
}

TEST_CASE("divexact multiply-back on random Laurent operands") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        int nvars = 1 + static_cast<int>(rng() % 2);
        P p = random_entry(rng, nvars);
        P q = random_entry(rng, nvars);
        if (p.is_zero() || q.is_zero()) continue;
        P prod = p * q;
        CHECK(divexact(prod, q) == p);
        CHECK(divexact(prod, p) == q);
        CHECK(divexact(p, p) == P::constant(nvars, Cyc(1)));
    }
}

TEST_CASE("determinant of small fixed matrices") {
    PolyMatrix<Cyc> one(1, 1, 1);
    one.at(0, 0) = t1(1) + cpoly(1, 2);
    CHECK(determinant(one) == t1(1) + cpoly(1, 2));

    PolyMatrix<Cyc> two(2, 2, 1);
    two.at(0, 0) = t1(1);
    two.at(0, 1) = cpoly(1, 1);
    two.at(1, 0) = cpoly(1, 3);
    two.at(1, 1) = t1(1, -1);
    // ad - bc = t*t^-1 - 3 = -2
    CHECK(determinant(two) == cpoly(1, -2));

    PolyMatrix<Cyc> empty(0, 0, 1);
    CHECK(determinant(empty) == cpoly(1, 1));
}

TEST_CASE("Bareiss agrees exactly with cofactor expansion") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 5);
        int nvars = 1 + static_cast<int>(rng() % 2);
        PolyMatrix<Cyc> m(n, n, nvars);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(rng, nvars);
        CHECK(determinant(m) == talex::testing::cofactor_determinant(m));
    }
}

TEST_CASE("determinant alternates under row swaps") {
    std::mt19937_64 rng(29);
    PolyMatrix<Cyc> m(3, 3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = random_entry(rng, 2);
    PolyMatrix<Cyc> swapped = m;
    for (int j = 0; j < 3; ++j) std::swap(swapped.at(0, j), swapped.at(2, j));
    CHECK(determinant(swapped) == -determinant(m));
}

TEST_CASE("determinant of block diagonal is the product of blocks") {
    std::mt19937_64 rng(31);
    PolyMatrix<Cyc> m(4, 4, 1);
    PolyMatrix<Cyc> a(2, 2, 1), b(2, 2, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a.at(i, j) = random_entry(rng, 1);
            b.at(i, j) = random_entry(rng, 1);
            m.at(i, j) = a.at(i, j);
            m.at(2 + i, 2 + j) = b.at(i, j);
        }
    CHECK(determinant(m) == determinant(a) * determinant(b));
}

TEST_CASE("substitute_product maps monomials to total degree") {
    P p(2);
    p.add_term({2, 2}, Cyc(1));
    p.add_term({0, 0}, Cyc(1));
    P s = substitute_product(p);
    P expected(1);
    expected.add_term({4}, Cyc(1));
    expected.add_term({0}, Cyc(1));
    CHECK(s == expected);

    P unitmono = P::monomial({1, -1}, Cyc(1));
    CHECK(substitute_product(unitmono) == P::constant(1, Cyc(1)));

    // already univariate: substitution is the identity
    P u = t1(1, 6) + cpoly(1, 1);
    CHECK(substitute_product(u) == u);
}

TEST_CASE("rational_reduce on the trefoil quotient") {
    // (t^6+1)^2 / ((t^4 - t^2 + 1)(t^6 + 1)) -> t^2 + 1
    P t6p1 = t1(1, 6) + cpoly(1, 1);
    P den1 = t1(1, 4) - t1(1, 2) + cpoly(1, 1);
    auto res = rational_reduce(RationalFn<Cyc>(t6p1 * t6p1, den1 * t6p1));
    CHECK(res.reduced);
    CHECK(res.polynomial);
    CHECK(res.fn.num == t1(1, 2) + cpoly(1, 1));
    CHECK(res.fn.den == cpoly(1, 1));
}

TEST_CASE("rational_reduce simple cases") {
    P p = t1(1, 3) + cpoly(1, 5);
    auto id = rational_reduce(RationalFn<Cyc>::from_poly(p));
    CHECK(id.polynomial);
    CHECK(id.fn.num == p);

    auto lin = rational_reduce(RationalFn<Cyc>(t1(1, 2) - cpoly(1, 1), t1(1) - cpoly(1, 1)));
    CHECK(lin.polynomial);
    CHECK(lin.fn.num == t1(1) + cpoly(1, 1));

    // monomial denominator in two variables
    RationalFn<Cyc> f(P::monomial({2, 1}, Cyc(3)) + P::monomial({1, 0}, Cyc(1)),
                      P::monomial({1, 0}, Cyc(1)));
    auto mono = rational_reduce(f);
    CHECK(mono.polynomial);
    CHECK(mono.fn.num == P::monomial({1, 1}, Cyc(3)) + P::constant(2, Cyc(1)));

    // multivariate non-monomial denominator: unsupported, flagged
    RationalFn<Cyc> g(P::monomial({2, 0}, Cyc(1)),
                      P::monomial({1, 0}, Cyc(1)) + P::constant(2, Cyc(1)));
    auto multi = rational_reduce(g);
    CHECK(!multi.reduced);
    CHECK(multi.fn == g);
}

TEST_CASE("rational_reduce preserves the cross-multiplication class") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        P a = random_entry(rng, 1), b = random_entry(rng, 1), c = random_entry(rng, 1);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        RationalFn<Cyc> f(a * c, b * c);
        auto res = rational_reduce(f);
        CHECK(res.fn == f);  // cross-multiplication equality
    }
}

TEST_CASE("equal_up_to_unit finds even-power unit shifts") {
    P f = t1(1, 2) + cpoly(1, 1);
    P g = t1(1, 2) * (t1(1, 2) + cpoly(1, 1));
    auto w = equal_up_to_unit(RationalFn<Cyc>::from_poly(f), RationalFn<Cyc>::from_poly(g),
                              UnitMode::EvenMonomials);
    CHECK(w.equal);
    CHECK(w.exponent == std::vector<int>{-2});
    CHECK(w.coeff == Cyc(1));
}

TEST_CASE("equal_up_to_unit rejects different polynomials") {
    auto w = equal_up_to_unit(RationalFn<Cyc>::from_poly(t1(1, 2) + cpoly(1, 1)),
                              RationalFn<Cyc>::from_poly(t1(1, 2) - cpoly(1, 1)),
                              UnitMode::AllMonomials);
    CHECK(!w.equal);
}

TEST_CASE("equal_up_to_unit distinguishes odd units by mode") {
    P f = t1(1, 2) + cpoly(1, 1);
    P g = t1(1, 1) * f;
    RationalFn<Cyc> rf = RationalFn<Cyc>::from_poly(f);
    RationalFn<Cyc> rg = RationalFn<Cyc>::from_poly(g);
    CHECK(!equal_up_to_unit(rf, rg, UnitMode::EvenMonomials).equal);
    CHECK(equal_up_to_unit(rf, rg, UnitMode::AllMonomials).equal);

    P h = -f;
    RationalFn<Cyc> rh = RationalFn<Cyc>::from_poly(h);
    CHECK(!equal_up_to_unit(rf, rh, UnitMode::EvenMonomials).equal);
    auto w = equal_up_to_unit(rf, rh, UnitMode::AllMonomials);
    CHECK(w.equal);
    CHECK(w.coeff == Cyc(-1));
}

TEST_CASE("equal_up_to_unit is symmetric and consistent on rational functions") {
    P f = t1(1, 2) + cpoly(1, 1);
    P d = t1(1) - cpoly(1, 2);
    RationalFn<Cyc> a(f, d);
    RationalFn<Cyc> b(P::monomial({4}, Cyc(1)) * f, P::monomial({2}, Cyc(1)) * d);
    auto w1 = equal_up_to_unit(a, b, UnitMode::EvenMonomials);
    auto w2 = equal_up_to_unit(b, a, UnitMode::EvenMonomials);
    CHECK(w1.equal);
    CHECK(w2.equal);
    CHECK(w1.exponent[0] == -w2.exponent[0]);
    CHECK(equal_up_to_unit(a, a, UnitMode::EvenMonomials).equal);
}

TEST_CASE("evaluate at all ones sums the coefficients") {
    P p(2);
    p.add_term({3, 1}, Cyc(2));
    p.add_term({0, -1}, Cyc(5));
    CHECK(p.evaluate_all_ones() == Cyc(7));
}
