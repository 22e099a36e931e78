#include "doctest.h"

#include <random>

#include "talex/cyclotomic.hpp"
#include "talex/errors.hpp"
#include "talex/scalar.hpp"

using namespace talex;
using Cyc = CyclotomicScalar;

namespace {

Cyc random_cyc12(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c;
    for (unsigned i = 0; i < euler_phi(12); ++i) c.emplace_back(num(rng), den(rng));
    return Cyc::from_coeffs(12, std::move(c));
}

BigFloat dist(const ComplexScalar& a, const ComplexScalar& b) { return (a - b).abs(); }

}  // namespace

TEST_CASE("cyclotomic polynomial table") {
    auto coeffs = [](const std::vector<Rational>& v) {
        std::vector<long> out;
        for (const auto& r : v) out.push_back(r.get_num().get_si());
        return out;
    };
    CHECK(coeffs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(coeffs(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
    CHECK(coeffs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(coeffs(cyclotomic_polynomial(8)) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(coeffs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("fourth root of unity embeds to i") {
    ComplexScalar z = embed_complex(Cyc::root_of_unity(4, 1), 128);
    CHECK(z.re.str(5) == ComplexScalar().re.str(5));
    CHECK(dist(z, ComplexScalar::i()) < BigFloat("1e-30"));
}

TEST_CASE("zeta_6 + zeta_6^-1 = 1 exactly") {
    Cyc z = Cyc::root_of_unity(6, 1) + Cyc::root_of_unity(6, -1);
    CHECK(z == Cyc(1));
    CHECK(dist(embed_complex(z, 128), ComplexScalar(1)) < BigFloat("1e-30"));
}

TEST_CASE("zeta_N^0 = 1 and zeta_N^N = 1") {
    for (unsigned n : {1u, 2u, 5u, 12u, 20u}) {
        CHECK(Cyc::root_of_unity(n, 0) == Cyc(1));
        CHECK(Cyc::root_of_unity(n, 1).pow(n) == Cyc(1));
    }
}

TEST_CASE("multiplicative order is N / gcd(N, k)") {
    for (unsigned n : {6u, 8u, 12u}) {
        for (long k = 1; k < static_cast<long>(n); ++k) {
            unsigned expected = n / std::gcd(n, static_cast<unsigned>(k));
            CHECK(multiplicative_order(Cyc::root_of_unity(n, k)) == expected);
        }
    }
}

TEST_CASE("equality across promoted orders") {
    CHECK(Cyc::root_of_unity(6, 2) == Cyc::root_of_unity(3, 1));
    CHECK(Cyc::root_of_unity(2, 1) == Cyc(-1));
    CHECK(Cyc::root_of_unity(12, 6) == Cyc(-1));
}

TEST_CASE("field axioms hold exactly on random elements of Q(zeta_12)") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        Cyc a = random_cyc12(rng), b = random_cyc12(rng), c = random_cyc12(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * inverse(a) == Cyc(1));
    }
}

TEST_CASE("embedding is a ring homomorphism within 2^-(prec-8)") {
    std::mt19937_64 rng(9);
    BigFloat bound = ldexp(BigFloat(1), -(128 - 8));
    for (int i = 0; i < 30; ++i) {
        Cyc a = random_cyc12(rng), b = random_cyc12(rng);
        ComplexScalar ea = embed_complex(a, 128), eb = embed_complex(b, 128);
        CHECK(dist(embed_complex(a * b, 128), ea * eb) < bound * 64);
        CHECK(dist(embed_complex(a + b, 128), ea + eb) < bound * 64);
    }
}

TEST_CASE("zeta_8 + zeta_8^-1 embeds to sqrt(2)") {
    Cyc z = Cyc::root_of_unity(8, 1) + Cyc::root_of_unity(8, -1);
    ComplexScalar e = embed_complex(z, 128);
    CHECK(abs(e.re - sqrt(BigFloat(2))) < BigFloat("1e-20"));
    CHECK(abs(e.im) < BigFloat("1e-20"));
}

TEST_CASE("embedding of zero is zero") {
    CHECK(embed_complex(Cyc(), 128).abs() == BigFloat(0));
}

TEST_CASE("solve_quadratic over the exact field") {
    SUBCASE("factorable") {
        auto [t1, t2] = solve_quadratic(Cyc(-3), Cyc(2));
        CHECK(((t1 == Cyc(1) && t2 == Cyc(2)) || (t1 == Cyc(2) && t2 == Cyc(1))));
    }
    SUBCASE("b=0, c=-1") {
        auto [t1, t2] = solve_quadratic(Cyc(0), Cyc(-1));
        CHECK(((t1 == Cyc(1) && t2 == Cyc(-1)) || (t1 == Cyc(-1) && t2 == Cyc(1))));
    }
    SUBCASE("irrational discriminant raises") {
        CHECK_THROWS_AS(solve_quadratic(Cyc(0), Cyc(-2)), backend_error);
    }
}

TEST_CASE("solve_quadratic numeric roots satisfy the equation") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        ComplexScalar b{BigFloat(d(rng)), BigFloat(d(rng))};
        ComplexScalar c{BigFloat(d(rng)), BigFloat(d(rng))};
        auto [t1, t2] = solve_quadratic(b, c);
        CHECK((t1 * t1 + b * t1 + c).abs() < BigFloat("1e-20"));
        CHECK((t2 * t2 + b * t2 + c).abs() < BigFloat("1e-20"));
        CHECK(dist(t1 + t2, -b) < BigFloat("1e-20"));
        CHECK(dist(t1 * t2, c) < BigFloat("1e-20"));
    }
}

TEST_CASE("complex tolerance-based equality") {
    ComplexScalar a(1);
    ComplexScalar b{BigFloat(1) + BigFloat("1e-25"), BigFloat(0)};
    CHECK(a == b);  // default tolerance 1e-20
    ComplexScalar c{BigFloat("1.001"), BigFloat(0)};
    CHECK(!(a == c));
}
