#include "doctest.h"

#include "talex/errors.hpp"
#include "talex/presentation.hpp"

using namespace talex;

TEST_CASE("parses the trefoil presentation") {
    Presentation p = parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^2*y^-3\n");
    CHECK(p.num_generators() == 2);
    CHECK(p.num_components == 1);
    REQUIRE(p.relators.size() == 1);
    Word expected = Word::generator(0, 2) * Word::generator(1, -3);
    CHECK(p.relators[0] == expected);
    CHECK(p.abelianization[0] == std::vector<int>{3});
    CHECK(p.abelianization[1] == std::vector<int>{2});
}

TEST_CASE("parses the unknot group (no relators)") {
    Presentation p = parse_presentation("gens: x\nmu: 1\nabel: x=(1)\nrels:\n");
    CHECK(p.num_generators() == 1);
    CHECK(p.relators.empty());
}

TEST_CASE("relation syntax u=v is accepted") {
    Presentation p = parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^2=y^3\n");
    Presentation q = parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^2*y^-3\n");
    CHECK(p.relators == q.relators);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x^\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 4);
        CHECK(e.column >= 9);
    }
}

TEST_CASE("rejects duplicate generator names") {
    CHECK_THROWS_AS(parse_presentation("gens: x x\nmu: 1\nabel: x=(1)\nrels:\n"),
                    validation_error);
}

TEST_CASE("rejects a relator outside the abelianization kernel") {
    CHECK_THROWS_WITH_AS(
        parse_presentation("gens: x y\nmu: 1\nabel: x=(3) y=(2)\nrels: x*y\n"),
        "relator r_1 not in kernel of abelianization", validation_error);
}

TEST_CASE("rejects unknown sections and missing sections") {
    CHECK_THROWS_AS(parse_presentation("generators: x\n"), parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x\nmu: 1\nabel: x=(1)\n"), parse_error);
}

TEST_CASE("extended Euclid picks the canonical (r, s)") {
    TorusLinkParams t23 = TorusLinkParams::make(1, 2, 3);
    CHECK(t23.r == -1);
    CHECK(t23.s == 2);
    TorusLinkParams t11 = TorusLinkParams::make(2, 1, 1);
    CHECK(t11.r == 0);
    CHECK(t11.s == 1);
    TorusLinkParams t21 = TorusLinkParams::make(1, 2, 1);
    CHECK(t21.r == 1);
    CHECK(t21.s == 0);
    for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {2, 5}, {5, 2}, {1, 2}, {4, 7}}) {
        TorusLinkParams t = TorusLinkParams::make(1, p, q);
        CHECK(p * t.s + q * t.r == 1);
    }
}

TEST_CASE("torus_link_presentation matches the reduced presentation") {
    SUBCASE("trefoil mu=1") {
        Presentation p = torus_link_presentation(TorusLinkParams::make(1, 2, 3));
        CHECK(p.generator_names == std::vector<std::string>{"x", "y"});
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0] == Word::generator(0, 2) * Word::generator(1, -3));
        CHECK(p.abelianization[0] == std::vector<int>{3});
        CHECK(p.abelianization[1] == std::vector<int>{2});
    }
    SUBCASE("T(4,6) as mu=2, p=2, q=3") {
        Presentation p = torus_link_presentation(TorusLinkParams::make(2, 2, 3));
        CHECK(p.generator_names == std::vector<std::string>{"m1", "x", "y"});
        REQUIRE(p.relators.size() == 2);
        Word x2 = Word::generator(1, 2);
        Word m1 = Word::generator(0);
        CHECK(p.relators[0] == x2 * m1 * x2.inverse() * m1.inverse());
        CHECK(p.relators[1] == x2 * Word::generator(2, -3));
        CHECK(p.abelianization[0] == std::vector<int>{1, 0});
        CHECK(p.abelianization[1] == std::vector<int>{3, 3});
        CHECK(p.abelianization[2] == std::vector<int>{2, 2});
    }
    SUBCASE("mu=3, p=1, q=2") {
        Presentation p = torus_link_presentation(TorusLinkParams::make(3, 1, 2));
        CHECK(p.generator_names == std::vector<std::string>{"m1", "m2", "x", "y"});
        REQUIRE(p.relators.size() == 3);
        Word x = Word::generator(2);
        CHECK(p.relators[0] == x * Word::generator(0) * x.inverse() * Word::generator(0).inverse());
        CHECK(p.relators[2] == x * Word::generator(3, -2));
    }
    SUBCASE("generator and relator counts") {
        for (int mu = 1; mu <= 4; ++mu) {
            Presentation p = torus_link_presentation(TorusLinkParams::make(mu, 2, 3));
            CHECK(p.num_generators() == (mu == 1 ? 2 : mu + 1));
            CHECK(static_cast<int>(p.relators.size()) == (mu == 1 ? 1 : mu));
        }
    }
}

TEST_CASE("torus_link_presentation rejects non-coprime p, q") {
    CHECK_THROWS_AS(TorusLinkParams::make(1, 2, 4), validation_error);
}

TEST_CASE("full presentation relators all abelianize to zero") {
    for (auto [mu, p, q] : {std::tuple{1, 2, 3}, {2, 2, 3}, {2, 1, 1}, {3, 1, 2}, {1, 3, 4}}) {
        Presentation pres = torus_link_presentation_full(TorusLinkParams::make(mu, p, q));
        CHECK(pres.num_generators() == mu + 3);
        CHECK(static_cast<int>(pres.relators.size()) == mu + 3);
        for (const auto& r : pres.relators) {
            auto v = pres.word_abelianization(r);
            for (int c : v) CHECK(c == 0);
        }
    }
}

TEST_CASE("full presentation of the trefoil matches (r, s) = (-1, 2)") {
    Presentation pres = torus_link_presentation_full(TorusLinkParams::make(1, 2, 3));
    // m1 (x^r y^s)^-1 with r = -1, s = 2
    Word m1 = Word::generator(0);
    Word rhs = Word::generator(1, -1) * Word::generator(2, 2);
    CHECK(pres.relators[0] == m1 * rhs.inverse());
}

TEST_CASE("text round trip") {
    for (auto [mu, p, q] : {std::tuple{1, 2, 3}, {2, 2, 3}, {3, 1, 2}}) {
        Presentation pres = torus_link_presentation(TorusLinkParams::make(mu, p, q));
        Presentation back = parse_presentation(presentation_to_text(pres));
        CHECK(back.generator_names == pres.generator_names);
        CHECK(back.relators == pres.relators);
        CHECK(back.abelianization == pres.abelianization);
        CHECK(back.num_components == pres.num_components);
    }
}
