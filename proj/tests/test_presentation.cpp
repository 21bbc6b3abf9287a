#include <doctest.h>

#include "biquad/catalog.hpp"
#include "biquad/errors.hpp"
#include "biquad/pbw.hpp"
#include "biquad/presentation.hpp"

using namespace biquad;
using S = ParamSymbol;

TEST_SUITE_BEGIN("presentation");

TEST_CASE("parse a well-formed file") {
    const char* text =
        "biquadratic v1\n"
        "q = [2, 1/2, 1]\n"
        "A = [[0,0,0],[0,0,0],[0,0,0]]\n"
        "B = [0, 0, 0]  # trailing comment\n";
    const Presentation p = parse_presentation(text);
    CHECK(p.q(1) == Rat(2));
    CHECK(p.q(2) == Rat(1, 2));
    CHECK(p.q(3) == Rat(1));
}

TEST_CASE("parse rejects q = 0") {
    const char* text =
        "biquadratic v1\n"
        "q = [0, 1, 1]\n"
        "A = [[0,0,0],[0,0,0],[0,0,0]]\n"
        "B = [0, 0, 0]\n";
    CHECK_THROWS_WITH_AS(parse_presentation(text), doctest::Contains("q1"), DomainError);
}

TEST_CASE("parse rejects a two-row matrix") {
    const char* text =
        "biquadratic v1\n"
        "q = [1, 1, 1]\n"
        "A = [[0,0,0],[0,0,0]]\n"
        "B = [0, 0, 0]\n";
    CHECK_THROWS_AS(parse_presentation(text), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_presentation("biquadratic v1\nq = [1, oops, 1]\nA = [[0,0,0],[0,0,0],[0,0,0]]\nB = [0,0,0]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
    CHECK_THROWS_AS(parse_presentation("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_presentation("biquadratic v2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_presentation("biquadratic v1\nq = [1,1,1]\nA = [[0,0,0],[0,0,0],[0,0,0]]\n"),
        ParseError);  // missing B
}

TEST_CASE("render-parse round trip") {
    for (const auto& entry : catalog3()) {
        const Presentation p = instantiate_default(entry);
        CHECK(parse_presentation(render_presentation(p)) == p);
    }
}

TEST_CASE("catalog has the right shape") {
    CHECK(catalog3().size() == 44);
    CHECK(catalog2().size() == 5);

    int smooth = 0, star = 0, open = 0;
    for (const auto& e : catalog3()) {
        if (e.claimed == Claim::smooth) ++smooth;
        else if (e.claimed == Claim::not_smooth) ++star;
        else ++open;
    }
    CHECK(smooth == 22);
    CHECK(star == 21);
    CHECK(open == 1);

    int per_table[9] = {0};
    for (const auto& e : catalog3()) ++per_table[e.table];
    CHECK(per_table[1] == 6);
    CHECK(per_table[2] == 10);
    CHECK(per_table[3] == 5);
    CHECK(per_table[4] == 10);
    CHECK(per_table[5] == 4);
    CHECK(per_table[6] == 4);
    CHECK(per_table[7] == 4);
    CHECK(per_table[8] == 1);
}

TEST_CASE("u_sl2 entry matches its matrix form") {
    const CatalogEntry* e = find_entry("u_sl2");
    REQUIRE(e != nullptr);
    CHECK(e->claimed == Claim::not_smooth);
    const Presentation p = instantiate_default(*e);
    CHECK(p.q(1) == Rat(1));
    CHECK(p.A(1, 3) == Rat(-1));
    CHECK(p.A(2, 1) == Rat(2));
    CHECK(p.A(3, 2) == Rat(-2));
    CHECK(p.B(1) == Rat(0));
}

TEST_CASE("derived slots: e1 forces q2 = 1/q1 and q3 = 1") {
    const CatalogEntry* e = find_entry("e1");
    REQUIRE(e != nullptr);
    const Presentation p = instantiate(*e, {{S::q1, Rat(2)}});
    CHECK(p.q(1) == Rat(2));
    CHECK(p.q(2) == Rat(1, 2));
    CHECK(p.q(3) == Rat(1));
}

TEST_CASE("side constraints are enforced") {
    const CatalogEntry* a1 = find_entry("a1");
    REQUIRE(a1 != nullptr);
    CHECK_THROWS_WITH_AS(instantiate(*a1, {{S::q1, Rat(2)}, {S::mu, Rat(-1)}}),
                         doctest::Contains("mu != -1"), DomainError);
    CHECK_THROWS_WITH_AS(instantiate(*a1, {{S::q1, Rat(1)}, {S::mu, Rat(0)}}),
                         doctest::Contains("q1 != 1"), DomainError);

    const CatalogEntry* d2 = find_entry("d2");
    REQUIRE(d2 != nullptr);
    CHECK_THROWS_WITH_AS(instantiate(*d2, {{S::q1, Rat(2)}, {S::b1, Rat(1)}}),
                         doctest::Contains("b1 != 1"), DomainError);

    CHECK_THROWS_WITH_AS(instantiate(*a1, {{S::q1, Rat(2)}}), doctest::Contains("mu"),
                         DomainError);
}

TEST_CASE("default instantiation violates no side constraint") {
    for (const auto& e : catalog3()) CHECK_NOTHROW(instantiate_default(e));
}

TEST_CASE("every instantiated catalog entry has a PBW basis") {
    for (const auto& e : catalog3()) {
        const Presentation p = instantiate_default(e);
        CAPTURE(e.name);
        CHECK(is_pbw(p));
    }
}

TEST_CASE("two-generator entries") {
    const auto& two = catalog2();
    CHECK(two[0].name == "poly2");
    CHECK(two[4].name == "quantum_weyl");
    int smooth = 0, unknown = 0;
    for (const auto& e : two) (e.claimed == Claim::smooth ? smooth : unknown)++;
    CHECK(smooth == 4);
    CHECK(unknown == 1);
}

TEST_SUITE_END();
