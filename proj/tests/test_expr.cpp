#include "doctest.h"

#include "blockreg/expr.hpp"
#include "oracles.hpp"

using namespace blockreg;

TEST_SUITE_BEGIN("expr");

TEST_CASE("space names")
{
    CHECK(parse_space("P1") == Space({1}));
    CHECK(parse_space("P2xP1") == Space({2, 1}));
    CHECK(parse_space(" P3 x P3 x P1 ") == Space({3, 3, 1}));

    for (const Space& space : {Space({1}), Space({2, 1}), Space({1, 1, 1})})
        CHECK(parse_space(space.name()) == space);

    CHECK_THROWS_AS(parse_space("P0"), ParseError);
    CHECK_THROWS_AS(parse_space("P2xP0"), ParseError);
    CHECK_THROWS_AS(parse_space("P2yP1"), ParseError);
    CHECK_THROWS_AS(parse_space("P2xP1x"), ParseError);
    CHECK_THROWS_AS(parse_space(""), ParseError);

    try {
        parse_space("Q1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 1);
        CHECK(e.near() == "Q1");
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
}

TEST_CASE("sheaf grammar")
{
    Space p1p1({1, 1});
    Space p2p1({2, 1});

    SplitSheaf f = parse_sheaf("O(1,-2)", p1p1);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].box == BoxProduct::line_bundle(p1p1, MultiDegree({1, -2})));
    CHECK(parse_sheaf("O(1)#O(-2)", p1p1) == f);

    f = parse_sheaf("2*O(1,0) + Om(1,1)#O(2)", p2p1);
    SplitSheaf expect;
    expect.add(2, BoxProduct::line_bundle(p2p1, MultiDegree({1, 0})));
    expect.add(1, BoxProduct({FactorSheaf(2, 1, 1), FactorSheaf(1, 0, 2)}));
    CHECK(f == expect);

    // merged duplicates
    CHECK(parse_sheaf("O(1,0) + 2*O(1,0)", p1p1)
          == parse_sheaf("3*O(1,0)", p1p1));

    // LT is normalized at parse: LT(1,-1) on a P1 factor is O(1)
    f = parse_sheaf("LT(1,-1)#O(0)", p1p1);
    CHECK(f.terms()[0].box == BoxProduct::line_bundle(p1p1, MultiDegree({1, 0})));
    // and Om(n,k) on P^n collapses to a line bundle
    f = parse_sheaf("Om(1,0)#O(0)", p1p1);
    CHECK(f.terms()[0].box == BoxProduct::line_bundle(p1p1, MultiDegree({-2, 0})));

    CHECK(parse_sheaf("0", p1p1).is_zero());
    CHECK(parse_sheaf("  0  ", p1p1).is_zero());
}

TEST_CASE("printing round trip")
{
    oracles::SheafGen gen(64);
    for (const Space& space : {Space({1}), Space({1, 1}), Space({2, 1})})
        for (int rep = 0; rep < 25; ++rep) {
            SplitSheaf f = gen.line_bundle_sum(space, 4, 6);
            CHECK(parse_sheaf(to_string(f), space) == f);
        }

    Space p2p1({2, 1});
    SplitSheaf mixed;
    mixed.add(2, BoxProduct({FactorSheaf(2, 1, -1), FactorSheaf(1, 0, 3)}));
    mixed.add(1, BoxProduct::line_bundle(p2p1, MultiDegree({0, 0})));
    mixed.add(1, BoxProduct({FactorSheaf(2, 2, 2), FactorSheaf(1, 1, 1)}));
    CHECK(parse_sheaf(to_string(mixed), p2p1) == mixed);

    CHECK(to_string(parse_sheaf("0", p2p1)) == "0");
}

TEST_CASE("sheaf errors")
{
    Space p1({1});
    Space p1p1({1, 1});

    CHECK_THROWS_AS(parse_sheaf("O(1)", p1p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1,2,3)", p1p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1,0)#O(2)", p1p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("T(1,0)", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1,0) junk", p1p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("Om(2,0)", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("LT(-1,0)", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1234567890123)", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("O()", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("0 + O(1)", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("", p1), ParseError);
    CHECK_THROWS_AS(parse_sheaf("2O(1)", p1), ParseError);

    try {
        parse_sheaf("O(1) + 0*O(2)", p1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 8);
        CHECK(e.near() == "0");
        CHECK(std::string(e.what()).find("multiplicity must be positive")
              != std::string::npos);
    }
}

TEST_CASE("multidegrees")
{
    Space p1p1({1, 1});
    CHECK(parse_multidegree("(-1,0)", p1p1) == MultiDegree({-1, 0}));
    CHECK(parse_multidegree("-1,0", p1p1) == MultiDegree({-1, 0}));
    CHECK(parse_multidegree(" ( 3 , -4 ) ", p1p1) == MultiDegree({3, -4}));
    CHECK(parse_multidegree("5", Space({2})) == MultiDegree({5}));

    CHECK_THROWS_AS(parse_multidegree("(1)", p1p1), ParseError);
    CHECK_THROWS_AS(parse_multidegree("(1,2,3)", p1p1), ParseError);
    CHECK_THROWS_AS(parse_multidegree("(1,0)x", p1p1), ParseError);
    CHECK_THROWS_AS(parse_multidegree("(1,0", p1p1), ParseError);
    CHECK_THROWS_AS(parse_multidegree("", p1p1), ParseError);
}

TEST_SUITE_END();
