#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "sgb/group.hpp"

using namespace sgb;

TEST_CASE("cyclic groups") {
    FiniteGroup c1 = make_cyclic(1);
    CHECK(c1.order() == 1);
    CHECK(c1.identity() == 0);

    FiniteGroup c6 = make_cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(element_order(c6, 2) == 3);

    FiniteGroup c4 = make_cyclic(4);
    CHECK(c4.inverse(1) == 3);

    CHECK_THROWS_AS(make_cyclic(0), validation_error);
}

TEST_CASE("dihedral groups") {
    FiniteGroup d6 = make_dihedral(3);
    CHECK(d6.order() == 6);
    const int a = 1, b = 3; // a^i at i, a^i b at 3+i
    CHECK(element_order(d6, b) == 2);
    CHECK(element_order(d6, a) == 3);
    bool abelian = true;
    for (int x = 0; x < 6 && abelian; ++x)
        for (int y = 0; y < 6 && abelian; ++y)
            if (d6.mul(x, y) != d6.mul(y, x)) abelian = false;
    CHECK_FALSE(abelian);

    FiniteGroup d2 = make_dihedral(1);
    CHECK(d2.order() == 2);
    CHECK(d2.mul(0, 1) == d2.mul(1, 0));

    FiniteGroup d10 = make_dihedral(5);
    int involutions = 0;
    for (int x = 0; x < d10.order(); ++x)
        if (element_order(d10, x) == 2) ++involutions;
    CHECK(involutions == 5);

    CHECK_THROWS_AS(make_dihedral(0), validation_error);
}

TEST_CASE("dihedral defining relations") {
    for (int n : {1, 2, 3, 5, 8}) {
        FiniteGroup g = make_dihedral(n);
        const int a = n > 1 ? 1 : 0;
        const int b = n;
        CHECK(element_order(g, b) <= 2);
        // b a b^-1 = a^-1
        CHECK(g.mul(g.mul(b, a), g.inverse(b)) == g.inverse(a));
        CHECK(g.label(g.identity()) == "e");
    }
}

TEST_CASE("dicyclic groups") {
    FiniteGroup q8 = make_dicyclic(2);
    CHECK(q8.order() == 8);
    int involutions = 0;
    for (int x = 0; x < q8.order(); ++x)
        if (element_order(q8, x) == 2) ++involutions;
    CHECK(involutions == 1);
    const int a = 1, b = 4;
    CHECK(q8.mul(b, b) == q8.mul(a, a)); // b^2 = a^m with m=2
    CHECK(element_order(q8, b) == 4);

    FiniteGroup q4 = make_dicyclic(1);
    CHECK(q4.order() == 4);
    bool has_order4 = false;
    for (int x = 0; x < 4; ++x)
        if (element_order(q4, x) == 4) has_order4 = true;
    CHECK(has_order4); // cyclic of order 4

    FiniteGroup q12 = make_dicyclic(3);
    CHECK(q12.order() == 12);
    CHECK(element_order(q12, 1) == 6);

    CHECK_THROWS_AS(make_dicyclic(0), validation_error);
}

TEST_CASE("dicyclic defining relations") {
    for (int m : {1, 2, 3, 5}) {
        FiniteGroup g = make_dicyclic(m);
        const int a = 1;
        const int b = 2 * m;
        // a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1
        int acc = g.identity();
        for (int k = 0; k < 2 * m; ++k) acc = g.mul(acc, a);
        CHECK(acc == g.identity());
        int am = g.identity();
        for (int k = 0; k < m; ++k) am = g.mul(am, a);
        CHECK(g.mul(b, b) == am);
        CHECK(g.mul(g.mul(b, a), g.inverse(b)) == g.inverse(a));
    }
}

TEST_CASE("group axioms hold exhaustively for constructed groups") {
    std::vector<FiniteGroup> groups;
    groups.push_back(make_cyclic(7));
    groups.push_back(make_dihedral(4));
    groups.push_back(make_dicyclic(3));
    for (const auto& g : groups) {
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.mul(g.identity(), x) == x);
            CHECK(g.mul(x, g.inverse(x)) == g.identity());
            CHECK(g.order() % element_order(g, x) == 0); // Lagrange
            CHECK(element_order(g, x) == sgb_test::naive_element_order(g, x));
        }
    }
}

TEST_CASE("from_cayley_table accepts valid tables") {
    FiniteGroup t = from_cayley_table({{0}});
    CHECK(t.order() == 1);

    FiniteGroup c2 = from_cayley_table({{0, 1}, {1, 0}});
    CHECK(c2.order() == 2);

    // Identity detection: here the identity sits at index 1.
    FiniteGroup swapped = from_cayley_table({{1, 0}, {0, 1}});
    CHECK(swapped.identity() == 1);
}

TEST_CASE("from_cayley_table rejects bad tables with distinct messages") {
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1}}), doctest::Contains("not square"),
                         validation_error);
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 5}, {5, 0}}), doctest::Contains("out of range"),
                         validation_error);
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1}, {1, 1}}),
                         doctest::Contains("latin-square failure"), validation_error);
    // Latin square with no two-sided identity.
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}),
                         doctest::Contains("no identity"), validation_error);
    // Loop with identity and two-sided inverses that is not associative.
    CHECK_THROWS_WITH_AS(from_cayley_table({{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}}),
                         doctest::Contains("associativity failure"), validation_error);
}

TEST_CASE("cayley text round trip") {
    FiniteGroup d6 = make_dihedral(3);
    std::istringstream in(format_cayley_table(d6));
    FiniteGroup back = parse_cayley_stream(in);
    CHECK(back.order() == d6.order());
    CHECK(back.cayley() == d6.cayley());
    CHECK(back.label(4) == d6.label(4));
}

TEST_CASE("cayley parse errors name the line") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_cayley_stream(in);
    };
    CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("line 1"), parse_error);
    CHECK_THROWS_WITH_AS(parse("2\n0 1\n1 0 0\n"), doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_WITH_AS(parse("2\n0 1\n"), doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_WITH_AS(parse("2\n0 1\n1 x\n"), doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_WITH_AS(parse("2\n0 3\n1 0\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse("2\n0 1\n1 0\n5 foo\n"), doctest::Contains("line 4"), parse_error);
    // Whitespace variations parse fine.
    FiniteGroup g = parse("  2 \n\n  0   1\n1\t0\n\n0 e\n1 g\n");
    CHECK(g.order() == 2);
    CHECK(g.label(1) == "g");
}

TEST_CASE("group spec grammar") {
    GroupSpec s = parse_group_spec("dihedral:3");
    CHECK(s.family == GroupSpec::Family::dihedral);
    CHECK(s.parameter == 3);
    CHECK(build_group(s).order() == 6);

    CHECK(parse_group_spec("cayley:/tmp/x.txt").path == "/tmp/x.txt");
    CHECK_THROWS_AS(parse_group_spec("dihedral"), validation_error);
    CHECK_THROWS_AS(parse_group_spec("foo:3"), validation_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic:x"), validation_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic:0"), validation_error);
}
