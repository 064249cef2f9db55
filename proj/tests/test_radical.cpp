#include <doctest.h>

#include <random>

#include "sgb/radical.hpp"

using namespace sgb;

TEST_CASE("fraction arithmetic") {
    CHECK(Frac(1, 2) + Frac(1, 3) == Frac(5, 6));
    CHECK(Frac(2664, 42) == Frac(444, 7));
    CHECK(Frac(-4, 8) == Frac(-1, 2));
    CHECK(Frac(3, -6) == Frac(-1, 2));
    CHECK(Frac(7) * Frac(0) == Frac(0));
    CHECK((Frac(0)).den == 1);
    CHECK(Frac(1, 3) < Frac(1, 2));
    CHECK(Frac(1, 2).abs() == Frac(1, 2));
    CHECK(Frac(-1, 2).abs() == Frac(1, 2));
    CHECK(Frac(5, 4).to_string() == "5/4");
    CHECK(Frac(5).to_string() == "5");
    CHECK_THROWS_AS(Frac(1, 0), numeric_error);
    CHECK_THROWS_AS(Frac(1) / Frac(0), numeric_error);
    CHECK_THROWS_AS(Frac(INT64_MAX) * Frac(3), numeric_error);
}

TEST_CASE("squarefree reduction") {
    CHECK(squarefree_split(12).multiplier == 2);
    CHECK(squarefree_split(12).squarefree == 3);
    CHECK(squarefree_split(18).multiplier == 3);
    CHECK(squarefree_split(18).squarefree == 2);
    CHECK(squarefree_split(1).squarefree == 1);
    CHECK(squarefree_split(0).multiplier == 0);
    CHECK(squarefree_split(97).squarefree == 97);
}

TEST_CASE("squarefree reduction is value preserving and idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(1, 100000);
    for (int i = 0; i < 500; ++i) {
        std::int64_t r = dist(rng);
        auto s = squarefree_split(r);
        CHECK(s.multiplier * s.multiplier * s.squarefree == r);
        auto again = squarefree_split(s.squarefree);
        CHECK(again.multiplier == 1);
        CHECK(again.squarefree == s.squarefree);
    }
}

TEST_CASE("radical scalars canonicalize") {
    RadicalScalar twelve = RadicalScalar::sqrt_of(12);
    CHECK(twelve.coefficient == Frac(2));
    CHECK(twelve.radicand == 3);

    RadicalScalar eighteen = RadicalScalar::sqrt_of(18);
    CHECK(eighteen.coefficient == Frac(3));
    CHECK(eighteen.radicand == 2);

    RadicalScalar zero(Frac(0), 7);
    CHECK(zero.radicand == 1);
    CHECK(zero.is_zero());

    CHECK(RadicalScalar::sqrt_of(4) == RadicalScalar::integer(2));
    CHECK(twelve.to_string() == "2*sqrt(3)");
    CHECK(RadicalScalar::integer(-5).to_string() == "-5");
}

TEST_CASE("radical ordering is exact") {
    RadicalScalar minus_sqrt3 = RadicalScalar::sqrt_of(3).negated();
    CHECK(RadicalScalar::compare(minus_sqrt3, RadicalScalar::integer(0)) < 0);
    CHECK(RadicalScalar::compare(RadicalScalar::integer(0), RadicalScalar::integer(1)) < 0);
    CHECK(RadicalScalar::compare(RadicalScalar::integer(1), RadicalScalar::sqrt_of(3)) < 0);
    CHECK(RadicalScalar::compare(RadicalScalar::sqrt_of(3), RadicalScalar::integer(2)) < 0);
    // 2*sqrt(2) vs 3*sqrt(2) vs sqrt(3): squares 8, 18, 3
    CHECK(RadicalScalar::compare(RadicalScalar::sqrt_of(8), RadicalScalar::sqrt_of(18)) < 0);
    CHECK(RadicalScalar::compare(RadicalScalar::sqrt_of(3), RadicalScalar::sqrt_of(8)) < 0);
    CHECK(RadicalScalar::compare(RadicalScalar::sqrt_of(8), RadicalScalar::sqrt_of(8)) == 0);
}

TEST_CASE("radical sums merge by radicand") {
    RadicalSum s;
    s.add(RadicalScalar::sqrt_of(12));   // 2 sqrt(3)
    s.add(RadicalScalar::sqrt_of(3));    // + sqrt(3)
    s.add(RadicalScalar::integer(2));
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0] == RadicalScalar::integer(2));
    CHECK(s.terms[1] == RadicalScalar(Frac(3), 3));
    CHECK(s.to_string() == "2 + 3*sqrt(3)");
    CHECK_FALSE(s.is_rational());
    CHECK_THROWS_AS(s.as_fraction(), numeric_error);

    s.add(RadicalScalar(Frac(-3), 3));
    CHECK(s.is_rational());
    CHECK(s.as_fraction() == Frac(2));

    s.add(RadicalScalar::integer(-2));
    CHECK(s.is_zero());
    CHECK(s.to_string() == "0");
    CHECK(s.as_fraction() == Frac(0));
}

TEST_CASE("radical sum float rendering") {
    RadicalSum e;
    e.add(RadicalScalar::integer(2));
    e.add(RadicalScalar(Frac(14), 3));
    e.add(RadicalScalar(Frac(4), 6));
    CHECK(e.to_double() == doctest::Approx(36.0466).epsilon(1e-5));
    CHECK(e.to_string() == "2 + 14*sqrt(3) + 4*sqrt(6)");

    RadicalSum neg;
    neg.add(RadicalScalar(Frac(1), 2));
    neg.add(RadicalScalar(Frac(-3), 5));
    CHECK(neg.to_string() == "sqrt(2) - 3*sqrt(5)");
}
