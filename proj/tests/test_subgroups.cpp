#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sgb/subgroup.hpp"

using namespace sgb;

namespace {

std::vector<int> subgroup_orders(const SubgroupLattice& lat) {
    std::vector<int> orders;
    for (const auto& s : lat.subgroups) orders.push_back(s.order);
    return orders;
}

} // namespace

TEST_CASE("generated subgroup basics") {
    FiniteGroup d6 = make_dihedral(3);
    Subgroup trivial = generated_subgroup(d6, d6.identity(), d6.identity());
    CHECK(trivial.order == 1);

    Subgroup whole = generated_subgroup(d6, 1, 3); // a rotation and a reflection
    CHECK(whole.order == 6);

    FiniteGroup c6 = make_cyclic(6);
    Subgroup full = generated_subgroup(c6, 1, 2);
    CHECK(full.order == 6);

    CHECK_THROWS_AS(generated_subgroup(c6, 0, 99), validation_error);
}

TEST_CASE("subgroup enumeration on known groups") {
    CHECK(enumerate_subgroups(make_cyclic(1)).size() == 1);

    SubgroupLattice d6 = enumerate_subgroups(make_dihedral(3));
    CHECK(subgroup_orders(d6) == std::vector<int>{1, 2, 2, 2, 3, 6});

    SubgroupLattice q8 = enumerate_subgroups(make_dicyclic(2));
    CHECK(subgroup_orders(q8) == std::vector<int>{1, 2, 4, 4, 4, 8});
}

TEST_CASE("enumeration matches exhaustive subset scan up to order 12") {
    std::vector<FiniteGroup> catalog;
    for (int n = 1; n <= 12; ++n) catalog.push_back(make_cyclic(n));
    for (int n = 1; n <= 6; ++n) catalog.push_back(make_dihedral(n));
    for (int m = 1; m <= 3; ++m) catalog.push_back(make_dicyclic(m));

    for (const auto& g : catalog) {
        auto expected = sgb_test::brute_force_subgroup_masks(g);
        SubgroupLattice lat = enumerate_subgroups(g);
        REQUIRE(lat.size() == static_cast<int>(expected.size()));
        std::vector<std::uint32_t> got;
        for (const auto& s : lat.subgroups) {
            std::uint32_t mask = 0;
            for (int x : s.members.members()) mask |= std::uint32_t(1) << x;
            got.push_back(mask);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("cyclic subgroup count equals divisor count") {
    for (int n = 1; n <= 30; ++n)
        CHECK(enumerate_subgroups(make_cyclic(n)).size() == sgb_test::divisor_count(n));
}

TEST_CASE("canonical ordering and index lookup") {
    FiniteGroup d6 = make_dihedral(3);
    SubgroupLattice lat = enumerate_subgroups(d6);

    Subgroup trivial = generated_subgroup(d6, 0, 0);
    CHECK(subgroup_index(lat, trivial) == 0);

    Subgroup whole = generated_subgroup(d6, 1, 3);
    CHECK(subgroup_index(lat, whole) == lat.size() - 1);

    Subgroup rot = generated_subgroup(d6, 1, 1); // <a>, the unique order-3 subgroup
    int pos = subgroup_index(lat, rot);
    CHECK(lat.at(pos).order == 3);
    for (int i = 0; i < lat.size(); ++i)
        if (i != pos) CHECK(lat.at(i).order != 3);

    Subgroup bogus;
    bogus.members = ElementSet(6);
    bogus.members.insert(d6.identity());
    bogus.members.insert(1); // {e, a} is not closed in D6
    bogus.order = 2;
    CHECK_THROWS_WITH_AS(subgroup_index(lat, bogus), doctest::Contains("not a subgroup"),
                         validation_error);
}

TEST_CASE("lattice invariants") {
    for (int param : {4, 6}) {
        FiniteGroup g = make_dihedral(param);
        SubgroupLattice lat = enumerate_subgroups(g);
        for (const auto& s : lat.subgroups) {
            CHECK(is_subgroup_set(g, s.members));
            CHECK(s.members.contains(g.identity()));
            CHECK(g.order() % s.order == 0);
        }
        // No duplicates; trivial and whole group present.
        CHECK(lat.at(0).order == 1);
        CHECK(lat.at(lat.size() - 1).order == g.order());
        for (int i = 1; i < lat.size(); ++i)
            CHECK_FALSE(lat.at(i).members == lat.at(i - 1).members);

        // Every generated pair subgroup appears in the lattice.
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                CHECK_NOTHROW(subgroup_index(lat, generated_subgroup(g, a, b)));
    }
}
