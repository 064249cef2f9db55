#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgb/matrix.hpp"

using namespace sgb;

TEST_CASE("whole-graph matrices") {
    FiniteGroup c1 = make_cyclic(1);
    SgbGraph g = build_sgb(c1, enumerate_subgroups(c1));
    DenseSymMatrix a = build_matrix(g, MatrixKind::adjacency);
    REQUIRE(a.dimension == 2);
    CHECK(a.at(0, 0) == 0);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(1, 1) == 0);

    CHECK_THROWS_WITH_AS(build_matrix(g, MatrixKind::adjacency, 1),
                         doctest::Contains("component-wise"), validation_error);
}

TEST_CASE("derived matrices of a small star") {
    DenseSymMatrix star3 = sgb_test::explicit_star_adjacency(3);

    DenseSymMatrix lap = matrix_from_adjacency(star3, MatrixKind::laplacian);
    CHECK(lap.at(0, 0) == 3);
    for (int i = 1; i < 4; ++i) {
        CHECK(lap.at(i, i) == 1);
        CHECK(lap.at(0, i) == -1);
    }
    for (int i = 0; i < 4; ++i) {
        double row = 0;
        for (int j = 0; j < 4; ++j) row += lap.at(i, j);
        CHECK(row == 0); // Laplacian rows sum to zero
    }

    DenseSymMatrix q = matrix_from_adjacency(star3, MatrixKind::signless_laplacian);
    CHECK(q.at(0, 1) == 1);
    CHECK(q.at(0, 0) == 3);

    DenseSymMatrix cn = matrix_from_adjacency(star3, MatrixKind::common_neighborhood);
    for (int i = 1; i < 4; ++i) {
        CHECK(cn.at(0, i) == 0); // center shares no neighbor with a leaf
        for (int j = i + 1; j < 4; ++j) CHECK(cn.at(i, j) == 1);
    }
}

TEST_CASE("common neighborhood matrix basics") {
    DenseSymMatrix k2 = sgb_test::explicit_star_adjacency(1);
    DenseSymMatrix cn2 = cn_matrix(k2);
    CHECK(cn2.at(0, 1) == 0);

    DenseSymMatrix k3(3);
    k3.set(0, 1, 1);
    k3.set(0, 2, 1);
    k3.set(1, 2, 1);
    DenseSymMatrix cn3 = cn_matrix(k3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(cn3.at(i, j) == (i == j ? 0 : 1));

    DenseSymMatrix path(3);
    path.set(0, 1, 1);
    path.set(1, 2, 1);
    DenseSymMatrix cnp = cn_matrix(path);
    CHECK(cnp.at(0, 2) == 1);
    CHECK(cnp.at(0, 1) == 0);
    CHECK(cnp.at(1, 2) == 0);

    DenseSymMatrix bad(2);
    bad.set(0, 1, 2.0);
    CHECK_THROWS_AS(cn_matrix(bad), validation_error);
    DenseSymMatrix loop(2);
    loop.set(0, 0, 1.0);
    CHECK_THROWS_AS(cn_matrix(loop), validation_error);
}

TEST_CASE("common neighborhood matrix agrees with direct counting on random graphs") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> size_dist(2, 15);
    std::bernoulli_distribution edge(0.4);
    for (int trial = 0; trial < 50; ++trial) {
        int n = size_dist(rng);
        DenseSymMatrix adj(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge(rng)) adj.set(i, j, 1.0);
        DenseSymMatrix got = cn_matrix(adj);
        DenseSymMatrix want = sgb_test::direct_common_neighbors(adj);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(got.at(i, j) == want.at(i, j));
    }
}

TEST_CASE("common neighborhood graph of stars splits into K1 and a clique") {
    for (int n = 1; n <= 20; ++n) {
        DenseSymMatrix star = sgb_test::explicit_star_adjacency(n);
        DenseSymMatrix con = common_neighborhood_graph(star);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                double want = (i != j && i >= 1 && j >= 1) ? 1.0 : 0.0;
                CHECK(con.at(i, j) == want);
            }
    }

    DenseSymMatrix k3(3);
    k3.set(0, 1, 1);
    k3.set(0, 2, 1);
    k3.set(1, 2, 1);
    DenseSymMatrix con3 = common_neighborhood_graph(k3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(con3.at(i, j) == k3.at(i, j));
}

TEST_CASE("jacobi eigenvalues") {
    DenseSymMatrix zero(3);
    std::vector<double> z = numeric_eigenvalues(zero);
    CHECK(z == std::vector<double>{0.0, 0.0, 0.0});

    std::vector<double> star4 = numeric_eigenvalues(sgb_test::explicit_star_adjacency(4));
    REQUIRE(star4.size() == 5);
    CHECK(star4[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(star4[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(star4[3] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(star4[4] == doctest::Approx(-2.0).epsilon(1e-12));

    JacobiOptions strict;
    strict.max_sweeps = 0;
    CHECK_THROWS_AS(numeric_eigenvalues(sgb_test::explicit_star_adjacency(1), strict),
                    numeric_error);
}

TEST_CASE("full quaternion graph laplacian spectrum, numerically") {
    FiniteGroup q8 = make_dicyclic(2);
    SgbGraph g = build_sgb(q8, enumerate_subgroups(q8));
    DenseSymMatrix lap = build_matrix(g, MatrixKind::laplacian);
    REQUIRE(lap.dimension == 70);
    std::vector<double> eig = numeric_eigenvalues(lap);

    SpectrumMultiset expected;
    expected.add(RadicalScalar::integer(0), 6);
    expected.add(RadicalScalar::integer(1), 58);
    expected.add(RadicalScalar::integer(2), 1);
    expected.add(RadicalScalar::integer(4), 1);
    expected.add(RadicalScalar::integer(13), 3);
    expected.add(RadicalScalar::integer(25), 1);
    SpectrumMatch m = match_spectra(expected, eig, 1e-8);
    CHECK(m.matched);
}

TEST_CASE("star spectra agree with numeric diagonalization") {
    for (std::int64_t leaves : {0, 1, 2, 3, 12, 24, 48, 96}) {
        DenseSymMatrix adj = sgb_test::explicit_star_adjacency(static_cast<int>(leaves));
        for (MatrixKind kind : kAllMatrixKinds) {
            DenseSymMatrix mat = matrix_from_adjacency(adj, kind);
            std::vector<double> eig = numeric_eigenvalues(mat);
            SpectrumMatch m = match_spectra(star_spectrum(kind, leaves), eig, 1e-8);
            CHECK(m.matched);
        }
    }
}

TEST_CASE("component-wise numeric spectrum matches the exact one") {
    FiniteGroup d6 = make_dihedral(3);
    SgbGraph g = build_sgb(d6, enumerate_subgroups(d6));
    ComponentSummary summary = decompose_components(g);
    for (MatrixKind kind : kAllMatrixKinds) {
        std::vector<double> numeric = numeric_spectrum(g, kind);
        SpectrumMatch m = match_spectra(exact_spectrum(summary, kind), numeric, 1e-8);
        CHECK(m.matched);
    }
}
