#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "linespect/graph.hpp"

using namespace linespect;

namespace {

void check_laplacian_shape(const SymmetricMatrix& l) {
    const int n = l.order();
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(l.row_sum(i)) <= 1e-14);
        double off_sum = 0.0;
        for (int j = 0; j < n; ++j)
            if (i != j) {
                CHECK(l(i, j) <= 0.0);
                off_sum += std::abs(l(i, j));
            }
        CHECK(l(i, i) >= off_sum - 1e-14); // diagonally dominant
    }
}

} // namespace

TEST_CASE("line graph spec validation") {
    CHECK_THROWS_AS(LineGraphSpec(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(LineGraphSpec(4, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(LineGraphSpec(3, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(LineGraphSpec(3, {1.0, -2.0}), std::invalid_argument);

    const LineGraphSpec g(3, {2.0, 3.0});
    CHECK(g.vertex_count() == 3);
    CHECK_FALSE(g.is_canonical());
    CHECK(LineGraphSpec::canonical(5).is_canonical());
}

TEST_CASE("perturbation spec normalizes and validates") {
    const PerturbationSpec p(4, 2, 0.1);
    CHECK(p.m1() == 2);
    CHECK(p.m2() == 4);
    CHECK(p.epsilon() == 0.1);
    CHECK_FALSE(p.perturbs_existing_edge());
    CHECK(PerturbationSpec(1, 2, 0.5).perturbs_existing_edge());
    CHECK_THROWS_AS(PerturbationSpec(2, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(PerturbationSpec(0, 3, 0.1), std::invalid_argument);
}

TEST_CASE("laplacian of the 4-node unit line graph") {
    const SymmetricMatrix l = build_laplacian(LineGraphSpec::canonical(4));
    const double diag[] = {1.0, 2.0, 2.0, 1.0};
    for (int i = 0; i < 4; ++i)
        CHECK(l(i, i) == diag[i]);
    for (int i = 0; i < 3; ++i)
        CHECK(l(i, i + 1) == -1.0);
    CHECK(l(0, 2) == 0.0);
    CHECK(l(0, 3) == 0.0);
    check_laplacian_shape(l);
}

TEST_CASE("laplacian smallest case and weighted case") {
    const SymmetricMatrix l2 = build_laplacian(LineGraphSpec::canonical(2));
    CHECK(l2(0, 0) == 1.0);
    CHECK(l2(0, 1) == -1.0);
    CHECK(l2(1, 1) == 1.0);

    const SymmetricMatrix l3 = build_laplacian(LineGraphSpec(3, {2.0, 3.0}));
    CHECK(l3(0, 0) == 2.0);
    CHECK(l3(1, 1) == 5.0);
    CHECK(l3(2, 2) == 3.0);
    CHECK(l3(0, 1) == -2.0);
    CHECK(l3(1, 2) == -3.0);
    check_laplacian_shape(l3);
}

TEST_CASE("auxiliary matrix") {
    CHECK_THROWS_AS(build_auxiliary_h(0), std::invalid_argument);

    const SymmetricMatrix h1 = build_auxiliary_h(1);
    CHECK(h1(0, 0) == 1.0);

    const SymmetricMatrix h2 = build_auxiliary_h(2);
    CHECK(h2(0, 0) == 2.0);
    CHECK(h2(0, 1) == -1.0);
    CHECK(h2(1, 1) == 1.0);

    const SymmetricMatrix h3 = build_auxiliary_h(3);
    CHECK(h3(0, 0) == 2.0);
    CHECK(h3(1, 1) == 2.0);
    CHECK(h3(2, 2) == 1.0);
    CHECK(h3(0, 1) == -1.0);
    CHECK(h3(1, 2) == -1.0);
    CHECK(h3(0, 2) == 0.0);
}

TEST_CASE("perturbation matrix structure") {
    const SymmetricMatrix m = build_perturbation_matrix(PerturbationSpec(2, 4, 0.1), 4);
    CHECK(m(1, 1) == 1.0);
    CHECK(m(3, 3) == 1.0);
    CHECK(m(1, 3) == -1.0);
    CHECK(m(3, 1) == -1.0);
    CHECK(m.trace() == 2.0);

    // M = u u^T with u = e_m1 - e_m2, checked entrywise.
    Vector u(4, 0.0);
    u[1] = 1.0;
    u[3] = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m(i, j) == u[i] * u[j]);

    // Annihilates constants.
    const Vector ones(4, 1.0);
    for (double v : m.apply(ones))
        CHECK(v == 0.0);

    // Adjacent pair is the same structure.
    const SymmetricMatrix madj = build_perturbation_matrix(PerturbationSpec(1, 2, 0.5), 3);
    CHECK(madj(0, 0) == 1.0);
    CHECK(madj(1, 1) == 1.0);
    CHECK(madj(0, 1) == -1.0);
    CHECK(madj(2, 2) == 0.0);

    CHECK_THROWS_AS(build_perturbation_matrix(PerturbationSpec(2, 5, 0.1), 4),
                    std::invalid_argument);
}

TEST_CASE("perturbed laplacian") {
    const LineGraphSpec g = LineGraphSpec::canonical(4);

    SUBCASE("zero perturbation leaves the laplacian unchanged") {
        const SymmetricMatrix l = build_laplacian(g);
        const SymmetricMatrix a = build_perturbed_laplacian(g, PerturbationSpec(2, 4, 0.0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(a(i, j) == l(i, j));
    }

    SUBCASE("new edge between 2 and 4") {
        const SymmetricMatrix a = build_perturbed_laplacian(g, PerturbationSpec(2, 4, 0.1));
        CHECK(a(0, 0) == doctest::Approx(1.0));
        CHECK(a(1, 1) == doctest::Approx(2.1));
        CHECK(a(2, 2) == doctest::Approx(2.0));
        CHECK(a(3, 3) == doctest::Approx(1.1));
        CHECK(a(1, 3) == doctest::Approx(-0.1));
        CHECK(a(0, 1) == -1.0);
        check_laplacian_shape(a);
    }

    SUBCASE("adjacent edge increment") {
        const SymmetricMatrix a = build_perturbed_laplacian(LineGraphSpec::canonical(3),
                                                            PerturbationSpec(1, 2, 0.5));
        CHECK(a(0, 1) == doctest::Approx(-1.5));
        CHECK(a(0, 0) == doctest::Approx(1.5));
        check_laplacian_shape(a);
    }

    SUBCASE("decomposition L + eps*M holds entrywise") {
        const PerturbationSpec p(1, 3, 0.25);
        const SymmetricMatrix a = build_perturbed_laplacian(g, p);
        const SymmetricMatrix l = build_laplacian(g);
        const SymmetricMatrix m = build_perturbation_matrix(p, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(a(i, j) == l(i, j) + 0.25 * m(i, j));
    }

    SUBCASE("weight underflow is rejected") {
        CHECK_THROWS_AS(build_perturbed_laplacian(g, PerturbationSpec(1, 2, -1.0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(build_perturbed_laplacian(g, PerturbationSpec(1, 2, -1.5)),
                        std::invalid_argument);
        CHECK_THROWS_AS(build_perturbed_laplacian(g, PerturbationSpec(1, 3, -0.1)),
                        std::invalid_argument);
        // Weakening an existing edge is fine while the weight stays positive.
        CHECK_NOTHROW(build_perturbed_laplacian(g, PerturbationSpec(1, 2, -0.5)));
        CHECK_THROWS_AS(build_perturbed_laplacian(g, PerturbationSpec(2, 5, 0.1)),
                        std::invalid_argument);
    }
}

TEST_CASE("random graphs and perturbations keep the laplacian shape") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> weight(0.1, 5.0);
    std::uniform_real_distribution<double> eps_dist(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 30);
        Vector w(n - 1);
        for (double& x : w)
            x = weight(rng);
        const LineGraphSpec g(n, w);
        check_laplacian_shape(build_laplacian(g));

        int m1 = 1 + static_cast<int>(rng() % n);
        int m2 = 1 + static_cast<int>(rng() % n);
        if (m1 == m2)
            continue;
        if (m1 > m2)
            std::swap(m1, m2);
        const PerturbationSpec p(m1, m2, eps_dist(rng));
        const SymmetricMatrix a = build_perturbed_laplacian(g, p);
        check_laplacian_shape(a);

        // A = L + eps * M entrywise.
        const SymmetricMatrix l = build_laplacian(g);
        const SymmetricMatrix m = build_perturbation_matrix(p, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(a(i, j) == doctest::Approx(l(i, j) + p.epsilon() * m(i, j))
                                     .epsilon(1e-15));
    }
}
