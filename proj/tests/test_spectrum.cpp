#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "linespect/eigensolver.hpp"
#include "linespect/graph.hpp"
#include "linespect/spectrum.hpp"

using namespace linespect;

namespace {

// Finite-difference derivative of lambda_k(eps) at 0 through the eigensolver
// (ascending position n-k carries index k).
double fd_derivative(int n, int k, int m1, int m2, double eps) {
    const LineGraphSpec g = LineGraphSpec::canonical(n);
    const EigenDecomposition d0 = eig_symmetric(build_laplacian(g));
    const EigenDecomposition d1 =
        eig_symmetric(build_perturbed_laplacian(g, PerturbationSpec(m1, m2, eps)));
    return (d1.eigenvalues[n - k] - d0.eigenvalues[n - k]) / eps;
}

} // namespace

TEST_CASE("closed-form eigenvalues") {
    CHECK_THROWS_AS(closed_form_eigenvalues(1), std::invalid_argument);

    SUBCASE("n = 4 matches the 4-node spectrum as a set") {
        std::vector<double> lams = closed_form_eigenvalues(4);
        CHECK(lams[0] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
        CHECK(lams[1] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(lams[2] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
        CHECK(lams[3] == 0.0);
        std::sort(lams.begin(), lams.end());
        const double printed[] = {0.0, 0.586, 2.0, 3.414}; // 3-decimal reference values
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(lams[i] - printed[i]) <= 5e-4);
    }

    SUBCASE("n = 2 gives {2, 0}") {
        const std::vector<double> lams = closed_form_eigenvalues(2);
        CHECK(lams[0] == doctest::Approx(2.0));
        CHECK(lams[1] == 0.0);
    }

    SUBCASE("strictly decreasing in k, zero mode last") {
        for (int n : {2, 5, 17, 64}) {
            const std::vector<double> lams = closed_form_eigenvalues(n);
            for (int j = 1; j < n; ++j)
                CHECK(lams[j] < lams[j - 1]);
            CHECK(lams[n - 1] == 0.0);
        }
    }

    SUBCASE("set equality with the eigensolver") {
        for (int n : {2, 3, 4, 9, 33}) {
            std::vector<double> closed = closed_form_eigenvalues(n);
            std::sort(closed.begin(), closed.end());
            const EigenDecomposition d =
                eig_symmetric(build_laplacian(LineGraphSpec::canonical(n)));
            for (int j = 0; j < n; ++j)
                CHECK(std::abs(closed[j] - d.eigenvalues[j]) <= 1e-12);
        }
    }
}

TEST_CASE("closed-form eigenvectors") {
    CHECK_THROWS_AS(closed_form_eigenvector(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_eigenvector(4, 5), std::invalid_argument);

    SUBCASE("zero mode is the constant vector") {
        const Vector v = closed_form_eigenvector(5, 5);
        for (double x : v)
            CHECK(x == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    }

    SUBCASE("2-node antisymmetric mode") {
        const Vector v = closed_form_eigenvector(2, 1);
        CHECK(std::abs(v[0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
        CHECK(v[1] == doctest::Approx(-v[0]).epsilon(1e-14));
    }

    SUBCASE("eigenvector equation and unit norm") {
        for (int n : {2, 3, 4, 10, 25}) {
            const SymmetricMatrix l = build_laplacian(LineGraphSpec::canonical(n));
            const std::vector<double> lams = closed_form_eigenvalues(n);
            for (int k = 1; k <= n; ++k) {
                const Vector v = closed_form_eigenvector(n, k);
                CHECK(std::abs(norm2(v) - 1.0) <= 1e-12);
                Vector r = l.apply(v);
                for (int i = 0; i < n; ++i)
                    r[i] -= lams[k - 1] * v[i];
                CHECK(norm2(r) <= 1e-10);
            }
        }
    }

    SUBCASE("matches the eigensolver up to sign (n = 4, k = 2)") {
        const EigenDecomposition d =
            eig_symmetric(build_laplacian(LineGraphSpec::canonical(4)));
        const Vector closed = closed_form_eigenvector(4, 2);
        const Vector& oracle = d.eigenvectors[2]; // ascending position n-k = 2
        const double sign = dot(closed, oracle) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < 4; ++i)
            CHECK(closed[i] == doctest::Approx(sign * oracle[i]).epsilon(1e-10));
    }

    SUBCASE("pairwise orthonormal") {
        const ClosedFormSpectrum s = closed_form_spectrum(LineGraphSpec::canonical(16));
        for (int a = 0; a < 16; ++a)
            for (int b = a; b < 16; ++b) {
                const double g = dot(s.entries[a].eigenvector, s.entries[b].eigenvector);
                CHECK(std::abs(g - (a == b ? 1.0 : 0.0)) <= 1e-12);
            }
    }
}

TEST_CASE("closed_form_spectrum rejects non-canonical graphs") {
    try {
        closed_form_spectrum(LineGraphSpec(3, {1.0, 2.0}));
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("unit-weight") != std::string::npos);
    }
}

TEST_CASE("lambda_prime closed form") {
    CHECK_THROWS_AS(lambda_prime(4, 0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(lambda_prime(4, 2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_prime(4, 2, 2, 5), std::invalid_argument);

    SUBCASE("frozen 4-node values") {
        CHECK(lambda_prime(4, 2, 2, 4) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(lambda_prime(4, 1, 2, 4) == doctest::Approx(0.14644660940672619).epsilon(1e-12));
        CHECK(lambda_prime(4, 3, 2, 4) == doctest::Approx(0.85355339059327373).epsilon(1e-12));
        CHECK(lambda_prime(4, 4, 2, 4) == 0.0);
        const double sum = lambda_prime(4, 1, 2, 4) + lambda_prime(4, 2, 2, 4) +
                           lambda_prime(4, 3, 2, 4) + lambda_prime(4, 4, 2, 4);
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }

    SUBCASE("zero mode is preserved exactly") {
        for (int n : {2, 5, 13, 64})
            for (int m1 = 1; m1 < n; ++m1)
                CHECK(std::abs(lambda_prime(n, n, m1, n)) <= 1e-14);
        CHECK(std::abs(lambda_prime(17, 17, 3, 9)) <= 1e-14);
    }

    SUBCASE("non-negative everywhere") {
        std::mt19937 rng(321);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 40);
            int m1 = 1 + static_cast<int>(rng() % n);
            int m2 = 1 + static_cast<int>(rng() % n);
            if (m1 == m2)
                continue;
            if (m1 > m2)
                std::swap(m1, m2);
            const int k = 1 + static_cast<int>(rng() % n);
            CHECK(lambda_prime(n, k, m1, m2) >= 0.0);
        }
    }

    SUBCASE("trace sum rule") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 63);
            int m1 = 1 + static_cast<int>(rng() % n);
            int m2 = 1 + static_cast<int>(rng() % n);
            if (m1 == m2)
                continue;
            if (m1 > m2)
                std::swap(m1, m2);
            double sum = 0.0;
            for (int k = 1; k <= n; ++k)
                sum += lambda_prime(n, k, m1, m2);
            CHECK(std::abs(sum - 2.0) <= 1e-10);
        }
    }

    SUBCASE("equals the Rayleigh quotient of eigensolver vectors") {
        for (int n : {2, 4, 7, 16, 40, 64}) {
            const EigenDecomposition d =
                eig_symmetric(build_laplacian(LineGraphSpec::canonical(n)));
            std::mt19937 rng(n);
            for (int trial = 0; trial < 3; ++trial) {
                int m1 = 1 + static_cast<int>(rng() % n);
                int m2 = 1 + static_cast<int>(rng() % n);
                if (m1 == m2)
                    m2 = m1 == n ? 1 : m1 + 1;
                if (m1 > m2)
                    std::swap(m1, m2);
                for (int k = 1; k <= n; ++k) {
                    const Vector& v = d.eigenvectors[n - k];
                    const double u = v[m1 - 1] - v[m2 - 1];
                    CHECK(std::abs(lambda_prime(n, k, m1, m2) - u * u) <= 1e-12);
                }
            }
        }
    }

    SUBCASE("finite-difference agreement shrinks linearly in eps") {
        const struct {
            int n, k, m1, m2;
        } cases[] = {{4, 2, 2, 4}, {8, 3, 1, 8}};
        for (const auto& c : cases) {
            const double lp = lambda_prime(c.n, c.k, c.m1, c.m2);
            double prev_err = -1.0;
            for (double eps : {1e-3, 1e-4, 1e-5}) {
                const double err = std::abs(fd_derivative(c.n, c.k, c.m1, c.m2, eps) - lp);
                CHECK(err <= 2.0 * eps); // |second-order coefficient| is well below 2
                if (prev_err > 0.0)
                    CHECK(err <= 0.2 * prev_err);
                prev_err = err;
            }
        }
    }
}

TEST_CASE("lambda_prime_adjugate route") {
    SUBCASE("frozen cases") {
        CHECK(lambda_prime_adjugate(4, 2, 2, 4) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(lambda_prime_adjugate(4, 4, 2, 4)) <= 1e-12);
        CHECK(lambda_prime_adjugate(8, 3, 1, 8) ==
              doctest::Approx(lambda_prime(8, 3, 1, 8)).epsilon(1e-10));
    }

    SUBCASE("agrees with the direct formula up to n = 24") {
        std::mt19937 rng(7);
        for (int n = 2; n <= 24; ++n) {
            for (int trial = 0; trial < 3; ++trial) {
                int m1 = 1 + static_cast<int>(rng() % n);
                int m2 = 1 + static_cast<int>(rng() % n);
                if (m1 == m2)
                    m2 = m1 == n ? 1 : m1 + 1;
                if (m1 > m2)
                    std::swap(m1, m2);
                for (int k = 1; k <= n; ++k) {
                    const double direct = lambda_prime(n, k, m1, m2);
                    const double routed = lambda_prime_adjugate(n, k, m1, m2);
                    CHECK(std::abs(direct - routed) <= 1e-8 * std::max(1.0, direct));
                }
            }
        }
    }
}

TEST_CASE("predict_spectrum") {
    const LineGraphSpec g = LineGraphSpec::canonical(4);

    SUBCASE("rejects non-canonical graphs") {
        CHECK_THROWS_AS(predict_spectrum(LineGraphSpec(4, {1.0, 2.0, 1.0}),
                                         PerturbationSpec(2, 4, 0.1)),
                        std::invalid_argument);
    }

    SUBCASE("zero epsilon reproduces the closed-form eigenvalues") {
        const std::vector<PerturbedPrediction> p =
            predict_spectrum(g, PerturbationSpec(2, 4, 0.0));
        const std::vector<double> lams = closed_form_eigenvalues(4);
        for (int k = 1; k <= 4; ++k) {
            CHECK(p[k - 1].k == k);
            CHECK(p[k - 1].predicted == lams[k - 1]);
            CHECK(p[k - 1].lambda_prime >= 0.0);
        }
    }

    SUBCASE("the 4-node experiment: prediction within eps^2 of the eigensolver") {
        const std::vector<PerturbedPrediction> p =
            predict_spectrum(g, PerturbationSpec(2, 4, 0.1));
        CHECK(p[1].predicted == doctest::Approx(2.1).epsilon(1e-13));
        const EigenDecomposition d = eig_symmetric(
            build_perturbed_laplacian(g, PerturbationSpec(2, 4, 0.1)));
        for (int k = 1; k <= 4; ++k)
            CHECK(std::abs(d.eigenvalues[4 - k] - p[k - 1].predicted) <= 0.01);
        // Zero mode stays put: the perturbed graph is still connected.
        CHECK(p[3].predicted == 0.0);
        CHECK(std::abs(d.eigenvalues[0]) <= 1e-12);
    }

    SUBCASE("per-k predictions are monotone in eps") {
        const std::vector<PerturbedPrediction> lo =
            predict_spectrum(g, PerturbationSpec(2, 4, 0.05));
        const std::vector<PerturbedPrediction> hi =
            predict_spectrum(g, PerturbationSpec(2, 4, 0.15));
        for (int k = 1; k <= 4; ++k)
            CHECK(hi[k - 1].predicted >= lo[k - 1].predicted);
    }
}

TEST_CASE("a sign error in the derivative formula would be caught") {
    // The cross-checks are only meaningful if they can actually detect a
    // transcription slip; emulate one by flipping the parity factor.
    const int n = 4, k = 1, m1 = 2, m2 = 4;
    const double theta = std::numbers::pi * k / n;
    const double wrong_bracket = -std::sin((m1 - 0.5) * theta) // sign flipped
                                 - std::sin((m2 - 0.5) * theta);
    const double wrong = (2.0 / n) * wrong_bracket * wrong_bracket;
    const EigenDecomposition d = eig_symmetric(build_laplacian(LineGraphSpec::canonical(n)));
    const Vector& v = d.eigenvectors[n - k];
    const double rayleigh = (v[m1 - 1] - v[m2 - 1]) * (v[m1 - 1] - v[m2 - 1]);
    CHECK(std::abs(wrong - rayleigh) > 1e-3);
    CHECK(std::abs(lambda_prime(n, k, m1, m2) - rayleigh) <= 1e-12);
}
