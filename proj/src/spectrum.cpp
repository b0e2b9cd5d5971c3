#include "linespect/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "linespect/charpoly.hpp"

namespace linespect {

namespace {

void check_index_k(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("eigenvalue index k must be in [1, " + std::to_string(n) +
                                    "], got " + std::to_string(k));
}

void check_pair(int n, int m1, int m2) {
    if (!(1 <= m1 && m1 < m2 && m2 <= n))
        throw std::invalid_argument("perturbed pair must satisfy 1 <= m1 < m2 <= n, got m1 = " +
                                    std::to_string(m1) + ", m2 = " + std::to_string(m2) +
                                    ", n = " + std::to_string(n));
}

void check_canonical(const LineGraphSpec& graph) {
    if (!graph.is_canonical())
        throw std::invalid_argument(
            "closed-form spectrum routines require the canonical (unit-weight) line graph; "
            "use the eigensolver for non-unit weights");
}

double sign_pow(int m) { return m % 2 == 0 ? 1.0 : -1.0; }

} // namespace

std::vector<double> closed_form_eigenvalues(int n) {
    if (n < 2)
        throw std::invalid_argument("closed_form_eigenvalues: n must be >= 2, got " +
                                    std::to_string(n));
    std::vector<double> lams(n);
    for (int k = 1; k <= n; ++k)
        lams[k - 1] = 2.0 * std::cos(std::numbers::pi * k / n) + 2.0;
    lams[n - 1] = 0.0; // pin the zero mode exactly
    return lams;
}

Vector closed_form_eigenvector(int n, int k) {
    if (n < 2)
        throw std::invalid_argument("closed_form_eigenvector: n must be >= 2, got " +
                                    std::to_string(n));
    check_index_k(n, k);
    Vector v(n);
    if (k == n) {
        const double c = 1.0 / std::sqrt(static_cast<double>(n));
        for (int i = 0; i < n; ++i)
            v[i] = c;
        return v;
    }
    const double scale = std::sqrt(2.0 / n);
    const double theta = std::numbers::pi * k / n;
    for (int i = 1; i <= n; ++i)
        v[i - 1] = scale * sign_pow(i - 1) * std::sin((i - 0.5) * theta);
    return v;
}

ClosedFormSpectrum closed_form_spectrum(const LineGraphSpec& graph) {
    check_canonical(graph);
    const int n = graph.vertex_count();
    ClosedFormSpectrum s;
    s.n = n;
    const std::vector<double> lams = closed_form_eigenvalues(n);
    s.entries.reserve(n);
    for (int k = 1; k <= n; ++k)
        s.entries.push_back(
            {k, std::numbers::pi * k / n, lams[k - 1], closed_form_eigenvector(n, k)});
    return s;
}

double lambda_prime(int n, int k, int m1, int m2) {
    if (n < 2)
        throw std::invalid_argument("lambda_prime: n must be >= 2, got " + std::to_string(n));
    check_index_k(n, k);
    check_pair(n, m1, m2);
    const double theta = std::numbers::pi * k / n;
    const double bracket = sign_pow(m1) * std::sin((m1 - 0.5) * theta) -
                           sign_pow(m2) * std::sin((m2 - 0.5) * theta);
    return (2.0 / n) * bracket * bracket;
}

double lambda_prime_adjugate(int n, int k, int m1, int m2) {
    if (n < 2)
        throw std::invalid_argument("lambda_prime_adjugate: n must be >= 2, got " +
                                    std::to_string(n));
    check_index_k(n, k);
    check_pair(n, m1, m2);

    const std::vector<double> lams = closed_form_eigenvalues(n);
    const double lam = lams[k - 1];
    // Canonical line graphs always have simple spectra; guard anyway since a
    // repeated eigenvalue would make the ratio meaningless.
    for (int j = 1; j <= n; ++j)
        if (j != k && std::abs(lams[j - 1] - lam) <= 1e-12)
            throw std::runtime_error("lambda_prime_adjugate: eigenvalue " + std::to_string(k) +
                                     " is degenerate");

    const Vector g = eval_g_sequence(lam, n);

    // tr(adj[lam I - L] M) expanded over the four single-entry pieces of M:
    // two diagonal minors plus the two (m1,m2) minors carrying the
    // (-1)^(m1+m2) adjugate sign.
    const double diag1 = g[m1 - 1] * g[n - m1];
    const double diag2 = g[m2 - 1] * g[n - m2];
    const double off = g[m1 - 1] * g[n - m2];
    const double numerator = diag1 + diag2 - 2.0 * sign_pow(m1 + m2) * off;

    // tr(adj[lam I - L]) as the g-product sum over the diagonal minors.
    double denominator = 0.0;
    for (int i = 1; i <= n; ++i)
        denominator += g[i - 1] * g[n - i];

    return numerator / denominator;
}

std::vector<PerturbedPrediction> predict_spectrum(const LineGraphSpec& graph,
                                                  const PerturbationSpec& pert) {
    check_canonical(graph);
    validate_perturbation(graph, pert);
    const int n = graph.vertex_count();
    const std::vector<double> lams = closed_form_eigenvalues(n);
    std::vector<PerturbedPrediction> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k) {
        const double lp = lambda_prime(n, k, pert.m1(), pert.m2());
        out.push_back({k, lams[k - 1], lp, pert.epsilon(), lams[k - 1] + pert.epsilon() * lp});
    }
    return out;
}

} // namespace linespect
