#include "linespect/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "linespect/eigensolver.hpp"
#include "linespect/spectrum.hpp"

namespace linespect {

namespace {

constexpr double kGapTol = 1e-9; // a gap collapsing below this flags the step

// Reorders an ascending eigendecomposition into the descending closed-form
// index: k = 1..n maps to ascending position n - k.
std::vector<double> to_k_order(const Vector& ascending) {
    std::vector<double> out(ascending.rbegin(), ascending.rend());
    return out;
}

} // namespace

ErrorStudyResult error_study(const LineGraphSpec& graph, int m1, int m2,
                             const std::vector<double>& epsilons) {
    const int n = graph.vertex_count();
    if (epsilons.empty())
        throw std::invalid_argument("error_study: epsilon list is empty");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0))
            throw std::invalid_argument("error_study: epsilons must be > 0, got " +
                                        std::to_string(epsilons[i]));
        if (i > 0 && !(epsilons[i] > epsilons[i - 1]))
            throw std::invalid_argument("error_study: epsilons must be strictly increasing");
    }

    // Validates canonicality and the (m1, m2) pair in one go.
    const std::vector<PerturbedPrediction> base =
        predict_spectrum(graph, PerturbationSpec(m1, m2, 0.0));

    ErrorStudyResult r;
    r.n = n;
    r.m1 = m1;
    r.m2 = m2;
    r.epsilons = epsilons;
    r.oracle.reserve(epsilons.size());
    r.predicted.reserve(epsilons.size());
    r.errors.reserve(epsilons.size());

    for (std::size_t step = 0; step < epsilons.size(); ++step) {
        const double eps = epsilons[step];
        const PerturbationSpec pert(m1, m2, eps);
        const EigenDecomposition d = eig_symmetric(build_perturbed_laplacian(graph, pert));
        if (!is_simple_spectrum(d, kGapTol))
            r.degenerate_steps.push_back(static_cast<int>(step));

        const std::vector<double> oracle_k = to_k_order(d.eigenvalues);
        std::vector<double> pred_k(n), err_k(n);
        for (int k = 1; k <= n; ++k) {
            const PerturbedPrediction& p = base[k - 1];
            pred_k[k - 1] = p.lambda0 + eps * p.lambda_prime;
            err_k[k - 1] = (oracle_k[k - 1] - pred_k[k - 1]) / (eps * eps);
        }
        r.oracle.push_back(std::move(oracle_k));
        r.predicted.push_back(std::move(pred_k));
        r.errors.push_back(std::move(err_k));
    }
    return r;
}

std::vector<int> align_eigenvector_signs(std::vector<Vector>& current,
                                         const std::vector<Vector>& previous) {
    if (current.size() != previous.size())
        throw std::invalid_argument("align_eigenvector_signs: size mismatch");
    std::vector<int> flipped;
    for (std::size_t j = 0; j < current.size(); ++j) {
        if (dot(current[j], previous[j]) < 0.0) {
            for (double& x : current[j])
                x = -x;
            flipped.push_back(static_cast<int>(j));
        }
    }
    return flipped;
}

ContinuationResult track_eigenvectors(const LineGraphSpec& graph, int m1, int m2,
                                      double eps_start, double eps_end, int steps) {
    const int n = graph.vertex_count();
    if (steps < 2)
        throw std::invalid_argument("track_eigenvectors: steps must be >= 2, got " +
                                    std::to_string(steps));
    if (eps_start > eps_end)
        throw std::invalid_argument("track_eigenvectors: eps_start must be <= eps_end");
    if (!graph.is_canonical())
        throw std::invalid_argument("track_eigenvectors: requires the canonical line graph");

    std::vector<double> eps_values;
    if (eps_start == eps_end) {
        eps_values.push_back(eps_start); // degenerate range: a single sample
    } else {
        eps_values.resize(steps);
        for (int i = 0; i < steps; ++i)
            eps_values[i] = eps_start + (eps_end - eps_start) * i / (steps - 1);
    }

    ContinuationResult r;
    r.n = n;
    r.m1 = m1;
    r.m2 = m2;
    r.epsilons = eps_values;

    for (std::size_t step = 0; step < eps_values.size(); ++step) {
        const PerturbationSpec pert(m1, m2, eps_values[step]);
        const EigenDecomposition d = eig_symmetric(build_perturbed_laplacian(graph, pert));
        if (!is_simple_spectrum(d, kGapTol))
            r.degeneracy_flags.push_back(static_cast<int>(step));

        // Match by eigenvalue order: ascending position n - k pairs with k.
        std::vector<double> lam_k(n);
        std::vector<Vector> vec_k(n);
        for (int k = 1; k <= n; ++k) {
            lam_k[k - 1] = d.eigenvalues[n - k];
            vec_k[k - 1] = d.eigenvectors[n - k];
        }

        if (step > 0) {
            const std::vector<Vector>& prev = r.eigenvectors.back();
            for (int flipped : align_eigenvector_signs(vec_k, prev))
                r.flip_events.push_back({static_cast<int>(step), flipped + 1});
            for (int k = 0; k < n; ++k) {
                Vector diff = vec_k[k];
                for (int i = 0; i < n; ++i)
                    diff[i] -= prev[k][i];
                r.max_step_change = std::max(r.max_step_change, norm2(diff));
            }
        }
        r.eigenvalues.push_back(std::move(lam_k));
        r.eigenvectors.push_back(std::move(vec_k));
    }
    return r;
}

} // namespace linespect
