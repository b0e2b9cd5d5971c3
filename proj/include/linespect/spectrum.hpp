#ifndef LINESPECT_SPECTRUM_HPP
#define LINESPECT_SPECTRUM_HPP

#include <vector>

#include "linespect/graph.hpp"
#include "linespect/matrix.hpp"

namespace linespect {

/// One closed-form eigenpair of the unit-weight path Laplacian. The index
/// k runs 1..n with lambda_k = 2 cos(pi k / n) + 2, so eigenvalues are
/// strictly decreasing in k and lambda_n = 0.
struct SpectrumEntry {
    int k;
    double theta;       // pi k / n
    double lambda;
    Vector eigenvector; // unit norm
};

struct ClosedFormSpectrum {
    int n = 0;
    std::vector<SpectrumEntry> entries; // k = 1..n
};

/// First-order prediction for one eigenvalue under an edge perturbation of
/// weight epsilon: predicted = lambda0 + epsilon * lambda_prime.
struct PerturbedPrediction {
    int k;
    double lambda0;
    double lambda_prime; // derivative at epsilon = 0; always >= 0
    double epsilon;
    double predicted;
};

/// lambda_k = 2 cos(pi k / n) + 2 for k = 1..n. Requires n >= 2.
std::vector<double> closed_form_eigenvalues(int n);

/// DCT-II eigenvector for eigenvalue lambda_k: component
/// i = sqrt(2/n) * (-1)^(i-1) * sin((i - 1/2) pi k / n) for k < n, and the
/// constant vector 1/sqrt(n) for k = n. Unit 2-norm.
Vector closed_form_eigenvector(int n, int k);

/// Full closed-form spectrum of a canonical (unit-weight) line graph.
/// Non-canonical specs are rejected.
ClosedFormSpectrum closed_form_spectrum(const LineGraphSpec& graph);

/// First derivative of lambda_k with respect to the perturbation weight at
/// epsilon = 0, for the perturbation between v_m1 and v_m2:
///   (2/n) [ (-1)^m1 sin((m1 - 1/2) pi k / n)
///         - (-1)^m2 sin((m2 - 1/2) pi k / n) ]^2.
/// Always >= 0; exactly 0 for k = n.
double lambda_prime(int n, int k, int m1, int m2);

/// The same derivative computed along the adjugate-ratio route
///   tr(adj[lambda_k I - L] M) / tr(adj[lambda_k I - L])
/// with both traces expanded into g-polynomial products. Exists as an
/// independent cross-check of lambda_prime.
double lambda_prime_adjugate(int n, int k, int m1, int m2);

/// First-order predictions for all n eigenvalues of a canonical line graph
/// under the given perturbation.
std::vector<PerturbedPrediction> predict_spectrum(const LineGraphSpec& graph,
                                                  const PerturbationSpec& pert);

} // namespace linespect

#endif
