#ifndef LINESPECT_ANALYSIS_HPP
#define LINESPECT_ANALYSIS_HPP

#include <vector>

#include "linespect/graph.hpp"
#include "linespect/matrix.hpp"

namespace linespect {

/// Second-order error study of the first-order prediction:
///   E(k, eps) = (lambda_k(eps) - (lambda_k(0) + eps lambda_k'(0))) / eps^2
/// with lambda_k(eps) taken from the eigensolver. All per-k sequences are
/// indexed in the descending closed-form order (k = 1..n).
struct ErrorStudyResult {
    int n = 0;
    int m1 = 0;
    int m2 = 0;
    std::vector<double> epsilons;              // strictly increasing, > 0
    std::vector<std::vector<double>> oracle;   // [step][k-1]
    std::vector<std::vector<double>> predicted;// [step][k-1]
    std::vector<std::vector<double>> errors;   // [step][k-1], E values
    std::vector<int> degenerate_steps;         // steps whose spectrum failed the gap test
};

ErrorStudyResult error_study(const LineGraphSpec& graph, int m1, int m2,
                             const std::vector<double>& epsilons);

/// Eigenvector continuation over an epsilon sweep. At each step the
/// perturbed Laplacian is decomposed, eigenpairs are matched to the
/// previous step by eigenvalue order, and each eigenvector's sign is
/// chosen so its inner product with the previous step's vector is
/// non-negative. Applied corrections are recorded as flip events.
struct FlipEvent {
    int step; // 0-based sweep step
    int k;    // 1..n, descending closed-form index
};

struct ContinuationResult {
    int n = 0;
    int m1 = 0;
    int m2 = 0;
    std::vector<double> epsilons;
    std::vector<std::vector<double>> eigenvalues;       // [step][k-1]
    std::vector<std::vector<Vector>> eigenvectors;      // [step][k-1]
    std::vector<FlipEvent> flip_events;
    std::vector<int> degeneracy_flags;                  // steps failing the gap test
    double max_step_change = 0.0; // max over steps and k of ||v_k(step) - v_k(step-1)||
};

/// Sweeps epsilon from eps_start to eps_end in `steps` equally spaced
/// samples (steps >= 2). Equal endpoints collapse to a single sample.
ContinuationResult track_eigenvectors(const LineGraphSpec& graph, int m1, int m2,
                                      double eps_start, double eps_end, int steps);

/// Flips vectors in `current` whose inner product with the matching vector
/// in `previous` is negative; returns the 0-based indices of the flipped
/// vectors. Applying the alignment twice changes nothing.
std::vector<int> align_eigenvector_signs(std::vector<Vector>& current,
                                         const std::vector<Vector>& previous);

} // namespace linespect

#endif
