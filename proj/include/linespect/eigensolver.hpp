#ifndef LINESPECT_EIGENSOLVER_HPP
#define LINESPECT_EIGENSOLVER_HPP

#include <vector>

#include "linespect/matrix.hpp"

namespace linespect {

/// Full eigendecomposition of a real symmetric matrix.
struct EigenDecomposition {
    int order = 0;
    Vector eigenvalues;                 // ascending
    std::vector<Vector> eigenvectors;   // eigenvectors[j] pairs with eigenvalues[j]
    double residual_bound = 0.0;        // max_j ||A v_j - lambda_j v_j||_2
};

/// Dense symmetric eigensolver via cyclic Jacobi rotations with a fixed
/// row-major sweep order, convergence threshold 1e-14 * ||A||_F and a cap
/// of 100 sweeps. Deterministic: identical inputs give bit-identical
/// output. Eigenvalues are sorted ascending; each eigenvector is
/// normalized so its largest-magnitude entry (lowest index on ties) is
/// positive.
///
/// Throws std::invalid_argument for non-symmetric input and
/// std::runtime_error if the sweep cap is reached, reporting the
/// off-diagonal norm attained.
EigenDecomposition eig_symmetric(const SymmetricMatrix& a);

/// True iff every consecutive gap between ascending eigenvalues exceeds
/// gap_tol.
bool is_simple_spectrum(const EigenDecomposition& d, double gap_tol);

} // namespace linespect

#endif
