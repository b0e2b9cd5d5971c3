#ifndef LINESPECT_VALIDATION_HPP
#define LINESPECT_VALIDATION_HPP

#include <string>
#include <vector>

namespace linespect {

/// Result of one cross-identity family check.
struct IdentityCheckResult {
    std::string family;
    int checks = 0;       // comparisons performed
    bool passed = false;
    double worst = 0.0;   // worst scaled error observed
    std::string witness;  // worst (or first failing) case
};

/// Runs the cross-identity suite tying together the closed forms, the
/// recursions and the eigensolver:
///   - char-poly recursion vs closed form on a lambda grid,
///   - closed-form eigenvalues as roots of the recursion,
///   - adjugate-trace closed form vs g-product sum vs eigen-gap product,
///   - off-diagonal cofactor factorization vs dense minor determinants,
///   - derivative formula vs Rayleigh quotients of eigensolver vectors,
///   - derivative formula vs the adjugate-ratio route,
///   - per-perturbation trace sum rule (derivatives sum to 2).
///
/// Sizes are capped per family (64 / 24 / 8 as appropriate) and further by
/// max_n. Randomized instances use a fixed seed; the suite is
/// deterministic.
std::vector<IdentityCheckResult> run_identity_suite(int max_n);

} // namespace linespect

#endif
