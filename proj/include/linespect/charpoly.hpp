#ifndef LINESPECT_CHARPOLY_HPP
#define LINESPECT_CHARPOLY_HPP

#include "linespect/matrix.hpp"

namespace linespect {

/// Characteristic-polynomial evaluation of the unit-weight path Laplacian
/// L_n and the auxiliary matrix H_n at a point lambda.
///
/// g_k(lambda) = det(lambda I - H_k) satisfies the three-term recursion
///   g_k = (lambda - 2) g_{k-1} - g_{k-2},   g_{-1} = -1, g_0 = 1,
/// and f_n(lambda) = det(lambda I - L_n) = (lambda - 1) g_{n-1} - g_{n-2}.
struct CharPolyValue {
    double lambda;
    double f_value;
    Vector g_values; // g_0 .. g_n
};

/// g_0 .. g_k_max evaluated at lambda (k_max >= 0).
Vector eval_g_sequence(double lambda, int k_max);

/// f_n(lambda) via the recursion. Total for n >= 1.
double eval_f(double lambda, int n);

/// f_n(lambda) and the cached g sequence in one pass.
CharPolyValue eval_char_poly(double lambda, int n);

/// f_n(lambda) via the closed form lambda * F_n / F_1 with
/// F_n = omega_+^n - omega_-^n. Inside (0,4) this reduces to the real
/// expression lambda * sin(n theta) / sin(theta) with lambda = 2cos(theta)+2;
/// outside [0,4] omega_+- are real. At lambda = 0 or 4 the recursion value
/// is returned (the closed form has removable singularities there).
double eval_f_closed_form(double lambda, int n);

/// Trace of adj(lambda_k I - L_n), i.e. the sum of the diagonal minors,
/// evaluated at the k-th closed-form eigenvalue. For 1 <= k <= n-1 this is
///   -2 (-1)^k n cos^2(theta_k / 2) / sin^2(theta_k),  theta_k = pi k / n;
/// for k = n (zero eigenvalue, where that expression is 0/0) the eigen-gap
/// product prod_{j != k} (lambda_k - lambda_j) is returned instead.
double adjugate_trace_closed_form(int k, int n);

/// The (m1, m2) minor of lambda I - L_n (delete row m1 and column m2; no
/// cofactor sign), which factors as g_{m1-1}(lambda) * g_{n-m2}(lambda)
/// for 1 <= m1 < m2 <= n.
double cofactor_m1m2(double lambda, int m1, int m2, int n);

} // namespace linespect

#endif
