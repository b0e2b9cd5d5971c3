#include "linespect/charpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "linespect/spectrum.hpp"

namespace linespect {

Vector eval_g_sequence(double lambda, int k_max) {
    if (k_max < 0)
        throw std::invalid_argument("eval_g_sequence: k_max must be >= 0, got " +
                                    std::to_string(k_max));
    Vector g(static_cast<std::size_t>(k_max) + 1);
    g[0] = 1.0;
    double prev = -1.0; // g_{-1}
    for (int k = 1; k <= k_max; ++k) {
        g[k] = (lambda - 2.0) * g[k - 1] - prev;
        prev = g[k - 1];
    }
    return g;
}

double eval_f(double lambda, int n) {
    return eval_char_poly(lambda, n).f_value;
}

CharPolyValue eval_char_poly(double lambda, int n) {
    if (n < 1)
        throw std::invalid_argument("eval_char_poly: n must be >= 1, got " +
                                    std::to_string(n));
    CharPolyValue out;
    out.lambda = lambda;
    out.g_values = eval_g_sequence(lambda, n);
    const double g_nm1 = out.g_values[n - 1];
    const double g_nm2 = n >= 2 ? out.g_values[n - 2] : -1.0;
    out.f_value = (lambda - 1.0) * g_nm1 - g_nm2;
    return out;
}

double eval_f_closed_form(double lambda, int n) {
    if (n < 1)
        throw std::invalid_argument("eval_f_closed_form: n must be >= 1, got " +
                                    std::to_string(n));
    if (n == 1)
        return lambda;
    if (lambda == 0.0 || lambda == 4.0)
        return eval_f(lambda, n); // removable singularities of the ratio

    if (lambda > 0.0 && lambda < 4.0) {
        // lambda = 2 cos(theta) + 2 with theta in (0, pi):
        // f_n = lambda * sin(n theta) / sin(theta).
        const double theta = std::acos(0.5 * lambda - 1.0);
        return lambda * std::sin(n * theta) / std::sin(theta);
    }

    // Outside [0, 4] both roots omega_+- = ((lambda-2) +- sqrt((lambda-2)^2-4))/2
    // are real and f_n = lambda (omega_+^n - omega_-^n) / (omega_+ - omega_-).
    const double x = lambda - 2.0;
    const double root = std::sqrt(x * x - 4.0);
    const double omega_p = 0.5 * (x + root);
    const double omega_m = 0.5 * (x - root);
    return lambda * (std::pow(omega_p, n) - std::pow(omega_m, n)) / root;
}

double adjugate_trace_closed_form(int k, int n) {
    if (n < 2)
        throw std::invalid_argument("adjugate_trace_closed_form: n must be >= 2, got " +
                                    std::to_string(n));
    if (k < 1 || k > n)
        throw std::invalid_argument("adjugate_trace_closed_form: k must be in [1, " +
                                    std::to_string(n) + "], got " + std::to_string(k));
    if (k == n) {
        // theta = pi makes the closed form 0/0; the limit is the eigen-gap
        // product prod_{j != n} (0 - lambda_j).
        const std::vector<double> lams = closed_form_eigenvalues(n);
        double prod = 1.0;
        for (int j = 1; j <= n - 1; ++j)
            prod *= -lams[j - 1];
        return prod;
    }
    const double theta = std::numbers::pi * k / n;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(theta);
    return -2.0 * sign * n * c * c / (s * s);
}

double cofactor_m1m2(double lambda, int m1, int m2, int n) {
    if (!(1 <= m1 && m1 < m2 && m2 <= n))
        throw std::invalid_argument("cofactor_m1m2: need 1 <= m1 < m2 <= n, got m1 = " +
                                    std::to_string(m1) + ", m2 = " + std::to_string(m2) +
                                    ", n = " + std::to_string(n));
    const Vector g = eval_g_sequence(lambda, std::max(m1 - 1, n - m2));
    return g[m1 - 1] * g[n - m2];
}

} // namespace linespect
