#include "linespect/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linespect {

namespace {

constexpr int kMaxSweeps = 100;

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eig_symmetric(const SymmetricMatrix& input) {
    const int n = input.order();

    // Symmetry guard; the storage keeps both triangles in sync, so this can
    // only trip on memory corruption.
    const double sym_tol = 1e-12 * std::max(1.0, input.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > sym_tol)
                throw std::invalid_argument("eig_symmetric: input matrix is not symmetric");

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = input(i, j);
    }
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double threshold = 1e-14 * input.frobenius_norm();
    const double skip_tol = n > 0 ? threshold / n : 0.0;

    double off = offdiag_norm(a, n);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= kMaxSweeps) {
            std::ostringstream msg;
            msg << "eig_symmetric: no convergence after " << kMaxSweeps
                << " sweeps; off-diagonal norm " << off << " (threshold " << threshold << ")";
            throw std::runtime_error(msg.str());
        }
        // Fixed row-major sweep order keeps the result deterministic.
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= skip_tol)
                    continue;
                const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q)
                        continue;
                    const double aip = A(i, p);
                    const double aiq = A(i, q);
                    A(i, p) = A(p, i) = c * aip - s * aiq;
                    A(i, q) = A(q, i) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = V(i, p);
                    const double viq = V(i, q);
                    V(i, p) = c * vip - s * viq;
                    V(i, q) = s * vip + c * viq;
                }
            }
        }
        off = offdiag_norm(a, n);
    }

    // Sort ascending and carry the eigenvector columns along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return A(x, x) < A(y, y); });

    EigenDecomposition d;
    d.order = n;
    d.eigenvalues.resize(n);
    d.eigenvectors.assign(n, Vector(n));
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        d.eigenvalues[j] = A(src, src);
        Vector& col = d.eigenvectors[j];
        for (int i = 0; i < n; ++i)
            col[i] = V(i, src);
        // Largest-magnitude entry positive, ties broken by lowest index.
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(col[i]) > std::abs(col[imax]))
                imax = i;
        if (col[imax] < 0.0)
            for (double& x : col)
                x = -x;
    }

    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        Vector r = input.apply(d.eigenvectors[j]);
        for (int i = 0; i < n; ++i)
            r[i] -= d.eigenvalues[j] * d.eigenvectors[j][i];
        worst = std::max(worst, norm2(r));
    }
    d.residual_bound = worst;
    return d;
}

bool is_simple_spectrum(const EigenDecomposition& d, double gap_tol) {
    for (std::size_t j = 1; j < d.eigenvalues.size(); ++j)
        if (d.eigenvalues[j] - d.eigenvalues[j - 1] <= gap_tol)
            return false;
    return true;
}

} // namespace linespect
