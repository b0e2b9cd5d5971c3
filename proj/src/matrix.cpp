#include "linespect/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace linespect {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("SymmetricMatrix: order must be >= 1, got " +
                                    std::to_string(order));
    data_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymmetricMatrix::set(int i, int j, double value) {
    assert(in_range(i) && in_range(j));
    data_[static_cast<std::size_t>(i) * order_ + j] = value;
    data_[static_cast<std::size_t>(j) * order_ + i] = value;
}

void SymmetricMatrix::add(int i, int j, double value) {
    set(i, j, (*this)(i, j) + value);
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < order_; ++i)
        t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::row_sum(int i) const {
    assert(in_range(i));
    double s = 0.0;
    for (int j = 0; j < order_; ++j)
        s += (*this)(i, j);
    return s;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_)
        s += v * v;
    return std::sqrt(s);
}

Vector SymmetricMatrix::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != order_)
        throw std::invalid_argument("SymmetricMatrix::apply: size mismatch");
    Vector y(order_, 0.0);
    for (int i = 0; i < order_; ++i) {
        double s = 0.0;
        for (int j = 0; j < order_; ++j)
            s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm2(const Vector& a) {
    return std::sqrt(dot(a, a));
}

double minor_determinant(const SymmetricMatrix& a, int row, int col) {
    const int n = a.order();
    if (row < 1 || row > n || col < 1 || col > n)
        throw std::invalid_argument("minor_determinant: row/col out of range");
    const int m = n - 1;
    if (m == 0)
        return 1.0; // empty minor

    std::vector<double> b(static_cast<std::size_t>(m) * m);
    for (int i = 0, bi = 0; i < n; ++i) {
        if (i == row - 1) continue;
        for (int j = 0, bj = 0; j < n; ++j) {
            if (j == col - 1) continue;
            b[static_cast<std::size_t>(bi) * m + bj] = a(i, j);
            ++bj;
        }
        ++bi;
    }

    // LU with partial pivoting; determinant = +-prod of pivots.
    double det = 1.0;
    for (int k = 0; k < m; ++k) {
        int piv = k;
        for (int i = k + 1; i < m; ++i)
            if (std::abs(b[static_cast<std::size_t>(i) * m + k]) >
                std::abs(b[static_cast<std::size_t>(piv) * m + k]))
                piv = i;
        if (piv != k) {
            for (int j = 0; j < m; ++j)
                std::swap(b[static_cast<std::size_t>(k) * m + j],
                          b[static_cast<std::size_t>(piv) * m + j]);
            det = -det;
        }
        const double pivot = b[static_cast<std::size_t>(k) * m + k];
        if (pivot == 0.0)
            return 0.0;
        det *= pivot;
        for (int i = k + 1; i < m; ++i) {
            const double factor = b[static_cast<std::size_t>(i) * m + k] / pivot;
            for (int j = k; j < m; ++j)
                b[static_cast<std::size_t>(i) * m + j] -=
                    factor * b[static_cast<std::size_t>(k) * m + j];
        }
    }
    return det;
}

} // namespace linespect
