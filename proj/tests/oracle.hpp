// Test-only brute-force oracles, deliberately independent of the library's
// evaluation paths (recursive cofactor expansion instead of recursions or
// Gaussian elimination).
#ifndef LINESPECT_TESTS_ORACLE_HPP
#define LINESPECT_TESTS_ORACLE_HPP

#include <vector>

#include "linespect/matrix.hpp"

namespace testoracle {

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const linespect::SymmetricMatrix& a) {
    Dense m(a.order(), std::vector<double>(a.order()));
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            m[i][j] = a(i, j);
    return m;
}

// lambda * I - A
inline Dense shifted(const linespect::SymmetricMatrix& a, double lambda) {
    Dense m = to_dense(a);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            m[i][j] = (i == j ? lambda : 0.0) - m[i][j];
    return m;
}

// Deletes row r and column c (0-based).
inline Dense submatrix(const Dense& m, std::size_t r, std::size_t c) {
    Dense out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r)
            continue;
        std::vector<double> row;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != c)
                row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

// Laplace expansion along the first row; fine up to order ~9.
inline double det_laplace(const Dense& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1.0;
    if (n == 1)
        return m[0][0];
    double det = 0.0;
    double sign = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] != 0.0)
            det += sign * m[0][j] * det_laplace(submatrix(m, 0, j));
        sign = -sign;
    }
    return det;
}

} // namespace testoracle

#endif
