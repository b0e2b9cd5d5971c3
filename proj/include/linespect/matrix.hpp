#ifndef LINESPECT_MATRIX_HPP
#define LINESPECT_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace linespect {

using Vector = std::vector<double>;

/// Dense real symmetric matrix. Both triangles are stored and kept in sync
/// by set()/add(), so instances are symmetric by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);

    int order() const { return order_; }

    double operator()(int i, int j) const {
        assert(in_range(i) && in_range(j));
        return data_[static_cast<std::size_t>(i) * order_ + j];
    }

    /// Writes entry (i, j) and its mirror (j, i).
    void set(int i, int j, double value);
    /// Adds to entry (i, j) and its mirror (j, i); diagonal entries once.
    void add(int i, int j, double value);

    double trace() const;
    double row_sum(int i) const;
    double max_abs() const;
    double frobenius_norm() const;

    /// y = A x
    Vector apply(const Vector& x) const;

private:
    bool in_range(int i) const { return i >= 0 && i < order_; }

    int order_;
    std::vector<double> data_;
};

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

/// Determinant of the submatrix obtained by deleting one row and one column
/// (1-based indices, no cofactor sign), via Gaussian elimination with
/// partial pivoting.
double minor_determinant(const SymmetricMatrix& a, int row, int col);

} // namespace linespect

#endif
