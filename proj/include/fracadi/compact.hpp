#ifndef FRACADI_COMPACT_HPP
#define FRACADI_COMPACT_HPP

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "fracadi/field.hpp"
#include "fracadi/grid.hpp"

namespace fracadi {

/// Fourth-order compact second derivative on the interior nodes of a 1D grid:
///   A w = B u,  A = (h^2/12) tridiag(1, 10, 1),  B = tridiag(1, -2, 1),
/// with zero values outside the interior (homogeneous Dirichlet).
template <typename Scalar = double>
struct CompactPair {
    Scalar a_off;  // h^2/12
    Scalar a_diag; // 10 h^2/12
    Scalar b_off = 1;
    Scalar b_diag = -2;
    int order;

    explicit CompactPair(const Grid1D<Scalar>& grid)
        : a_off(grid.step() * grid.step() / Scalar(12)), a_diag(Scalar(10) * a_off),
          order(grid.interior_count())
    {
    }

    DenseMatrix<Scalar> dense_a() const { return tridiag(a_off, a_diag); }
    DenseMatrix<Scalar> dense_b() const { return tridiag(b_off, b_diag); }

private:
    DenseMatrix<Scalar> tridiag(Scalar off, Scalar diag) const
    {
        DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(order, order);
        for (int i = 0; i < order; ++i) {
            m(i, i) = diag;
            if (i + 1 < order) {
                m(i, i + 1) = off;
                m(i + 1, i) = off;
            }
        }
        return m;
    }
};

/// Eigenvalues of -A^{-1} B in mode order j = 1..M-1:
///   lambda_j = 12 sin^2(j pi / 2M) / (h^2 (3 - sin^2(j pi / 2M))).
template <typename Scalar>
DenseVector<Scalar> compact_eigenvalues(const Grid1D<Scalar>& grid)
{
    const int m = grid.cells();
    const Scalar h2 = grid.step() * grid.step();
    DenseVector<Scalar> lambda(grid.interior_count());
    for (int j = 1; j < m; ++j) {
        const Scalar s = std::sin(std::numbers::pi_v<Scalar> * static_cast<Scalar>(j)
                                  / (Scalar(2) * static_cast<Scalar>(m)));
        const Scalar s2 = s * s;
        lambda(j - 1) = Scalar(12) * s2 / (h2 * (Scalar(3) - s2));
    }
    return lambda;
}

/// Solves A w = B u with the Thomas algorithm. A is strictly diagonally
/// dominant so no pivoting is needed.
template <typename Scalar>
DenseVector<Scalar> compact_second_derivative(const CompactPair<Scalar>& pair,
                                              const DenseVector<Scalar>& values)
{
    const int n = pair.order;
    if (values.size() != n) {
        std::ostringstream msg;
        msg << "compact_second_derivative: expected " << n << " values, got " << values.size();
        throw DimensionError(msg.str());
    }

    DenseVector<Scalar> rhs(n);
    for (int i = 0; i < n; ++i) {
        const Scalar left = i > 0 ? values(i - 1) : Scalar(0);
        const Scalar right = i + 1 < n ? values(i + 1) : Scalar(0);
        rhs(i) = pair.b_off * (left + right) + pair.b_diag * values(i);
    }

    std::vector<Scalar> upper(static_cast<std::size_t>(n));
    DenseVector<Scalar> w(n);
    Scalar pivot = pair.a_diag;
    upper[0] = pair.a_off / pivot;
    w(0) = rhs(0) / pivot;
    for (int i = 1; i < n; ++i) {
        pivot = pair.a_diag - pair.a_off * upper[static_cast<std::size_t>(i - 1)];
        upper[static_cast<std::size_t>(i)] = pair.a_off / pivot;
        w(i) = (rhs(i) - pair.a_off * w(i - 1)) / pivot;
    }
    for (int i = n - 2; i >= 0; --i) {
        w(i) -= upper[static_cast<std::size_t>(i)] * w(i + 1);
    }
    return w;
}

} // namespace fracadi

#endif // FRACADI_COMPACT_HPP
