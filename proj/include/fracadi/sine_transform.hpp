#ifndef FRACADI_SINE_TRANSFORM_HPP
#define FRACADI_SINE_TRANSFORM_HPP

#include <cmath>
#include <numbers>
#include <sstream>

#include "fracadi/field.hpp"

namespace fracadi {

/// sin(i k pi / M) with the integer product reduced mod 2M first, so large
/// mode/node products do not lose digits in the argument.
template <typename Scalar = double>
Scalar sine_entry(long i, long k, long cells)
{
    const long period = 2 * cells;
    const long r = (i * k) % period;
    return std::sin(std::numbers::pi_v<Scalar> * static_cast<Scalar>(r) / static_cast<Scalar>(cells));
}

/// DST-I basis P with P(i-1, k-1) = sin(i k pi / M), i, k = 1..M-1.
/// P is symmetric and P * P = (M/2) I.
template <typename Scalar = double>
DenseMatrix<Scalar> sine_matrix(int cells)
{
    const int n = cells - 1;
    DenseMatrix<Scalar> p(n, n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i <= k; ++i) {
            const Scalar s = sine_entry<Scalar>(i + 1, k + 1, cells);
            p(i, k) = s;
            p(k, i) = s;
        }
    }
    return p;
}

/// out_k = sum_i sin(i k pi / M) values_i by direct summation.
template <typename Scalar>
DenseVector<Scalar> sine_transform(const DenseVector<Scalar>& values, int cells)
{
    const long n = cells - 1;
    if (cells < 2 || values.size() != n) {
        std::ostringstream msg;
        msg << "sine_transform: expected " << n << " values for M = " << cells << ", got "
            << values.size();
        throw DimensionError(msg.str());
    }
    DenseVector<Scalar> out(n);
    for (long k = 1; k <= n; ++k) {
        Scalar acc = 0;
        for (long i = 1; i <= n; ++i) {
            acc += sine_entry<Scalar>(i, k, cells) * values(i - 1);
        }
        out(k - 1) = acc;
    }
    return out;
}

/// Precomputed DST-I for one axis length. Forward and inverse act on every
/// slice of a field at once; inverse = (2/M) forward.
template <typename Scalar = double>
class SineBasis {
public:
    explicit SineBasis(int cells)
        : cells_(cells), forward_(sine_matrix<Scalar>(cells)),
          inverse_(forward_ * (Scalar(2) / static_cast<Scalar>(cells)))
    {
    }

    int cells() const { return cells_; }
    int size() const { return cells_ - 1; }
    const DenseMatrix<Scalar>& forward() const { return forward_; }
    const DenseMatrix<Scalar>& inverse() const { return inverse_; }

    /// Physical to sine coefficients along x (rows) for every column.
    DenseMatrix<Scalar> analyze_x(const DenseMatrix<Scalar>& f) const
    {
        check(f.rows(), "x");
        return inverse_ * f;
    }
    DenseMatrix<Scalar> synthesize_x(const DenseMatrix<Scalar>& c) const
    {
        check(c.rows(), "x");
        return forward_ * c;
    }
    /// Along y (columns) for every row. P is symmetric, so no transpose is needed.
    DenseMatrix<Scalar> analyze_y(const DenseMatrix<Scalar>& f) const
    {
        check(f.cols(), "y");
        return f * inverse_;
    }
    DenseMatrix<Scalar> synthesize_y(const DenseMatrix<Scalar>& c) const
    {
        check(c.cols(), "y");
        return c * forward_;
    }

private:
    void check(Eigen::Index n, const char* axis) const
    {
        if (n != size()) {
            std::ostringstream msg;
            msg << "sine basis of order " << size() << " applied along " << axis
                << " to extent " << n;
            throw DimensionError(msg.str());
        }
    }

    int cells_;
    DenseMatrix<Scalar> forward_;
    DenseMatrix<Scalar> inverse_;
};

} // namespace fracadi

#endif // FRACADI_SINE_TRANSFORM_HPP
