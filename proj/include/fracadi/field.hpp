#ifndef FRACADI_FIELD_HPP
#define FRACADI_FIELD_HPP

#include <Eigen/Dense>

#include <sstream>
#include <string>
#include <utility>

#include "fracadi/errors.hpp"

namespace fracadi {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Interior values u_{i,j} on a 2D mesh. Entry (i, j) is the node (x_{i+1}, y_{j+1});
/// column j holds the horizontal slice y = y_{j+1}, contiguous in memory.
///
/// Extents are fixed at construction. coeffs() hands out a fixed-size map so
/// callers can use Eigen expressions without being able to resize.
template <typename Scalar = double>
class Field {
public:
    using Matrix = DenseMatrix<Scalar>;
    using Map = Eigen::Map<Matrix>;
    using ConstMap = Eigen::Map<const Matrix>;

    Field(int nx, int ny) : values_(Matrix::Zero(check_extent(nx), check_extent(ny))) {}

    explicit Field(Matrix values) : values_(std::move(values))
    {
        check_extent(static_cast<int>(values_.rows()));
        check_extent(static_cast<int>(values_.cols()));
    }

    static Field zeros(int nx, int ny) { return Field(nx, ny); }

    int nx() const { return static_cast<int>(values_.rows()); }
    int ny() const { return static_cast<int>(values_.cols()); }

    Scalar operator()(int i, int j) const { return values_(i, j); }
    Scalar& operator()(int i, int j) { return values_(i, j); }

    const Matrix& values() const { return values_; }
    Map coeffs() { return Map(values_.data(), values_.rows(), values_.cols()); }
    ConstMap coeffs() const { return ConstMap(values_.data(), values_.rows(), values_.cols()); }

    bool same_shape(const Field& other) const
    {
        return nx() == other.nx() && ny() == other.ny();
    }

    bool all_finite() const { return values_.allFinite(); }

private:
    static int check_extent(int n)
    {
        if (n < 1) {
            throw DimensionError("field extents must be positive, got " + std::to_string(n));
        }
        return n;
    }

    Matrix values_;
};

template <typename Scalar>
void require_same_shape(const Field<Scalar>& a, const Field<Scalar>& b, const char* what)
{
    if (!a.same_shape(b)) {
        std::ostringstream msg;
        msg << what << ": field shape " << a.nx() << "x" << a.ny() << " does not match " << b.nx()
            << "x" << b.ny();
        throw DimensionError(msg.str());
    }
}

} // namespace fracadi

#endif // FRACADI_FIELD_HPP
