#ifndef FRACADI_FRACTIONAL_OPERATOR_HPP
#define FRACADI_FRACTIONAL_OPERATOR_HPP

#include <cmath>
#include <memory>
#include <sstream>

#include "fracadi/compact.hpp"
#include "fracadi/sine_transform.hpp"

namespace fracadi {

enum class Axis { x, y };

inline const char* to_string(Axis axis) { return axis == Axis::x ? "x" : "y"; }

/// Discrete fractional Laplacian (-delta^2 / (h^2 (1 + delta^2/12)))^{gamma/2} on one
/// axis, defined through powers of the compact eigenvalues in the DST-I basis.
///
/// `coeff` (C_x or C_y) is carried along for the time stepper; apply_operator
/// and materialize_operator do not scale by it.
template <typename Scalar = double>
class FractionalOperator1D {
public:
    FractionalOperator1D(const Grid1D<Scalar>& grid, Scalar gamma, Scalar coeff)
        : grid_(grid), gamma_(gamma), coeff_(coeff)
    {
        if (!(gamma > Scalar(1) && gamma <= Scalar(2))) {
            std::ostringstream msg;
            msg << "unsupported fractional order " << gamma << ", expected 1 < gamma <= 2";
            throw UnsupportedOrderError(msg.str());
        }
        if (!(coeff >= Scalar(0)) || !std::isfinite(coeff)) {
            std::ostringstream msg;
            msg << "diffusion coefficient must be finite and nonnegative, got " << coeff;
            throw InputError(msg.str());
        }
        symbols_ = compact_eigenvalues(grid);
        if (gamma != Scalar(2)) {
            const Scalar half = gamma / Scalar(2);
            for (Eigen::Index i = 0; i < symbols_.size(); ++i) {
                symbols_(i) = std::pow(symbols_(i), half);
            }
        }
        basis_ = std::make_shared<const SineBasis<Scalar>>(grid.cells());
    }

    const Grid1D<Scalar>& grid() const { return grid_; }
    Scalar gamma() const { return gamma_; }
    Scalar coeff() const { return coeff_; }
    int size() const { return grid_.interior_count(); }
    /// lambda_i^{gamma/2}, i = 1..M-1.
    const DenseVector<Scalar>& symbols() const { return symbols_; }
    const SineBasis<Scalar>& basis() const { return *basis_; }

private:
    Grid1D<Scalar> grid_;
    Scalar gamma_;
    Scalar coeff_;
    DenseVector<Scalar> symbols_;
    std::shared_ptr<const SineBasis<Scalar>> basis_;
};

template <typename Scalar>
FractionalOperator1D<Scalar> make_operator(const Grid1D<Scalar>& grid, Scalar gamma, Scalar coeff)
{
    return FractionalOperator1D<Scalar>(grid, gamma, coeff);
}

namespace detail {

template <typename Scalar>
void require_axis_extent(const FractionalOperator1D<Scalar>& op, const Field<Scalar>& field,
                         Axis axis, const char* what)
{
    const int extent = axis == Axis::x ? field.nx() : field.ny();
    if (extent != op.size()) {
        std::ostringstream msg;
        msg << what << ": operator of order " << op.size() << " applied along " << to_string(axis)
            << " to a field of extent " << extent;
        throw DimensionError(msg.str());
    }
}

/// Multiplies every 1D slice along `axis` by P diag(weights) P^{-1}.
template <typename Scalar>
DenseMatrix<Scalar> apply_diagonal(const SineBasis<Scalar>& basis, const DenseVector<Scalar>& weights,
                                   const DenseMatrix<Scalar>& values, Axis axis)
{
    if (axis == Axis::x) {
        DenseMatrix<Scalar> c = basis.analyze_x(values);
        c = weights.asDiagonal() * c;
        return basis.synthesize_x(c);
    }
    DenseMatrix<Scalar> c = basis.analyze_y(values);
    c = c * weights.asDiagonal();
    return basis.synthesize_y(c);
}

} // namespace detail

/// D_gamma u along `axis`: sine transform, scale by the symbols, inverse transform.
template <typename Scalar>
Field<Scalar> apply_operator(const FractionalOperator1D<Scalar>& op, const Field<Scalar>& field,
                             Axis axis)
{
    detail::require_axis_extent(op, field, axis, "apply_operator");
    return Field<Scalar>(detail::apply_diagonal(op.basis(), op.symbols(), field.values(), axis));
}

/// Dense P diag(symbols) P^{-1} with P^{-1} = (2/M) P. Symmetric positive definite.
template <typename Scalar>
DenseMatrix<Scalar> materialize_operator(const FractionalOperator1D<Scalar>& op)
{
    const auto& basis = op.basis();
    DenseMatrix<Scalar> m = basis.forward() * op.symbols().asDiagonal() * basis.inverse();
    // P diag P is symmetric in exact arithmetic; remove the rounding asymmetry.
    return (m + m.transpose()) / Scalar(2);
}

} // namespace fracadi

#endif // FRACADI_FRACTIONAL_OPERATOR_HPP
