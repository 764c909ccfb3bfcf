#ifndef FRACADI_PROBLEM_HPP
#define FRACADI_PROBLEM_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include "fracadi/field.hpp"
#include "fracadi/grid.hpp"

namespace fracadi {

/// du/dt = C_x d^alpha u/d|x|^alpha + C_y d^beta u/d|y|^beta + s on a rectangle,
/// with u = 0 on the boundary and u(x, y, 0) = initial(x, y).
template <typename Scalar = double>
struct Problem {
    using SpaceTimeFn = std::function<Scalar(Scalar, Scalar, Scalar)>;
    using SpaceFn = std::function<Scalar(Scalar, Scalar)>;

    std::string name;
    Scalar alpha = 2;
    Scalar beta = 2;
    Scalar cx = 0;
    Scalar cy = 0;
    Scalar x_lower = 0;
    Scalar x_upper = 1;
    Scalar y_lower = 0;
    Scalar y_upper = 1;
    Scalar horizon = 1;
    SpaceTimeFn source;
    SpaceFn initial;
    SpaceTimeFn exact; // may be empty

    bool has_exact() const { return static_cast<bool>(exact); }

    Grid2D<Scalar> make_grid(int mx, int my) const
    {
        return Grid2D<Scalar>(Grid1D<Scalar>(x_lower, x_upper, mx),
                              Grid1D<Scalar>(y_lower, y_upper, my));
    }

    /// Checks parameter ranges and that the initial data vanishes on the
    /// boundary, sampling `samples_per_edge` points along each side.
    void validate(int samples_per_edge = 65) const
    {
        auto fail = [this](const std::string& what) {
            throw InputError("problem '" + name + "': " + what);
        };
        auto in_order_range = [](Scalar g) { return g > Scalar(1) && g <= Scalar(2); };
        if (!in_order_range(alpha) || !in_order_range(beta)) {
            std::ostringstream msg;
            msg << "orders alpha = " << alpha << ", beta = " << beta << " must lie in (1, 2]";
            throw UnsupportedOrderError("problem '" + name + "': " + msg.str());
        }
        if (!(cx >= 0) || !(cy >= 0)) {
            fail("diffusion coefficients must be nonnegative");
        }
        if (!(horizon > 0) || !std::isfinite(horizon)) {
            fail("horizon must be positive");
        }
        if (!(x_upper > x_lower) || !(y_upper > y_lower)) {
            fail("domain is degenerate");
        }
        if (!source || !initial) {
            fail("source and initial data are required");
        }

        Scalar scale = 1;
        for (int k = 1; k < samples_per_edge; ++k) {
            const Scalar sx = x_lower + (x_upper - x_lower) * k / samples_per_edge;
            const Scalar sy = y_lower + (y_upper - y_lower) * k / samples_per_edge;
            scale = std::max(scale, std::abs(initial(sx, sy)));
        }
        const Scalar tol = Scalar(1e-12) * scale;
        auto check = [&](Scalar x, Scalar y) {
            const Scalar v = initial(x, y);
            if (!(std::abs(v) <= tol)) {
                std::ostringstream msg;
                msg << "initial data " << v << " at boundary point (" << x << ", " << y
                    << ") is not zero";
                fail(msg.str());
            }
        };
        for (int k = 0; k <= samples_per_edge; ++k) {
            const Scalar sx = x_lower + (x_upper - x_lower) * k / samples_per_edge;
            const Scalar sy = y_lower + (y_upper - y_lower) * k / samples_per_edge;
            check(sx, y_lower);
            check(sx, y_upper);
            check(x_lower, sy);
            check(x_upper, sy);
        }
    }
};

namespace detail {

template <typename Scalar>
[[noreturn]] void non_finite_sample(Scalar x, Scalar y, Scalar value)
{
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite value " << value << " at node (" << x << ", " << y << ")";
    throw InputError(msg.str());
}

} // namespace detail

/// Evaluates f(x_i, y_j, t) at every interior node.
template <typename Scalar, typename Fn>
    requires std::is_invocable_r_v<Scalar, Fn, Scalar, Scalar, Scalar>
Field<Scalar> sample_field(const Fn& f, const Grid2D<Scalar>& grid, Scalar t)
{
    Field<Scalar> out(grid.x.interior_count(), grid.y.interior_count());
    for (int j = 0; j < out.ny(); ++j) {
        const Scalar y = grid.y.node(j + 1);
        for (int i = 0; i < out.nx(); ++i) {
            const Scalar x = grid.x.node(i + 1);
            const Scalar v = f(x, y, t);
            if (!std::isfinite(v)) {
                detail::non_finite_sample(x, y, v);
            }
            out(i, j) = v;
        }
    }
    return out;
}

/// Time-independent overload for initial data.
template <typename Scalar, typename Fn>
    requires std::is_invocable_r_v<Scalar, Fn, Scalar, Scalar>
Field<Scalar> sample_field(const Fn& f, const Grid2D<Scalar>& grid)
{
    return sample_field<Scalar>([&f](Scalar x, Scalar y, Scalar) { return f(x, y); }, grid,
                                Scalar(0));
}

/// Example 1: u = x y (1-x)(1-y) sin(pi t) on (0,1)^2, T = e, C_x = C_y = 1/4.
Problem<double> example1(double alpha = 1.8, double beta = 1.6);

/// Example 2: u = x^2 y^2 (pi-x)(pi-y) e^{-t} on (0,pi)^2, T = 2, C_x = C_y = 1/4.
Problem<double> example2(double alpha = 1.8, double beta = 1.8);

/// "example1" or "example2"; throws InputError otherwise.
Problem<double> problem_by_name(std::string_view name, double alpha, double beta);

} // namespace fracadi

#endif // FRACADI_PROBLEM_HPP
