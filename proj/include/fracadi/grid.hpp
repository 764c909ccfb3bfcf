#ifndef FRACADI_GRID_HPP
#define FRACADI_GRID_HPP

#include <cmath>
#include <sstream>

#include "fracadi/errors.hpp"

namespace fracadi {

/// Uniform mesh L = x_0 < x_1 < ... < x_M = R. Only x_1..x_{M-1} carry unknowns.
template <typename Scalar = double>
class Grid1D {
public:
    Grid1D(Scalar lower, Scalar upper, int cells)
        : lower_(lower), upper_(upper), cells_(cells)
    {
        if (!(std::isfinite(lower) && std::isfinite(upper)) || !(upper > lower)) {
            std::ostringstream msg;
            msg << "invalid grid: interval [" << lower << ", " << upper << "] is degenerate";
            throw InvalidGridError(msg.str());
        }
        if (cells < 2) {
            std::ostringstream msg;
            msg << "invalid grid: " << cells << " cells leave no interior node";
            throw InvalidGridError(msg.str());
        }
        step_ = (upper - lower) / static_cast<Scalar>(cells);
    }

    Scalar lower() const { return lower_; }
    Scalar upper() const { return upper_; }
    int cells() const { return cells_; }
    Scalar step() const { return step_; }
    int interior_count() const { return cells_ - 1; }

    /// x_i = L + i h; node(cells()) is computed from the upper end so it hits R exactly.
    Scalar node(int i) const
    {
        if (i == cells_) {
            return upper_;
        }
        return lower_ + static_cast<Scalar>(i) * step_;
    }

    bool operator==(const Grid1D&) const = default;

private:
    Scalar lower_;
    Scalar upper_;
    int cells_;
    Scalar step_{};
};

template <typename Scalar>
Grid1D<Scalar> build_grid(Scalar lower, Scalar upper, int cells)
{
    return Grid1D<Scalar>(lower, upper, cells);
}

template <typename Scalar = double>
struct Grid2D {
    Grid1D<Scalar> x;
    Grid1D<Scalar> y;

    Grid2D(Grid1D<Scalar> gx, Grid1D<Scalar> gy) : x(gx), y(gy) {}

    long unknowns() const
    {
        return static_cast<long>(x.interior_count()) * y.interior_count();
    }

    bool operator==(const Grid2D&) const = default;
};

} // namespace fracadi

#endif // FRACADI_GRID_HPP
