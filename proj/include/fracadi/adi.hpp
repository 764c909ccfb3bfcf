#ifndef FRACADI_ADI_HPP
#define FRACADI_ADI_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "fracadi/fractional_operator.hpp"
#include "fracadi/problem.hpp"

namespace fracadi {

/// S_x = (k/2) C_x D_{alpha,x} and T_y = (k/2) C_y D_{beta,y}, kept in the sine
/// basis as their effective symbols sigma.
template <typename Scalar = double>
class SteppingOperators {
public:
    SteppingOperators(FractionalOperator1D<Scalar> x_op, FractionalOperator1D<Scalar> y_op,
                      Scalar time_step)
        : x_(std::move(x_op)), y_(std::move(y_op)), time_step_(time_step)
    {
        if (!(time_step > 0) || !std::isfinite(time_step)) {
            std::ostringstream msg;
            msg << "time step must be positive, got " << time_step;
            throw InputError(msg.str());
        }
        sigma_x_ = (time_step_ / Scalar(2)) * x_.coeff() * x_.symbols();
        sigma_y_ = (time_step_ / Scalar(2)) * y_.coeff() * y_.symbols();
    }

    const FractionalOperator1D<Scalar>& x_operator() const { return x_; }
    const FractionalOperator1D<Scalar>& y_operator() const { return y_; }
    Scalar time_step() const { return time_step_; }
    const DenseVector<Scalar>& sigma_x() const { return sigma_x_; }
    const DenseVector<Scalar>& sigma_y() const { return sigma_y_; }
    int nx() const { return x_.size(); }
    int ny() const { return y_.size(); }

private:
    FractionalOperator1D<Scalar> x_;
    FractionalOperator1D<Scalar> y_;
    Scalar time_step_;
    DenseVector<Scalar> sigma_x_;
    DenseVector<Scalar> sigma_y_;
};

template <typename Scalar>
SteppingOperators<Scalar> make_stepping_operators(const Grid2D<Scalar>& grid, Scalar alpha,
                                                  Scalar beta, Scalar cx, Scalar cy,
                                                  Scalar time_step)
{
    return SteppingOperators<Scalar>(make_operator(grid.x, alpha, cx),
                                     make_operator(grid.y, beta, cy), time_step);
}

template <typename Scalar>
SteppingOperators<Scalar> make_stepping_operators(const Problem<Scalar>& problem,
                                                  const Grid2D<Scalar>& grid, Scalar time_step)
{
    return make_stepping_operators(grid, problem.alpha, problem.beta, problem.cx, problem.cy,
                                   time_step);
}

namespace detail {

template <typename Scalar>
void check_step_inputs(const SteppingOperators<Scalar>& ops, const Field<Scalar>& state,
                       const Field<Scalar>& src_n, const Field<Scalar>& src_np1, const char* what)
{
    if (state.nx() != ops.nx() || state.ny() != ops.ny()) {
        std::ostringstream msg;
        msg << what << ": state is " << state.nx() << "x" << state.ny() << " but operators are "
            << ops.nx() << "x" << ops.ny();
        throw DimensionError(msg.str());
    }
    require_same_shape(state, src_n, what);
    require_same_shape(state, src_np1, what);
    if (!src_n.all_finite() || !src_np1.all_finite()) {
        throw InputError(std::string(what) + ": source contains non-finite values");
    }
}

/// Coefficients in the tensor sine basis: (P^{-1} F Q^{-1})_{pq}.
template <typename Scalar>
DenseMatrix<Scalar> to_modes(const SteppingOperators<Scalar>& ops, const DenseMatrix<Scalar>& f)
{
    return ops.y_operator().basis().analyze_y(ops.x_operator().basis().analyze_x(f));
}

template <typename Scalar>
DenseMatrix<Scalar> from_modes(const SteppingOperators<Scalar>& ops, const DenseMatrix<Scalar>& c)
{
    return ops.y_operator().basis().synthesize_y(ops.x_operator().basis().synthesize_x(c));
}

} // namespace detail

/// One Peaceman-Rachford step.
///   (1 + S_x) u* = (1 - T_y) u^n + F      solved on every horizontal slice
///   (1 + T_y) u^{n+1} = (1 - S_x) u* + F  solved on every vertical slice
/// with F = (k/4)(s^n + s^{n+1}), so the two sweeps compose to the factored scheme.
/// Each slice solve is diagonal in the sine basis; u* is held in physical space.
template <typename Scalar>
Field<Scalar> pr_step(const Field<Scalar>& state, const SteppingOperators<Scalar>& ops,
                      const Field<Scalar>& src_n, const Field<Scalar>& src_np1)
{
    detail::check_step_inputs(ops, state, src_n, src_np1, "pr_step");
    const auto& bx = ops.x_operator().basis();
    const auto& by = ops.y_operator().basis();
    const DenseVector<Scalar> one_x = DenseVector<Scalar>::Ones(ops.nx());
    const DenseVector<Scalar> one_y = DenseVector<Scalar>::Ones(ops.ny());

    const DenseMatrix<Scalar> forcing
        = (ops.time_step() / Scalar(4)) * (src_n.values() + src_np1.values());

    DenseMatrix<Scalar> rhs
        = detail::apply_diagonal<Scalar>(by, one_y - ops.sigma_y(), state.values(), Axis::y)
        + forcing;
    const DenseMatrix<Scalar> intermediate = detail::apply_diagonal<Scalar>(
        bx, (one_x + ops.sigma_x()).cwiseInverse(), rhs, Axis::x);

    rhs = detail::apply_diagonal<Scalar>(bx, one_x - ops.sigma_x(), intermediate, Axis::x)
        + forcing;
    return Field<Scalar>(detail::apply_diagonal<Scalar>(
        by, (one_y + ops.sigma_y()).cwiseInverse(), rhs, Axis::y));
}

/// (1 + S_x)(1 + T_y) u^{n+1} = (1 - S_x)(1 - T_y) u^n + (k/2)(s^n + s^{n+1}),
/// solved directly in the tensor sine basis.
template <typename Scalar>
Field<Scalar> factored_step(const Field<Scalar>& state, const SteppingOperators<Scalar>& ops,
                            const Field<Scalar>& src_n, const Field<Scalar>& src_np1)
{
    detail::check_step_inputs(ops, state, src_n, src_np1, "factored_step");
    const DenseMatrix<Scalar> u = detail::to_modes(ops, state.values());
    const DenseMatrix<Scalar> g = detail::to_modes(
        ops, ((ops.time_step() / Scalar(2)) * (src_n.values() + src_np1.values())).eval());

    DenseMatrix<Scalar> next(ops.nx(), ops.ny());
    for (int q = 0; q < ops.ny(); ++q) {
        const Scalar sy = ops.sigma_y()(q);
        for (int p = 0; p < ops.nx(); ++p) {
            const Scalar sx = ops.sigma_x()(p);
            next(p, q) = ((Scalar(1) - sx) * (Scalar(1) - sy) * u(p, q) + g(p, q))
                / ((Scalar(1) + sx) * (Scalar(1) + sy));
        }
    }
    return Field<Scalar>(detail::from_modes(ops, next));
}

/// Unsplit Crank-Nicolson:
/// (1 + S_x + T_y) u^{n+1} = (1 - S_x - T_y) u^n + (k/2)(s^n + s^{n+1}).
template <typename Scalar>
Field<Scalar> unsplit_cn_step(const Field<Scalar>& state, const SteppingOperators<Scalar>& ops,
                              const Field<Scalar>& src_n, const Field<Scalar>& src_np1)
{
    detail::check_step_inputs(ops, state, src_n, src_np1, "unsplit_cn_step");
    const DenseMatrix<Scalar> u = detail::to_modes(ops, state.values());
    const DenseMatrix<Scalar> g = detail::to_modes(
        ops, ((ops.time_step() / Scalar(2)) * (src_n.values() + src_np1.values())).eval());

    DenseMatrix<Scalar> next(ops.nx(), ops.ny());
    for (int q = 0; q < ops.ny(); ++q) {
        for (int p = 0; p < ops.nx(); ++p) {
            const Scalar s = ops.sigma_x()(p) + ops.sigma_y()(q);
            next(p, q) = ((Scalar(1) - s) * u(p, q) + g(p, q)) / (Scalar(1) + s);
        }
    }
    return Field<Scalar>(detail::from_modes(ops, next));
}

/// S_x T_y (next - state): the term by which the factored scheme's left and
/// right operators differ from unsplit Crank-Nicolson.
template <typename Scalar>
Field<Scalar> splitting_perturbation(const SteppingOperators<Scalar>& ops, const Field<Scalar>& state,
                                     const Field<Scalar>& next)
{
    require_same_shape(state, next, "splitting_perturbation");
    DenseMatrix<Scalar> c = detail::to_modes(ops, (next.values() - state.values()).eval());
    c = ops.sigma_x().asDiagonal() * c * ops.sigma_y().asDiagonal();
    return Field<Scalar>(detail::from_modes(ops, c));
}

/// max_i |1 - sigma_i| / (1 + sigma_i) for the x and y one-dimensional
/// amplification matrices (I + S)^{-1}(I - S).
template <typename Scalar>
std::pair<Scalar, Scalar> amplification_spectral_radius(const SteppingOperators<Scalar>& ops)
{
    auto radius = [](const DenseVector<Scalar>& sigma) {
        Scalar r = 0;
        for (Eigen::Index i = 0; i < sigma.size(); ++i) {
            r = std::max(r, std::abs(Scalar(1) - sigma(i)) / (Scalar(1) + sigma(i)));
        }
        return r;
    };
    return {radius(ops.sigma_x()), radius(ops.sigma_y())};
}

template <typename Scalar = double>
struct StepReport {
    Scalar spectral_radius_x = 0;
    Scalar spectral_radius_y = 0;
    Scalar splitting_perturbation_norm = 0;
};

/// Stability radii plus the max-norm of the splitting perturbation for one
/// factored step from `state`.
template <typename Scalar>
StepReport<Scalar> step_report(const SteppingOperators<Scalar>& ops, const Field<Scalar>& state,
                               const Field<Scalar>& src_n, const Field<Scalar>& src_np1)
{
    StepReport<Scalar> report;
    std::tie(report.spectral_radius_x, report.spectral_radius_y)
        = amplification_spectral_radius(ops);
    const Field<Scalar> next = factored_step(state, ops, src_n, src_np1);
    report.splitting_perturbation_norm
        = splitting_perturbation(ops, state, next).values().cwiseAbs().maxCoeff();
    return report;
}

enum class Stepper { peaceman_rachford, factored, unsplit };

/// Advances the problem from t = 0 to t = horizon in `time_steps` uniform steps
/// of k = horizon / time_steps and returns u^N.
template <typename Scalar>
Field<Scalar> solve(const Problem<Scalar>& problem, const Grid2D<Scalar>& grid, int time_steps,
                    Stepper stepper = Stepper::peaceman_rachford)
{
    if (time_steps < 1) {
        throw InputError("solve: time_steps must be at least 1, got "
                         + std::to_string(time_steps));
    }
    problem.validate();
    const Scalar k = problem.horizon / static_cast<Scalar>(time_steps);
    const SteppingOperators<Scalar> ops = make_stepping_operators(problem, grid, k);

    Field<Scalar> u = sample_field<Scalar>(problem.initial, grid);
    Field<Scalar> src_n = sample_field<Scalar>(problem.source, grid, Scalar(0));
    for (int n = 0; n < time_steps; ++n) {
        const Scalar t_next = n + 1 == time_steps ? problem.horizon : k * static_cast<Scalar>(n + 1);
        Field<Scalar> src_np1 = sample_field<Scalar>(problem.source, grid, t_next);
        switch (stepper) {
        case Stepper::peaceman_rachford:
            u = pr_step(u, ops, src_n, src_np1);
            break;
        case Stepper::factored:
            u = factored_step(u, ops, src_n, src_np1);
            break;
        case Stepper::unsplit:
            u = unsplit_cn_step(u, ops, src_n, src_np1);
            break;
        }
        if (!u.all_finite()) {
            std::ostringstream msg;
            msg << "solve: non-finite solution after step " << n + 1 << " of " << time_steps
                << " (t = " << t_next << ", k = " << k << ", grid " << u.nx() << "x" << u.ny()
                << ")";
            throw DivergenceError(msg.str());
        }
        src_n = std::move(src_np1);
    }
    return u;
}

} // namespace fracadi

#endif // FRACADI_ADI_HPP
