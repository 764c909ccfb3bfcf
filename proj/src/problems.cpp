#include "fracadi/problem.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fracadi {

namespace {

constexpr double pi = std::numbers::pi;

/// 1 / (2 cos(pi gamma / 2)), negative for 1 < gamma < 2.
double riesz_constant(double gamma) { return 1.0 / (2.0 * std::cos(pi * gamma / 2.0)); }

} // namespace

Problem<double> example1(double alpha, double beta)
{
    Problem<double> p;
    p.name = "example1";
    p.alpha = alpha;
    p.beta = beta;
    p.cx = 0.25;
    p.cy = 0.25;
    p.x_lower = 0.0;
    p.x_upper = 1.0;
    p.y_lower = 0.0;
    p.y_upper = 1.0;
    p.horizon = std::numbers::e;

    const double cx = p.cx;
    const double cy = p.cy;
    const double theta_a = riesz_constant(alpha);
    const double theta_b = riesz_constant(beta);
    const double g2a = std::tgamma(2.0 - alpha);
    const double g3a = std::tgamma(3.0 - alpha);
    const double g2b = std::tgamma(2.0 - beta);
    const double g3b = std::tgamma(3.0 - beta);

    // Braced factor of the source: left plus right Riemann-Liouville
    // derivatives of z(1-z) on (0, 1).
    auto bracket = [](double z, double gamma, double g2, double g3) {
        return (std::pow(z, 1.0 - gamma) + std::pow(1.0 - z, 1.0 - gamma)) / g2
            - 2.0 * (std::pow(z, 2.0 - gamma) + std::pow(1.0 - z, 2.0 - gamma)) / g3;
    };

    p.source = [=](double x, double y, double t) {
        const double st = std::sin(pi * t);
        return cx * y * (1.0 - y) * st * theta_a * bracket(x, alpha, g2a, g3a)
            + cy * x * (1.0 - x) * st * theta_b * bracket(y, beta, g2b, g3b)
            + pi * x * y * (1.0 - x) * (1.0 - y) * std::cos(pi * t);
    };
    p.initial = [](double, double) { return 0.0; };
    p.exact = [](double x, double y, double t) {
        return x * y * (1.0 - x) * (1.0 - y) * std::sin(pi * t);
    };
    return p;
}

Problem<double> example2(double alpha, double beta)
{
    Problem<double> p;
    p.name = "example2";
    p.alpha = alpha;
    p.beta = beta;
    p.cx = 0.25;
    p.cy = 0.25;
    p.x_lower = 0.0;
    p.x_upper = pi;
    p.y_lower = 0.0;
    p.y_upper = pi;
    p.horizon = 2.0;

    const double cx = p.cx;
    const double cy = p.cy;
    const double theta_a = riesz_constant(alpha);
    const double theta_b = riesz_constant(beta);
    const double g3a = std::tgamma(3.0 - alpha);
    const double g4a = std::tgamma(4.0 - alpha);
    const double g3b = std::tgamma(3.0 - beta);
    const double g4b = std::tgamma(4.0 - beta);

    // Left plus right Riemann-Liouville derivatives of z^2 (pi - z) on (0, pi).
    auto bracket = [](double z, double gamma, double g3, double g4) {
        return 2.0 * pi * (std::pow(z, 2.0 - gamma) + std::pow(pi - z, 2.0 - gamma)) / g3
            - 6.0 * (std::pow(z, 3.0 - gamma) + std::pow(pi - z, 3.0 - gamma)) / g4;
    };

    p.source = [=](double x, double y, double t) {
        const double et = std::exp(-t);
        return cx * y * y * (pi - y) * et * theta_a * bracket(x, alpha, g3a, g4a)
            + cy * x * x * (pi - x) * et * theta_b * bracket(y, beta, g3b, g4b)
            - x * x * y * y * (pi - x) * (pi - y) * et;
    };
    p.initial = [](double x, double y) { return x * x * y * y * (pi - x) * (pi - y); };
    p.exact = [](double x, double y, double t) {
        return x * x * y * y * (pi - x) * (pi - y) * std::exp(-t);
    };
    return p;
}

Problem<double> problem_by_name(std::string_view name, double alpha, double beta)
{
    if (name == "example1") {
        return example1(alpha, beta);
    }
    if (name == "example2") {
        return example2(alpha, beta);
    }
    throw InputError("unknown problem '" + std::string(name) + "', expected example1 or example2");
}

} // namespace fracadi
