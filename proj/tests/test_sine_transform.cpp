#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracadi/sine_transform.hpp"

using namespace fracadi;

TEST(SineTransform, SingleInteriorNode)
{
    Eigen::VectorXd v(1);
    v << 3.25;
    const auto out = sine_transform(v, 2);
    EXPECT_NEAR(out(0), 3.25, 1e-15);
}

TEST(SineTransform, UnitVectorGivesFirstBasisRow)
{
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(3);
    e1(0) = 1.0;
    const auto out = sine_transform(e1, 4);
    const double pi = std::numbers::pi;
    EXPECT_NEAR(out(0), std::sin(pi / 4), 1e-15);
    EXPECT_NEAR(out(1), std::sin(pi / 2), 1e-15);
    EXPECT_NEAR(out(2), std::sin(3 * pi / 4), 1e-15);
}

TEST(SineTransform, TwiceIsScaledIdentity)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int m : {2, 3, 5, 16, 33, 128}) {
        Eigen::VectorXd v(m - 1);
        for (auto& c : v) {
            c = dist(rng);
        }
        const Eigen::VectorXd twice = sine_transform(sine_transform(v, m).eval(), m);
        const Eigen::VectorXd expected = (m / 2.0) * v;
        EXPECT_LE((twice - expected).cwiseAbs().maxCoeff(), 1e-12 * expected.cwiseAbs().maxCoeff())
            << "M = " << m;
    }
}

TEST(SineTransform, LengthMismatch)
{
    EXPECT_THROW(sine_transform(Eigen::VectorXd::Zero(4).eval(), 4), DimensionError);
    EXPECT_THROW(sine_transform(Eigen::VectorXd::Zero(1).eval(), 1), DimensionError);
}

TEST(SineBasis, MatrixAgreesWithDirectSummation)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int m = 37;
    const SineBasis<double> basis(m);
    Eigen::VectorXd v(m - 1);
    for (auto& c : v) {
        c = dist(rng);
    }
    const Eigen::VectorXd direct = sine_transform(v, m);
    const Eigen::VectorXd via_matrix = basis.forward() * v;
    EXPECT_LE((direct - via_matrix).cwiseAbs().maxCoeff(), 1e-12 * direct.cwiseAbs().maxCoeff());
    EXPECT_TRUE((basis.forward() * basis.inverse())
                    .isApprox(Eigen::MatrixXd::Identity(m - 1, m - 1), 1e-13));
}

TEST(SineBasis, AxisTransformsRoundTrip)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const SineBasis<double> bx(8);
    const SineBasis<double> by(6);
    Eigen::MatrixXd f(7, 5);
    for (auto& c : f.reshaped()) {
        c = dist(rng);
    }
    EXPECT_TRUE(bx.synthesize_x(bx.analyze_x(f)).isApprox(f, 1e-13));
    EXPECT_TRUE(by.synthesize_y(by.analyze_y(f)).isApprox(f, 1e-13));
    EXPECT_THROW(bx.analyze_y(f), DimensionError);
    EXPECT_THROW(by.analyze_x(f), DimensionError);
}

TEST(SineEntry, ReducesLargeArguments)
{
    // i k = 999 * 998 is far from zero; the reduced argument must still be exact-ish.
    const long m = 1000;
    const double reduced = sine_entry<double>(999, 998, m);
    const double naive = std::sin(std::numbers::pi * 999.0 * 998.0 / m);
    EXPECT_NEAR(reduced, naive, 1e-9);
    EXPECT_EQ(sine_entry<double>(5, 0, m), 0.0);
}
