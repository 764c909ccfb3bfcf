#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fracadi/study.hpp"
#include "oracles/dense.hpp"

using namespace fracadi;

namespace {

StudySpec small_spatial_study()
{
    StudySpec spec;
    spec.problem = example1(1.8, 1.6);
    spec.mode = StudyMode::spatial;
    spec.steps = {0.25, 0.125};
    spec.fixed = 0.1;
    return spec;
}

int count_lines(const std::string& text)
{
    int n = 0;
    for (char c : text) {
        n += c == '\n';
    }
    return n;
}

} // namespace

TEST(MaxError, Basics)
{
    std::mt19937_64 rng(3);
    const auto a = oracle::random_field(5, 4, rng);
    EXPECT_EQ(max_error(a, a), 0.0);
    auto b = a;
    b(2, 3) += 1e-3;
    EXPECT_NEAR(max_error(a, b), 1e-3, 1e-15);
    EXPECT_THROW(max_error(a, Field<double>(4, 5)), DimensionError);
}

TEST(ConvergenceRate, Values)
{
    EXPECT_DOUBLE_EQ(convergence_rate(4e-4, 1e-4), 2.0);
    EXPECT_NEAR(convergence_rate(3.06184e-4, 3.69209e-5), 3.05189, 5e-6);
    EXPECT_EQ(convergence_rate(0.37, 0.37), 0.0);
    EXPECT_THROW(convergence_rate(0.0, 1e-3), UndefinedRateError);
    EXPECT_THROW(convergence_rate(1e-3, -1.0), UndefinedRateError);
}

TEST(StudySpec, StepsMustHalve)
{
    auto spec = small_spatial_study();
    EXPECT_NO_THROW(spec.validate());
    spec.steps = {0.1, 0.04};
    EXPECT_THROW(spec.validate(), InputError);
    spec.steps = {};
    EXPECT_THROW(spec.validate(), InputError);
    spec.steps = {0.1};
    spec.fixed = 0.0;
    EXPECT_THROW(spec.validate(), InputError);
}

TEST(StepMapping, CellsAndTimeSteps)
{
    EXPECT_EQ(cells_for_step(0.0, 1.0, 0.1), 10);
    EXPECT_EQ(cells_for_step(0.0, 1.0, 0.0125), 80);
    EXPECT_EQ(cells_for_step(0.0, std::numbers::pi, 0.05 * std::numbers::pi), 20);
    EXPECT_THROW(cells_for_step(0.0, 1.0, 0.3), InputError);
    EXPECT_THROW(cells_for_step(0.0, 1.0, 0.75), InputError);

    EXPECT_EQ(time_steps_for(2.0, 0.1), 20);
    EXPECT_EQ(time_steps_for(std::numbers::e, 0.1), 28);
    EXPECT_EQ(time_steps_for(std::numbers::e, 1e-3), 2719);
    EXPECT_EQ(time_steps_for(1.0, 5.0), 1);
    EXPECT_THROW(time_steps_for(1.0, 0.0), InputError);
}

TEST(RunStudy, SingleRowHasNoRate)
{
    auto spec = small_spatial_study();
    spec.steps = {0.25};
    const auto report = run_study(spec);
    ASSERT_EQ(report.rows.size(), 1u);
    EXPECT_FALSE(report.rows[0].rate.has_value());
    EXPECT_GT(report.rows[0].max_error, 0.0);
    EXPECT_TRUE(report.complete);

    const std::string csv = emit_report(report, ReportFormat::csv);
    EXPECT_EQ(count_lines(csv), 2);
    EXPECT_NE(csv.find(",,"), std::string::npos);
}

TEST(RunStudy, RatesFromConsecutiveRows)
{
    const auto report = run_study(small_spatial_study());
    ASSERT_EQ(report.rows.size(), 2u);
    EXPECT_EQ(report.rows[0].step, 0.25);
    EXPECT_EQ(report.rows[1].step, 0.125);
    ASSERT_TRUE(report.rows[1].rate.has_value());
    EXPECT_DOUBLE_EQ(*report.rows[1].rate,
                     std::log2(report.rows[0].max_error / report.rows[1].max_error));
    EXPECT_DOUBLE_EQ(report.fixed_step, std::numbers::e / 28);
}

TEST(RunStudy, MatchesDirectSolve)
{
    const auto spec = small_spatial_study();
    const auto report = run_study(spec);
    const auto& p = spec.problem;
    const auto grid = p.make_grid(8, 8);
    const auto u = solve(p, grid, 28);
    const auto exact = sample_field<double>(p.exact, grid, p.horizon);
    EXPECT_EQ(report.rows[1].max_error, max_error(u, exact));
}

TEST(RunStudy, TemporalStepsHalveExactly)
{
    StudySpec spec;
    spec.problem = example1(1.5, 1.7);
    spec.mode = StudyMode::temporal;
    spec.steps = {0.5, 0.25, 0.125};
    spec.fixed = 0.125;
    const auto report = run_study(spec);
    ASSERT_EQ(report.rows.size(), 3u);
    EXPECT_DOUBLE_EQ(report.rows[0].step, std::numbers::e / 6);
    EXPECT_DOUBLE_EQ(report.rows[1].step, std::numbers::e / 12);
    EXPECT_DOUBLE_EQ(report.rows[2].step, std::numbers::e / 24);
    EXPECT_EQ(report.fixed_step, 0.125);
}

TEST(RunStudy, Deterministic)
{
    const auto a = run_study(small_spatial_study());
    const auto b = run_study(small_spatial_study());
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].step, b.rows[i].step);
        EXPECT_EQ(a.rows[i].max_error, b.rows[i].max_error);
        EXPECT_EQ(a.rows[i].rate, b.rows[i].rate);
    }
}

TEST(RunStudy, BudgetStopsEarly)
{
    auto spec = small_spatial_study();
    spec.steps = {0.25, 0.125, 0.0625};
    spec.budget_seconds = 0.0;
    const auto report = run_study(spec);
    EXPECT_FALSE(report.complete);
    EXPECT_EQ(report.rows.size(), 1u);
    EXPECT_NE(emit_report(report, ReportFormat::pretty).find("incomplete"), std::string::npos);
}

TEST(RunStudy, NeedsExactSolution)
{
    auto spec = small_spatial_study();
    spec.problem.exact = nullptr;
    EXPECT_THROW(run_study(spec), InputError);
}

TEST(EmitReport, CsvRoundTripRecomputesRates)
{
    auto spec = small_spatial_study();
    spec.steps = {0.5, 0.25, 0.125};
    const auto report = run_study(spec);
    const std::string csv = emit_report(report, ReportFormat::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "step,max_error,rate,alpha,beta,fixed_step,problem,seconds");

    const auto parsed = parse_report_csv(csv);
    ASSERT_EQ(parsed.rows.size(), report.rows.size());
    EXPECT_EQ(parsed.problem, "example1");
    EXPECT_EQ(parsed.alpha, 1.8);
    EXPECT_EQ(parsed.fixed_step, report.fixed_step);
    EXPECT_FALSE(parsed.rows[0].rate.has_value());
    for (std::size_t i = 1; i < parsed.rows.size(); ++i) {
        ASSERT_TRUE(parsed.rows[i].rate.has_value());
        const double recomputed
            = std::log2(parsed.rows[i - 1].max_error / parsed.rows[i].max_error);
        EXPECT_NEAR(*parsed.rows[i].rate, recomputed, 1e-9);
        EXPECT_EQ(parsed.rows[i].max_error, report.rows[i].max_error);
    }
}

TEST(EmitReport, PrettyTable)
{
    const auto text = emit_report(run_study(small_spatial_study()), ReportFormat::pretty);
    EXPECT_NE(text.find("max error"), std::string::npos);
    EXPECT_NE(text.find("example1"), std::string::npos);
    EXPECT_EQ(count_lines(text), 4);
}

TEST(EmitReport, MalformedCsv)
{
    EXPECT_THROW(parse_report_csv("nope\n"), InputError);
    EXPECT_THROW(parse_report_csv("step,max_error,rate,alpha,beta,fixed_step,problem,seconds\n1,2\n"),
                 InputError);
}

TEST(FieldDump, RoundTripIsExact)
{
    std::mt19937_64 rng(17);
    auto f = oracle::random_field(6, 3, rng);
    f(0, 0) = 1.0 / 3.0;
    f(5, 2) = -2.5e-300;
    std::stringstream io;
    write_field(io, f);
    std::string first;
    std::getline(io, first);
    EXPECT_EQ(first, "6 3");
    io.seekg(0);
    const auto g = read_field(io);
    EXPECT_EQ(g.values(), f.values());

    std::stringstream truncated("3 2\n1 2 3\n4\n");
    EXPECT_THROW(read_field(truncated), InputError);
}
