#ifndef FRACADI_STUDY_HPP
#define FRACADI_STUDY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracadi/adi.hpp"

namespace fracadi {

/// E_inf = max_{i,j} |numeric - reference| over interior nodes.
double max_error(const Field<double>& numeric, const Field<double>& reference);

/// log2(coarse / fine). Throws UndefinedRateError when either error is not positive.
double convergence_rate(double coarse_error, double fine_error);

enum class StudyMode { spatial, temporal };

std::string_view to_string(StudyMode mode);
StudyMode parse_study_mode(std::string_view text);

/// Steps are nominal: spatial mode needs (R - L) / h to be an integer on both
/// axes; time steps are rounded down to k = T / N with N = ceil(T / k_nominal).
/// In temporal mode the first N is doubled for each following row so the
/// effective steps halve exactly.
struct StudySpec {
    Problem<double> problem;
    StudyMode mode = StudyMode::spatial;
    std::vector<double> steps;
    double fixed = 0.0;
    double budget_seconds = 600.0;
    Stepper stepper = Stepper::peaceman_rachford;

    /// Throws InputError unless steps is non-empty and each entry halves the previous.
    void validate() const;
};

struct ReportRow {
    double step = 0.0;
    double max_error = 0.0;
    std::optional<double> rate;
    double seconds = 0.0;
};

struct ConvergenceReport {
    std::string problem;
    StudyMode mode = StudyMode::spatial;
    double alpha = 0.0;
    double beta = 0.0;
    double fixed_step = 0.0;
    std::vector<ReportRow> rows;
    bool complete = true;
};

/// Cells per axis for a nominal spatial step; throws InputError if the
/// interval is not an integer multiple of `step`.
int cells_for_step(double lower, double upper, double step);

/// N = ceil(horizon / step) with a relative slack of 1e-9.
int time_steps_for(double horizon, double step);

/// Solves on every row of the study and measures E_inf against the exact
/// solution at t = T. Stops early, flagging the report incomplete, once the
/// wall-clock budget is spent.
ConvergenceReport run_study(const StudySpec& spec);

enum class ReportFormat { csv, pretty };

ReportFormat parse_report_format(std::string_view text);

std::string emit_report(const ConvergenceReport& report, ReportFormat format);

/// Reads back the CSV produced by emit_report.
ConvergenceReport parse_report_csv(std::string_view text);

/// "nx ny" followed by ny lines of nx values, 17 significant digits.
void write_field(std::ostream& out, const Field<double>& field);
Field<double> read_field(std::istream& in);

} // namespace fracadi

#endif // FRACADI_STUDY_HPP
