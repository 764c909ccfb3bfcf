#include "fracadi/study.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fracadi {

double max_error(const Field<double>& numeric, const Field<double>& reference)
{
    require_same_shape(numeric, reference, "max_error");
    return (numeric.values() - reference.values()).cwiseAbs().maxCoeff();
}

double convergence_rate(double coarse_error, double fine_error)
{
    if (!(coarse_error > 0.0) || !(fine_error > 0.0)) {
        std::ostringstream msg;
        msg << "convergence rate undefined for errors " << coarse_error << " and " << fine_error;
        throw UndefinedRateError(msg.str());
    }
    return std::log2(coarse_error / fine_error);
}

std::string_view to_string(StudyMode mode)
{
    return mode == StudyMode::spatial ? "spatial" : "temporal";
}

StudyMode parse_study_mode(std::string_view text)
{
    if (text == "spatial") {
        return StudyMode::spatial;
    }
    if (text == "temporal") {
        return StudyMode::temporal;
    }
    throw InputError("unknown study mode '" + std::string(text) + "'");
}

void StudySpec::validate() const
{
    if (steps.empty()) {
        throw InputError("study needs at least one step");
    }
    if (!(fixed > 0.0)) {
        throw InputError("study needs a positive fixed step");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0) || !std::isfinite(steps[i])) {
            throw InputError("study steps must be positive");
        }
        if (i > 0 && std::abs(steps[i - 1] - 2.0 * steps[i]) > 1e-12 * steps[i - 1]) {
            std::ostringstream msg;
            msg << "study step " << steps[i] << " is not half of " << steps[i - 1];
            throw InputError(msg.str());
        }
    }
}

int cells_for_step(double lower, double upper, double step)
{
    const double ratio = (upper - lower) / step;
    const double cells = std::round(ratio);
    if (!(cells >= 2.0) || std::abs(ratio - cells) > 1e-9 * cells
        || cells > std::numeric_limits<int>::max()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "step " << step << " does not divide [" << lower << ", " << upper
            << "] into at least two whole cells";
        throw InputError(msg.str());
    }
    return static_cast<int>(cells);
}

int time_steps_for(double horizon, double step)
{
    if (!(step > 0.0) || !(horizon > 0.0)) {
        throw InputError("time step and horizon must be positive");
    }
    const double n = std::ceil(horizon / step * (1.0 - 1e-9));
    if (n > std::numeric_limits<int>::max()) {
        throw InputError("too many time steps");
    }
    return std::max(1, static_cast<int>(n));
}

ConvergenceReport run_study(const StudySpec& spec)
{
    spec.validate();
    const Problem<double>& problem = spec.problem;
    problem.validate();
    if (!problem.has_exact()) {
        throw InputError("problem '" + problem.name + "' has no exact solution to measure against");
    }

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    ConvergenceReport report;
    report.problem = problem.name;
    report.mode = spec.mode;
    report.alpha = problem.alpha;
    report.beta = problem.beta;

    const int first_time_steps
        = time_steps_for(problem.horizon, spec.mode == StudyMode::spatial ? spec.fixed : spec.steps[0]);

    for (std::size_t row = 0; row < spec.steps.size(); ++row) {
        const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (row > 0 && elapsed > spec.budget_seconds) {
            report.complete = false;
            break;
        }

        const double space_step = spec.mode == StudyMode::spatial ? spec.steps[row] : spec.fixed;
        const int mx = cells_for_step(problem.x_lower, problem.x_upper, space_step);
        const int my = cells_for_step(problem.y_lower, problem.y_upper, space_step);
        const int time_steps = spec.mode == StudyMode::spatial
            ? first_time_steps
            : first_time_steps * (1 << static_cast<int>(row));
        const Grid2D<double> grid = problem.make_grid(mx, my);
        const double k = problem.horizon / time_steps;

        const auto row_start = clock::now();
        const Field<double> numeric = solve(problem, grid, time_steps, spec.stepper);
        const Field<double> reference = sample_field<double>(problem.exact, grid, problem.horizon);

        ReportRow r;
        r.step = spec.mode == StudyMode::spatial ? grid.x.step() : k;
        r.max_error = max_error(numeric, reference);
        if (!report.rows.empty()) {
            const double coarse = report.rows.back().max_error;
            if (coarse > 0.0 && r.max_error > 0.0) {
                r.rate = convergence_rate(coarse, r.max_error);
            }
        }
        r.seconds = std::chrono::duration<double>(clock::now() - row_start).count();
        report.fixed_step = spec.mode == StudyMode::spatial ? k : grid.x.step();
        report.rows.push_back(r);
    }
    return report;
}

ReportFormat parse_report_format(std::string_view text)
{
    if (text == "csv") {
        return ReportFormat::csv;
    }
    if (text == "pretty") {
        return ReportFormat::pretty;
    }
    throw InputError("unknown report format '" + std::string(text) + "'");
}

namespace {

std::string exact_decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string scientific(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = line.find(sep, begin);
        out.emplace_back(line.substr(begin, end - begin));
        if (end == std::string_view::npos) {
            break;
        }
        begin = end + 1;
    }
    return out;
}

double parse_double(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InputError("report: cannot parse number '" + s + "'");
    }
    if (used != s.size()) {
        throw InputError("report: trailing characters in number '" + s + "'");
    }
    return v;
}

constexpr std::string_view csv_header = "step,max_error,rate,alpha,beta,fixed_step,problem,seconds";

} // namespace

std::string emit_report(const ConvergenceReport& report, ReportFormat format)
{
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << csv_header << '\n';
        for (const ReportRow& r : report.rows) {
            out << exact_decimal(r.step) << ',' << exact_decimal(r.max_error) << ','
                << (r.rate ? exact_decimal(*r.rate) : std::string()) << ','
                << exact_decimal(report.alpha) << ',' << exact_decimal(report.beta) << ','
                << exact_decimal(report.fixed_step) << ',' << report.problem << ','
                << exact_decimal(r.seconds) << '\n';
        }
        return out.str();
    }

    out << report.problem << ", " << to_string(report.mode) << " study, alpha = " << report.alpha
        << ", beta = " << report.beta << ", "
        << (report.mode == StudyMode::spatial ? "k_t = " : "h = ")
        << scientific(report.fixed_step, 6) << '\n';
    const char* step_name = report.mode == StudyMode::spatial ? "h" : "k_t";
    out << std::left << std::setw(16) << step_name << std::setw(18) << "max error"
        << std::setw(12) << "rate" << "seconds" << '\n';
    for (const ReportRow& r : report.rows) {
        out << std::left << std::setw(16) << scientific(r.step, 5) << std::setw(18)
            << scientific(r.max_error, 5) << std::setw(12)
            << (r.rate ? fixed(*r.rate, 5) : std::string("-"))
            << fixed(r.seconds, 2) << '\n';
    }
    if (!report.complete) {
        out << "(incomplete: wall-time budget exceeded)\n";
    }
    return out.str();
}

ConvergenceReport parse_report_csv(std::string_view text)
{
    ConvergenceReport report;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw InputError("report: missing or unexpected CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 8) {
            throw InputError("report: expected 8 columns in '" + line + "'");
        }
        ReportRow r;
        r.step = parse_double(cells[0]);
        r.max_error = parse_double(cells[1]);
        if (!cells[2].empty()) {
            r.rate = parse_double(cells[2]);
        }
        report.alpha = parse_double(cells[3]);
        report.beta = parse_double(cells[4]);
        report.fixed_step = parse_double(cells[5]);
        report.problem = cells[6];
        r.seconds = parse_double(cells[7]);
        report.rows.push_back(r);
    }
    return report;
}

void write_field(std::ostream& out, const Field<double>& field)
{
    out << field.nx() << ' ' << field.ny() << '\n';
    for (int j = 0; j < field.ny(); ++j) {
        for (int i = 0; i < field.nx(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << exact_decimal(field(i, j));
        }
        out << '\n';
    }
}

Field<double> read_field(std::istream& in)
{
    int nx = 0;
    int ny = 0;
    if (!(in >> nx >> ny) || nx < 1 || ny < 1) {
        throw InputError("field dump: bad header");
    }
    Field<double> field(nx, ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!(in >> field(i, j))) {
                throw InputError("field dump: truncated data");
            }
        }
    }
    return field;
}

} // namespace fracadi
