#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdot/correlations.hpp"
#include "qdot/dot_model.hpp"
#include "qdot/uncertainty.hpp"

namespace qdot {

enum class SweepParameter { Temperature, K0, B0 };

std::string_view to_string(SweepParameter p) noexcept;

/// One-dimensional uniform sweep: grid point i sits at
/// start + i*(stop-start)/(steps-1). The swept field of `base` is replaced
/// per point; the other parameters stay fixed.
struct SweepSpec {
    SweepParameter parameter;
    double start;
    double stop;
    int steps;
    DotParams base;
};

struct SweepRow {
    double param = 0;
    double concurrence = 0;
    double discord = 0;
    double mutual_information = 0;
    double lhs = 0;
    double berta_bound = 0;
    double adabi_bound = 0;
    double delta = 0;
};

struct PointReport {
    CorrelationReport correlations;
    UncertaintyReport uncertainty;
};

PointReport evaluate_point(const DotParams& params);

/// Rows in ascending parameter order. Spec violations (start > stop,
/// steps < 2, negative temperatures) throw DomainError; a failing grid
/// point aborts with NumericalFailure naming the offending value.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with the exact header
/// param,concurrence,discord,mutual_information,lhs,berta_bound,adabi_bound,delta
/// 12-significant-digit values, '.' decimal separator, LF line endings.
/// Throws EmptySweep on empty input.
void emit_csv(std::span<const SweepRow> rows, std::ostream& os);

/// Self-contained gnuplot script reading the CSV at `csv_path` (a path
/// relative to wherever the script is run). Throws EmptySweep on empty input.
void emit_plot_script(const SweepSpec& spec, std::span<const SweepRow> rows,
                      std::string_view csv_path, std::ostream& os);

/// berta <= adabi <= lhs on every row, each inequality within `slack`.
bool verify_rows(std::span<const SweepRow> rows, double slack = 1e-9) noexcept;

/// Locale-independent 12-significant-digit formatting used for the CSV.
std::string format_value(double v);

}  // namespace qdot
