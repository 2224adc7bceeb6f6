#include "qdot/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace qdot {

std::string_view to_string(SweepParameter p) noexcept {
    switch (p) {
        case SweepParameter::Temperature: return "temperature";
        case SweepParameter::K0: return "k0";
        case SweepParameter::B0: return "b0";
    }
    return "?";
}

std::string format_value(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, end);
}

PointReport evaluate_point(const DotParams& params) {
    const XState state = thermal_state(params);
    return {correlation_report(state), uncertainty_report(state)};
}

namespace {

DotParams with_swept(const DotParams& base, SweepParameter which, double value) {
    switch (which) {
        case SweepParameter::Temperature:
            return DotParams(base.k0(), base.gamma(), base.b0(), value);
        case SweepParameter::K0:
            return DotParams(value, base.gamma(), base.b0(), base.temperature());
        case SweepParameter::B0:
            return DotParams(base.k0(), base.gamma(), value, base.temperature());
    }
    throw DomainError("unknown sweep parameter");
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop))
        throw DomainError("sweep range is not finite");
    if (spec.start > spec.stop)
        throw DomainError("sweep start " + format_value(spec.start) +
                          " exceeds stop " + format_value(spec.stop));
    if (spec.steps < 2)
        throw DomainError("sweep needs at least 2 steps, got " + std::to_string(spec.steps));
    if (spec.parameter == SweepParameter::Temperature && spec.start < 0.0)
        throw DomainError("temperature sweep must start at 0 or above");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) {
        const double x = spec.start + i * (spec.stop - spec.start) / (spec.steps - 1);
        try {
            const PointReport r = evaluate_point(with_swept(spec.base, spec.parameter, x));
            SweepRow row{x,
                         r.correlations.concurrence,
                         r.correlations.discord,
                         r.correlations.mutual_information,
                         r.uncertainty.lhs,
                         r.uncertainty.berta_bound,
                         r.uncertainty.adabi_bound,
                         r.uncertainty.delta};
            for (double v : {row.concurrence, row.discord, row.mutual_information, row.lhs,
                             row.berta_bound, row.adabi_bound, row.delta})
                if (!std::isfinite(v)) throw NumericalFailure("non-finite result");
            rows.push_back(row);
        } catch (const std::exception& e) {
            throw NumericalFailure("sweep aborted at " + std::string(to_string(spec.parameter)) +
                                   " = " + format_value(x) + ": " + e.what());
        }
    }
    return rows;
}

void emit_csv(std::span<const SweepRow> rows, std::ostream& os) {
    if (rows.empty()) throw EmptySweep("emit_csv: no rows");
    os << "param,concurrence,discord,mutual_information,lhs,berta_bound,adabi_bound,delta\n";
    for (const auto& r : rows)
        os << format_value(r.param) << ',' << format_value(r.concurrence) << ','
           << format_value(r.discord) << ',' << format_value(r.mutual_information) << ','
           << format_value(r.lhs) << ',' << format_value(r.berta_bound) << ','
           << format_value(r.adabi_bound) << ',' << format_value(r.delta) << '\n';
}

void emit_plot_script(const SweepSpec& spec, std::span<const SweepRow> rows,
                      std::string_view csv_path, std::ostream& os) {
    if (rows.empty()) throw EmptySweep("emit_plot_script: no rows");
    os << "# correlations and uncertainty bound along a " << to_string(spec.parameter)
       << " sweep\n"
       << "set datafile separator \",\"\n"
       << "set key outside\n"
       << "set xlabel \"" << to_string(spec.parameter) << "\"\n"
       << "set ylabel \"bits\"\n"
       << "set xrange [" << format_value(rows.front().param) << ':'
       << format_value(rows.back().param) << "]\n"
       << "plot \"" << csv_path << "\" using 1:2 with lines title \"concurrence\", \\\n"
       << "     \"\" using 1:3 with lines title \"discord\", \\\n"
       << "     \"\" using 1:7 with lines title \"adabi bound\"\n";
}

bool verify_rows(std::span<const SweepRow> rows, double slack) noexcept {
    for (const auto& r : rows) {
        if (r.berta_bound > r.adabi_bound + slack) return false;
        if (r.adabi_bound > r.lhs + slack) return false;
    }
    return true;
}

}  // namespace qdot
