// Command-line front end: point evaluation and one-dimensional parameter
// sweeps over the thermal quantum-dot model, emitting CSV data and optional
// gnuplot scripts.
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdot/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    double t = 1.0;
    double k0 = 10.0;
    double gamma = 1.0;
    double b0 = 1.0;
    std::string out;
    bool verify = false;
};

void add_common(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--t", opt.t, "temperature (k_B = 1)")->capture_default_str();
    cmd.add_option("--k0", opt.k0, "singlet-triplet splitting parameter")->capture_default_str();
    cmd.add_option("--gamma", opt.gamma, "gyromagnetic ratio")->capture_default_str();
    cmd.add_option("--b0", opt.b0, "magnetic field")->capture_default_str();
    cmd.add_option("--out", opt.out, "output file (default: stdout)");
    cmd.add_flag("--verify", opt.verify,
                 "check berta <= adabi <= lhs on the output; exit 1 on violation");
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitFailure;
    }
    f << text;
    return kExitOk;
}

std::string render_point(const qdot::PointReport& r) {
    using qdot::format_value;
    std::ostringstream os;
    os << "concurrence = " << format_value(r.correlations.concurrence) << '\n'
       << "discord = " << format_value(r.correlations.discord) << '\n'
       << "discord_branch = "
       << (r.correlations.discord_branch == qdot::DiscordBranch::Q1 ? "Q1" : "Q2") << '\n'
       << "mutual_information = " << format_value(r.correlations.mutual_information) << '\n'
       << "lhs = " << format_value(r.uncertainty.lhs) << '\n'
       << "berta_bound = " << format_value(r.uncertainty.berta_bound) << '\n'
       << "adabi_bound = " << format_value(r.uncertainty.adabi_bound) << '\n'
       << "delta = " << format_value(r.uncertainty.delta) << '\n'
       << "holevo_x = " << format_value(r.uncertainty.holevo_x) << '\n'
       << "holevo_z = " << format_value(r.uncertainty.holevo_z) << '\n'
       << "conditional_entropy = " << format_value(r.uncertainty.conditional_entropy) << '\n'
       << "complementarity_term = " << format_value(r.uncertainty.complementarity_term) << '\n';
    return os.str();
}

int run_point(const CommonOptions& opt) {
    std::optional<qdot::DotParams> params;
    try {
        params.emplace(opt.k0, opt.gamma, opt.b0, opt.t);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    qdot::PointReport report;
    try {
        report = qdot::evaluate_point(*params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    const int rc = write_output(opt.out, render_point(report));
    if (rc != kExitOk) return rc;
    if (opt.verify) {
        const auto& u = report.uncertainty;
        if (u.berta_bound > u.adabi_bound + 1e-9 || u.adabi_bound > u.lhs + 1e-9) {
            std::cerr << "verification failed: bound ordering violated\n";
            return kExitFailure;
        }
    }
    return kExitOk;
}

struct SweepOptions {
    CommonOptions common;
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    int steps = 101;
    std::string plot_script;
};

int run_sweep_cmd(const SweepOptions& opt) {
    qdot::SweepParameter which;
    if (opt.param == "temperature") {
        which = qdot::SweepParameter::Temperature;
    } else if (opt.param == "k0") {
        which = qdot::SweepParameter::K0;
    } else if (opt.param == "b0") {
        which = qdot::SweepParameter::B0;
    } else {
        std::cerr << "error: --param must be one of temperature, k0, b0\n";
        return kExitUsage;
    }
    if (!opt.plot_script.empty() && opt.common.out.empty()) {
        std::cerr << "error: --plot-script needs --out so the script can reference the CSV\n";
        return kExitUsage;
    }

    std::optional<qdot::SweepSpec> spec;
    try {
        spec.emplace(qdot::SweepSpec{which, opt.start, opt.stop, opt.steps,
                                     qdot::DotParams(opt.common.k0, opt.common.gamma,
                                                     opt.common.b0, opt.common.t)});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::vector<qdot::SweepRow> rows;
    try {
        rows = qdot::run_sweep(*spec);
    } catch (const qdot::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    std::ostringstream csv;
    qdot::emit_csv(rows, csv);
    const int rc = write_output(opt.common.out, csv.str());
    if (rc != kExitOk) return rc;

    if (!opt.plot_script.empty()) {
        // reference the CSV by its name, so the script works next to the file
        std::string csv_name = opt.common.out;
        if (const auto slash = csv_name.find_last_of('/'); slash != std::string::npos)
            csv_name = csv_name.substr(slash + 1);
        std::ostringstream script;
        qdot::emit_plot_script(*spec, rows, csv_name, script);
        const int prc = write_output(opt.plot_script, script.str());
        if (prc != kExitOk) return prc;
    }

    if (opt.common.verify && !qdot::verify_rows(rows)) {
        std::cerr << "verification failed: bound ordering violated in sweep output\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum correlations and memory-assisted uncertainty bounds "
                 "for a thermal two-spin quantum dot"};
    app.require_subcommand(1);

    CommonOptions point_opt;
    CLI::App* point = app.add_subcommand("point", "evaluate a single parameter point");
    add_common(*point, point_opt);

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter and emit CSV");
    add_common(*sweep, sweep_opt.common);
    sweep->add_option("--param", sweep_opt.param, "swept parameter: temperature, k0 or b0")
        ->required();
    sweep->add_option("--start", sweep_opt.start, "first grid value")->required();
    sweep->add_option("--stop", sweep_opt.stop, "last grid value")->required();
    sweep->add_option("--steps", sweep_opt.steps, "number of grid points")
        ->capture_default_str();
    sweep->add_option("--plot-script", sweep_opt.plot_script,
                      "also write a gnuplot script to this path (needs --out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (point->parsed()) return run_point(point_opt);
    return run_sweep_cmd(sweep_opt);
}
