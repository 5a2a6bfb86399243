// Copyright 2026 The concroc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "concroc/bootstrap.hpp"
#include "concroc/cli.hpp"
#include "concroc/errors.hpp"
#include "concroc/parallel.hpp"
#include "concroc/report.hpp"
#include "concroc/roc.hpp"
#include "concroc/simulation.hpp"
#include "concroc/smoothed.hpp"

namespace concroc {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

namespace {

struct InputArgs {
    std::string input;
    std::string delimiter = ",";
    CsvOptions csv;
    std::uint64_t seed = 1;
    std::string variance = "n";
};

void add_input_options(CLI::App* cmd, InputArgs& a) {
    cmd->add_option("--input", a.input, "CSV file with a value and a 0/1 status column")->required();
    cmd->add_flag("--log-transform", a.csv.log_transform, "Take logs of the values on load");
    cmd->add_option("--value-col", a.csv.value_col, "Value column (header name or 1-based index)");
    cmd->add_option("--status-col", a.csv.status_col, "Status column (header name or 1-based index)");
    cmd->add_option("--delimiter", a.delimiter, "Field delimiter")->capture_default_str();
    cmd->add_option("--seed", a.seed, "Master seed")->capture_default_str();
    cmd->add_option("--variance", a.variance, "Variance convention for smoothing")
        ->check(CLI::IsMember({"n", "n-1"}))
        ->capture_default_str();
}

Dataset load(InputArgs& a) {
    if (a.delimiter.size() != 1) throw Error(ErrorCode::InvalidParam, "delimiter must be a single character");
    a.csv.delimiter = a.delimiter[0];
    return load_csv(a.input, a.csv);
}

EstimatorOptions estimator_options(const InputArgs& a) {
    EstimatorOptions o;
    o.convention = a.variance == "n" ? VarianceConvention::Population : VarianceConvention::Unbiased;
    return o;
}

json header(const char* command, std::uint64_t seed) {
    return json{{"tool", "concroc"}, {"version", kVersion}, {"command", command}, {"seed", seed}};
}

std::vector<RocKind> parse_methods(const std::vector<std::string>& names) {
    std::vector<RocKind> out;
    for (const auto& n : names) {
        const RocKind k = parse_roc_kind(n);
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidParam, "no methods given");
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct FitArgs {
    InputArgs in;
    std::string group = "both";
    bool smoothed = false;
    std::string output;
    std::string density_grid;
    std::size_t grid_n = 512;
};

void cmd_fit(FitArgs& a, std::ostream& out) {
    const Dataset d = load(a.in);
    const EstimatorOptions eo = estimator_options(a.in);
    std::vector<std::pair<std::string, const std::vector<double>*>> groups;
    if (a.group != "cases") groups.emplace_back("controls", &d.controls);
    if (a.group != "controls") groups.emplace_back("cases", &d.cases);

    json j = header("fit", a.in.seed);
    j["input_digest"] = digest_hex(d.digest);
    j["log_transform"] = a.in.csv.log_transform;
    j["smoothed"] = a.smoothed;
    std::vector<SmoothedFit> fits;
    for (const auto& [name, values] : groups) {
        const WeightedSample s = preprocess(*values);
        const LogConcaveFit fit = fit_logconcave(s, eo.solver);
        if (a.smoothed) fits.push_back(smooth_fit(fit, s, eo.convention));
        else fits.emplace_back(fit, 0.0, moments(s).var_pop);
        json g = a.smoothed ? fit_to_json(fits.back()) : fit_to_json(fit);
        g["n"] = values->size();
        j["groups"][name] = g;
    }
    write_output(a.output, dump(j), out);

    if (!a.density_grid.empty()) {
        if (a.grid_n < 2) throw Error(ErrorCode::InvalidParam, "grid-n must be at least 2");
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& f : fits) {
            lo = std::min(lo, f.base().lower() - 3.0 * f.gamma());
            hi = std::max(hi, f.base().upper() + 3.0 * f.gamma());
        }
        std::ostringstream csv;
        csv << "# concroc " << kVersion << " density seed=" << a.in.seed << '\n' << 'x';
        for (const auto& g : groups) csv << ',' << g.first;
        csv << '\n';
        for (std::size_t k = 0; k < a.grid_n; ++k) {
            const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(a.grid_n - 1);
            csv << format_double(x);
            for (const auto& f : fits) csv << ',' << format_double(f.pdf(x));
            csv << '\n';
        }
        write_output(a.density_grid, csv.str(), out);
    }
}

// ---------------------------------------------------------------------------

struct RocArgs {
    InputArgs in;
    std::vector<std::string> methods{"empirical", "logcon"};
    std::size_t grid_n = 1000;
    std::string output;
    std::string svg;
};

void cmd_roc(RocArgs& a, std::ostream& out) {
    if (a.grid_n < 2) throw Error(ErrorCode::InvalidParam, "grid-n must be at least 2");
    const Dataset d = load(a.in);
    const auto kinds = parse_methods(a.methods);
    std::vector<double> grid(a.grid_n);
    for (std::size_t k = 0; k < a.grid_n; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(a.grid_n - 1);
    grid.back() = 1.0;

    std::vector<SvgCurve> curves;
    for (RocKind k : kinds) {
        const RocCurve c = estimate_roc(k, d.controls, d.cases, estimator_options(a.in));
        SvgCurve sc{std::string(to_string(k)), {}};
        for (double t : grid) sc.values.push_back(c.eval(t));
        curves.push_back(std::move(sc));
    }
    std::ostringstream csv;
    csv << "# concroc " << kVersion << " roc seed=" << a.in.seed << " input=" << digest_hex(d.digest) << '\n' << 't';
    for (const auto& c : curves) csv << ',' << c.label;
    csv << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << format_double(grid[i]);
        for (const auto& c : curves) csv << ',' << format_double(c.values[i]);
        csv << '\n';
    }
    write_output(a.output, csv.str(), out);
    if (!a.svg.empty()) write_output(a.svg, render_svg(grid, curves), out);
}

// ---------------------------------------------------------------------------

struct AucArgs {
    InputArgs in;
    std::vector<std::string> methods{"empirical", "logcon"};
    std::string output = "-";
};

void cmd_auc(AucArgs& a, std::ostream& out) {
    const Dataset d = load(a.in);
    json j = header("auc", a.in.seed);
    j["input_digest"] = digest_hex(d.digest);
    j["m"] = d.controls.size();
    j["n"] = d.cases.size();
    for (RocKind k : parse_methods(a.methods)) {
        const RocCurve c = estimate_roc(k, d.controls, d.cases, estimator_options(a.in));
        j["auc"][std::string(to_string(k))] = auc(c);
        if (c.binormal()) {
            j["binormal"] = {{"a", c.binormal()->a}, {"b", c.binormal()->b}, {"auc_closed_form", binormal_auc(*c.binormal())}};
        }
    }
    write_output(a.output, dump(j), out);
}

// ---------------------------------------------------------------------------

struct ConfintArgs {
    InputArgs in;
    std::vector<double> t{0.1, 0.3, 0.5, 0.7, 0.9};
    std::size_t B = 500;
    double alpha = 0.05;
    std::string method = "logcon";
    std::string output = "-";
};

void cmd_confint(ConfintArgs& a, std::ostream& out) {
    const Dataset d = load(a.in);
    BootSpec spec;
    spec.t_list = a.t;
    spec.B = a.B;
    spec.alpha = a.alpha;
    spec.seed = a.in.seed;
    spec.method = parse_roc_kind(a.method);
    spec.threads = threads_from_env();
    spec.estimator = estimator_options(a.in);
    const BootResult r = boot_ci(d.controls, d.cases, spec);

    json j = header("confint", a.in.seed);
    j["input_digest"] = digest_hex(d.digest);
    j["method"] = to_string(spec.method);
    j["B"] = spec.B;
    j["alpha"] = spec.alpha;
    j.update(boot_to_json(r));
    write_output(a.output, dump(j), out);
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    int scenario = 1;
    std::size_t M = 500;
    std::uint64_t seed = 1;
    std::vector<std::string> estimators{"empirical", "logcon", "logcon-smooth", "binormal"};
    std::size_t grid_n = 100;
    std::string variance = "n";
    std::string output = "-";
    std::string csv;
};

void cmd_simulate(SimulateArgs& a, std::ostream& out) {
    const ScenarioSpec spec = scenario(a.scenario);
    SimOptions o;
    o.M = a.M;
    o.seed = a.seed;
    o.estimators = parse_methods(a.estimators);
    o.n_grid = a.grid_n;
    o.threads = threads_from_env();
    o.estimator.convention = a.variance == "n" ? VarianceConvention::Population : VarianceConvention::Unbiased;
    const SimReport r = run_scenario(spec, o);

    json j = header("simulate", a.seed);
    j.update(sim_to_json(r, spec));
    write_output(a.output, dump(j), out);

    if (!a.csv.empty()) {
        std::ostringstream csv;
        csv << "# concroc " << kVersion << " simulate scenario=" << r.scenario << " seed=" << a.seed << '\n'
            << "replication";
        for (const auto& e : r.estimators) csv << ',' << to_string(e.kind) << "_ase," << to_string(e.kind) << "_ratio";
        csv << '\n';
        for (std::size_t j2 = 0; j2 < r.M; ++j2) {
            csv << j2;
            for (const auto& e : r.estimators) csv << ',' << format_double(e.ase[j2]) << ',' << format_double(e.ratio[j2]);
            csv << '\n';
        }
        write_output(a.csv, csv.str(), out);
    }
}

void write_error(std::ostream& err, std::string_view code, std::string_view message) {
    err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smooth ROC curve estimation from log-concave density estimates", "concroc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit log-concave densities to the groups");
    add_input_options(fit_cmd, fit.in);
    fit_cmd->add_option("--group", fit.group, "Which group to fit")
        ->check(CLI::IsMember({"controls", "cases", "both"}))
        ->capture_default_str();
    fit_cmd->add_flag("--smoothed", fit.smoothed, "Also smooth with the variance-matched Gaussian kernel");
    fit_cmd->add_option("--output", fit.output, "Fitted model JSON ('-' for stdout)")->required();
    fit_cmd->add_option("--density-grid", fit.density_grid, "Optional density grid CSV");
    fit_cmd->add_option("--grid-n", fit.grid_n, "Density grid size")->capture_default_str();

    RocArgs roc;
    auto* roc_cmd = app.add_subcommand("roc", "Evaluate ROC curve estimates on a grid");
    add_input_options(roc_cmd, roc.in);
    roc_cmd->add_option("--methods", roc.methods, "empirical,logcon,logcon-smooth,binormal")
        ->delimiter(',')
        ->capture_default_str();
    roc_cmd->add_option("--grid-n", roc.grid_n, "Number of grid points on [0,1]")->capture_default_str();
    roc_cmd->add_option("--output", roc.output, "CSV of t and R(t) ('-' for stdout)")->required();
    roc_cmd->add_option("--svg", roc.svg, "Optional SVG plot");

    AucArgs auc_args;
    auto* auc_cmd = app.add_subcommand("auc", "Area under each ROC curve estimate");
    add_input_options(auc_cmd, auc_args.in);
    auc_cmd->add_option("--methods", auc_args.methods, "empirical,logcon,logcon-smooth,binormal")
        ->delimiter(',')
        ->capture_default_str();
    auc_cmd->add_option("--output", auc_args.output, "JSON output")->capture_default_str();

    ConfintArgs ci;
    auto* ci_cmd = app.add_subcommand("confint", "Percentile bootstrap intervals for R(t)");
    add_input_options(ci_cmd, ci.in);
    ci_cmd->add_option("--t", ci.t, "False-positive fractions in (0,1)")->delimiter(',')->capture_default_str();
    ci_cmd->add_option("--B", ci.B, "Bootstrap replicates")->capture_default_str();
    ci_cmd->add_option("--alpha", ci.alpha, "One minus the confidence level")->capture_default_str();
    ci_cmd->add_option("--method", ci.method, "Estimator refitted on each resample")
        ->check(CLI::IsMember({"logcon", "logcon-smooth", "empirical", "binormal"}))
        ->capture_default_str();
    ci_cmd->add_option("--output", ci.output, "JSON output")->capture_default_str();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo ASE study for a built-in scenario");
    sim_cmd->add_option("--scenario", sim.scenario, "Scenario id")->required()->check(CLI::Range(1, 12));
    sim_cmd->add_option("--M", sim.M, "Replications")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    sim_cmd->add_option("--estimators", sim.estimators, "empirical,logcon,logcon-smooth,binormal")
        ->delimiter(',')
        ->capture_default_str();
    sim_cmd->add_option("--grid-n", sim.grid_n, "ASE grid size")->capture_default_str();
    sim_cmd->add_option("--variance", sim.variance, "Variance convention for smoothing")
        ->check(CLI::IsMember({"n", "n-1"}))
        ->capture_default_str();
    sim_cmd->add_option("--output", sim.output, "JSON report")->capture_default_str();
    sim_cmd->add_option("--csv", sim.csv, "Optional per-replication CSV");

    std::vector<std::string> storage{"concroc"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        write_error(err, "UsageError", e.what());
        return 2;
    }

    try {
        if (*fit_cmd) cmd_fit(fit, out);
        else if (*roc_cmd) cmd_roc(roc, out);
        else if (*auc_cmd) cmd_auc(auc_args, out);
        else if (*ci_cmd) cmd_confint(ci, out);
        else if (*sim_cmd) cmd_simulate(sim, out);
    } catch (const Error& e) {
        write_error(err, to_string(e.code()), e.what());
        return is_numerical(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        write_error(err, "NumericalError", e.what());
        return 3;
    }
    return 0;
}

}  // namespace concroc
