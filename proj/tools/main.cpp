// Command-line front end: figure-reproduction scans, generic scans,
// single-point queries, and the three-engine verification run.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosstalk/cli.hpp"

namespace {

using crosstalk::RunConfig;

struct CliValues {
    double B = 0, B_prime = 0, Delta = 0, delta = 0, G = 0, gamma1 = 0, gamma2 = 0;
    std::string axis = "delta";
    double from = -10.0, to = 20.0;
    int points = 601;
    std::string engine = "analytic";
    std::string output = "-";
    std::string format = "csv";
    double scale_A = 0.0;
    std::string config_path;
    double probe_amplitude = 0.0, t_end = 0.0, dt = 0.0, demod_window = 0.0;
};

crosstalk::ScanAxis parse_axis(const std::string& s) {
    if (s == "delta") return crosstalk::ScanAxis::probe_detuning;
    if (s == "Delta") return crosstalk::ScanAxis::control_detuning;
    if (s == "G") return crosstalk::ScanAxis::control_rabi;
    if (s == "locked") return crosstalk::ScanAxis::locked_two_photon;
    throw CLI::ValidationError("--axis", "expected delta|Delta|G|locked");
}

crosstalk::Engine parse_engine(const std::string& s) {
    if (s == "analytic") return crosstalk::Engine::analytic;
    if (s == "bloch") return crosstalk::Engine::bloch;
    if (s == "timedomain") return crosstalk::Engine::timedomain;
    if (s == "lambda") return crosstalk::Engine::lambda_reference;
    throw CLI::ValidationError("--engine", "expected analytic|bloch|timedomain|lambda");
}

// Config file, then environment/flags on top (CLI11 treats env values as
// provided options, so anything parsed wins over the file).
void apply_config_file(const std::string& path, RunConfig& cfg,
                       crosstalk::IntegrationConfig& icfg, bool& icfg_touched) {
    std::ifstream in(path);
    if (!in) throw crosstalk::IoError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw crosstalk::IoError("config parse error in " + path + ": " + e.what());
    }
    const auto num = [&](const char* key, double& target) {
        if (doc.contains(key)) target = doc.at(key).get<double>();
    };
    num("B", cfg.params.B);
    num("B_prime", cfg.params.B_prime);
    num("Delta", cfg.params.Delta);
    num("delta", cfg.params.delta);
    if (doc.contains("G")) cfg.params.G = crosstalk::Complex{doc.at("G").get<double>(), 0.0};
    num("gamma1", cfg.params.gamma1);
    num("gamma2", cfg.params.gamma2);
    if (doc.contains("axis")) cfg.axis = parse_axis(doc.at("axis").get<std::string>());
    num("from", cfg.lo);
    num("to", cfg.hi);
    if (doc.contains("points")) cfg.count = doc.at("points").get<int>();
    if (doc.contains("engine")) cfg.engine = parse_engine(doc.at("engine").get<std::string>());
    if (doc.contains("output")) cfg.output = doc.at("output").get<std::string>();
    if (doc.contains("format")) {
        const auto f = doc.at("format").get<std::string>();
        if (f != "csv" && f != "json")
            throw crosstalk::IoError("config: format must be csv or json");
        cfg.format = f == "csv" ? RunConfig::Format::csv : RunConfig::Format::json;
    }
    if (doc.contains("scale_A_MHz")) cfg.scale_A_MHz = doc.at("scale_A_MHz").get<double>();
    const auto icfg_num = [&](const char* key, double& target) {
        if (doc.contains(key)) {
            target = doc.at(key).get<double>();
            icfg_touched = true;
        }
    };
    icfg_num("probe_amplitude", icfg.probe_amplitude);
    icfg_num("t_end", icfg.t_end);
    icfg_num("dt", icfg.dt);
    icfg_num("demod_window", icfg.demod_window);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Probe-field susceptibilities of a four-level J=1/2 <-> J=1/2 system "
        "driven by a pi-polarized control field. All inputs in units of gamma."};
    app.require_subcommand(1);
    app.fallthrough();

    CliValues v;
    std::map<std::string, CLI::Option*> opts;
    opts["B"] = app.add_option("--B", v.B, "Excited-state half-splitting (Zeeman separation 2B)")
                    ->envname("CROSSTALK_B");
    opts["B_prime"] =
        app.add_option("--B-prime", v.B_prime, "Ground-state half-splitting (separation 2B')")
            ->envname("CROSSTALK_B_PRIME");
    opts["Delta"] = app.add_option("--Delta", v.Delta, "Control detuning")
                        ->envname("CROSSTALK_DELTA_CONTROL");
    opts["delta"] =
        app.add_option("--delta", v.delta, "Probe detuning")->envname("CROSSTALK_DELTA_PROBE");
    opts["G"] = app.add_option("--G", v.G, "Control Rabi half-amplitude")->envname("CROSSTALK_G");
    opts["gamma1"] =
        app.add_option("--gamma1", v.gamma1, "Cross decay rate (e- -> g+, e+ -> g-)")
            ->envname("CROSSTALK_GAMMA1");
    opts["gamma2"] =
        app.add_option("--gamma2", v.gamma2, "Direct decay rate (e+ -> g+, e- -> g-)")
            ->envname("CROSSTALK_GAMMA2");
    opts["engine"] =
        app.add_option("--engine", v.engine, "Engine: analytic|bloch|timedomain|lambda");
    opts["output"] = app.add_option("--output,-o", v.output, "Output path ('-' for stdout)");
    opts["format"] = app.add_option("--format", v.format, "Output format: csv|json");
    opts["scale_A"] = app.add_option(
        "--scale-A", v.scale_A,
        "Einstein A coefficient in MHz; appends an axis_MHz column (gamma = A/12)");
    opts["config"] = app.add_option("--config", v.config_path, "JSON config file with overrides");
    opts["probe_amplitude"] = app.add_option("--probe-amplitude", v.probe_amplitude,
                                             "Time-domain probe amplitude epsilon");
    opts["t_end"] = app.add_option("--t-end", v.t_end, "Time-domain integration length (1/gamma)");
    opts["dt"] = app.add_option("--dt", v.dt, "Time-domain step (1/gamma)");
    opts["demod_window"] =
        app.add_option("--demod-window", v.demod_window, "Demodulation window fraction");

    auto* fig2 = app.add_subcommand(
        "fig2", "Probe-detuning scan, four-level plus Lambda-reference rows");
    auto* fig3a =
        app.add_subcommand("fig3a", "Locked delta = Delta scan (dispersion zero at delta0)");
    auto* fig3b = app.add_subcommand("fig3b", "Control-Rabi scan at delta = Delta = B'-B");
    auto* fig4 = app.add_subcommand("fig4", "Probe-detuning scan with the term decomposition");
    auto* fig5 = app.add_subcommand("fig5", "Locked delta = Delta scan (absorption)");
    auto* scan_cmd = app.add_subcommand("scan", "Generic scan over one axis");
    scan_cmd->add_option("--axis", v.axis, "Scan axis: delta|Delta|G|locked");
    opts["from"] = scan_cmd->add_option("--from", v.from, "Axis lower bound");
    opts["to"] = scan_cmd->add_option("--to", v.to, "Axis upper bound");
    opts["points"] = scan_cmd->add_option("--points", v.points, "Number of grid points");
    auto* point_cmd = app.add_subcommand("point", "Evaluate chi at a single parameter point");
    auto* verify_cmd =
        app.add_subcommand("verify", "Three-engine comparison on a 21-point probe grid");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    if (fig2->parsed()) cfg.command = RunConfig::Command::fig2;
    if (fig3a->parsed()) cfg.command = RunConfig::Command::fig3a;
    if (fig3b->parsed()) cfg.command = RunConfig::Command::fig3b;
    if (fig4->parsed()) cfg.command = RunConfig::Command::fig4;
    if (fig5->parsed()) cfg.command = RunConfig::Command::fig5;
    if (scan_cmd->parsed()) cfg.command = RunConfig::Command::scan;
    if (point_cmd->parsed()) cfg.command = RunConfig::Command::point;
    if (verify_cmd->parsed()) cfg.command = RunConfig::Command::verify;

    crosstalk::IntegrationConfig icfg;
    bool icfg_touched = false;
    try {
        if (!v.config_path.empty()) apply_config_file(v.config_path, cfg, icfg, icfg_touched);

        const auto given = [&](const char* key) { return opts.at(key)->count() > 0; };
        if (given("B")) cfg.params.B = v.B;
        if (given("B_prime")) cfg.params.B_prime = v.B_prime;
        if (given("Delta")) cfg.params.Delta = v.Delta;
        if (given("delta")) cfg.params.delta = v.delta;
        if (given("G")) cfg.params.G = crosstalk::Complex{v.G, 0.0};
        if (given("gamma1")) cfg.params.gamma1 = v.gamma1;
        if (given("gamma2")) cfg.params.gamma2 = v.gamma2;
        if (given("engine")) cfg.engine = parse_engine(v.engine);
        if (given("output")) cfg.output = v.output;
        if (given("format")) {
            if (v.format != "csv" && v.format != "json")
                throw CLI::ValidationError("--format", "expected csv or json");
            cfg.format = v.format == "csv" ? RunConfig::Format::csv : RunConfig::Format::json;
        }
        if (given("scale_A")) cfg.scale_A_MHz = v.scale_A;
        if (scan_cmd->parsed()) {
            if (scan_cmd->count("--axis") > 0) cfg.axis = parse_axis(v.axis);
            if (given("from")) cfg.lo = v.from;
            if (given("to")) cfg.hi = v.to;
            if (given("points")) cfg.count = v.points;
        }
        if (given("probe_amplitude")) { icfg.probe_amplitude = v.probe_amplitude; icfg_touched = true; }
        if (given("t_end")) { icfg.t_end = v.t_end; icfg_touched = true; }
        if (given("dt")) { icfg.dt = v.dt; icfg_touched = true; }
        if (given("demod_window")) { icfg.demod_window = v.demod_window; icfg_touched = true; }
        if (icfg_touched) cfg.integration = icfg;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return crosstalk::kExitValidation;
    } catch (const crosstalk::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return crosstalk::kExitIo;
    }

    return crosstalk::run(cfg, std::cout, std::cerr);
}
