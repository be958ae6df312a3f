#include "crosstalk/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "crosstalk/bloch.hpp"

namespace crosstalk {

namespace {

const char* command_name(RunConfig::Command c) {
    switch (c) {
        case RunConfig::Command::fig2: return "fig2";
        case RunConfig::Command::fig3a: return "fig3a";
        case RunConfig::Command::fig3b: return "fig3b";
        case RunConfig::Command::fig4: return "fig4";
        case RunConfig::Command::fig5: return "fig5";
        case RunConfig::Command::scan: return "scan";
        case RunConfig::Command::point: return "point";
        case RunConfig::Command::verify: return "verify";
    }
    return "?";
}

void write_results(const RunConfig& cfg, std::ostream& out,
                   const std::vector<const ScanResult*>& results) {
    OutputHeader header{command_name(cfg.command), cfg.scale_A_MHz};
    const auto emit = [&](std::ostream& os) {
        if (cfg.format == RunConfig::Format::csv)
            write_scan_csv(os, header, results);
        else
            write_scan_json(os, header, results);
    };
    if (cfg.output == "-") {
        emit(out);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + cfg.output);
    emit(file);
    if (!file.good()) throw IoError("write failed: " + cfg.output);
}

// Relative deviation over chi_minus and chi_plus of two matched scans.
double max_relative_deviation(const ScanResult& ref, const ScanResult& other,
                              bool include_chi_plus) {
    double worst = 0.0;
    for (size_t i = 0; i < ref.points.size(); ++i) {
        const auto& a = ref.points[i];
        const auto& b = other.points[i];
        worst = std::max(worst, std::abs(a.chi_minus - b.chi_minus) /
                                    std::max(std::abs(a.chi_minus), 1e-12));
        if (include_chi_plus)
            worst = std::max(worst, std::abs(a.chi_plus - b.chi_plus) /
                                        std::max(std::abs(a.chi_plus), 1e-12));
    }
    return worst;
}

int run_verify(const RunConfig& cfg, const IntegrationConfig& icfg, std::ostream& out) {
    ScanSpec spec;
    spec.axis = ScanAxis::probe_detuning;
    spec.lo = -10.0;
    spec.hi = 20.0;
    spec.count = 21;
    spec.base = cfg.params;
    spec.integration = icfg;

    spec.engine = Engine::analytic;
    const ScanResult ana = scan(spec);
    spec.engine = Engine::bloch;
    const ScanResult blo = scan(spec);
    spec.engine = Engine::timedomain;
    const ScanResult td = scan(spec);

    if (ana.points.size() != blo.points.size() || ana.points.size() != td.points.size()) {
        out << "verify: FAIL (engines evaluated different point sets)\n";
        return kExitVerifyFailed;
    }

    struct Line {
        const char* label;
        double dev;
        double tol;
    } lines[] = {
        {"analytic vs bloch     ", max_relative_deviation(ana, blo, true), 1e-9},
        {"timedomain vs analytic", max_relative_deviation(ana, td, true), 1e-3},
        {"timedomain vs bloch   ", max_relative_deviation(blo, td, true), 1e-3},
    };
    bool ok = true;
    out << "three-way oracle comparison on " << ana.points.size() << " probe detunings in ["
        << format9(spec.lo) << ", " << format9(spec.hi) << "]\n";
    for (const auto& l : lines) {
        const bool pass = l.dev <= l.tol;
        ok = ok && pass;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: max relative deviation = %.3e (tolerance %.1e) %s\n",
                      l.label, l.dev, l.tol, pass ? "PASS" : "FAIL");
        out << buf;
    }
    out << (ok ? "verify: PASS\n" : "verify: FAIL\n");
    return ok ? kExitOk : kExitVerifyFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    const IntegrationConfig icfg =
        cfg.integration ? *cfg.integration : IntegrationConfig::defaults_for(cfg.params);

    ScanSpec spec;
    spec.base = cfg.params;
    spec.engine = cfg.engine;
    spec.integration = icfg;

    switch (cfg.command) {
        case RunConfig::Command::fig2: {
            spec.axis = ScanAxis::probe_detuning;
            spec.lo = -10.0;
            spec.hi = 20.0;
            spec.count = 601;
            spec.engine = Engine::analytic;
            const ScanResult four_level = scan(spec);
            const ScanResult lambda_ref = lambda_reference_scan(spec);
            write_results(cfg, out, {&four_level, &lambda_ref});
            return kExitOk;
        }
        case RunConfig::Command::fig4: {
            spec.axis = ScanAxis::probe_detuning;
            spec.lo = -10.0;
            spec.hi = 20.0;
            spec.count = 601;
            spec.engine = Engine::analytic;
            const ScanResult four_level = scan(spec);
            write_results(cfg, out, {&four_level});
            return kExitOk;
        }
        case RunConfig::Command::fig3a:
        case RunConfig::Command::fig5: {
            spec.axis = ScanAxis::locked_two_photon;
            spec.lo = -10.0;
            spec.hi = 15.0;
            spec.count = 501;
            spec.engine = Engine::analytic;
            const ScanResult locked = scan(spec);
            write_results(cfg, out, {&locked});
            return kExitOk;
        }
        case RunConfig::Command::fig3b: {
            spec.base.delta = spec.base.Delta = cfg.params.B_prime - cfg.params.B;
            spec.axis = ScanAxis::control_rabi;
            spec.lo = 0.06;
            spec.hi = 3.0;
            spec.count = 50;
            spec.engine = Engine::analytic;
            const ScanResult gscan = scan(spec);
            write_results(cfg, out, {&gscan});
            return kExitOk;
        }
        case RunConfig::Command::scan: {
            spec.axis = cfg.axis;
            spec.lo = cfg.lo;
            spec.hi = cfg.hi;
            spec.count = cfg.count;
            const ScanResult result = scan(spec);
            write_results(cfg, out, {&result});
            return kExitOk;
        }
        case RunConfig::Command::point: {
            validate(cfg.params);
            const SusceptibilityPoint pt = evaluate_point(cfg.params, cfg.engine, icfg);
            char buf[120];
            std::snprintf(buf, sizeof buf, "chi_minus = (%.7f, %.7f)\n", pt.chi_minus.real(),
                          pt.chi_minus.imag());
            out << buf;
            std::snprintf(buf, sizeof buf, "chi_plus  = (%.7f, %.7f)\n", pt.chi_plus.real(),
                          pt.chi_plus.imag());
            out << buf;
            if (cfg.output != "-") {
                ScanResult single;
                single.spec.axis = ScanAxis::probe_detuning;
                single.spec.lo = single.spec.hi = cfg.params.delta;
                single.spec.count = 1;
                single.spec.base = cfg.params;
                single.spec.engine = cfg.engine;
                single.spec.integration = icfg;
                single.points.push_back(pt);
                write_results(cfg, out, {&single});
            }
            return kExitOk;
        }
        case RunConfig::Command::verify:
            validate(cfg.params);
            return run_verify(cfg, icfg, out);
    }
    return kExitValidation;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(cfg, out);
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const EngineError& e) {
        err << "engine error: " << e.what() << "\n";
        return kExitEngine;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace crosstalk
