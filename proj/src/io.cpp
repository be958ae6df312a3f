#include "crosstalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace crosstalk {

namespace {
const double kNaN = std::numeric_limits<double>::quiet_NaN();

double axis_value(const SusceptibilityPoint& pt, ScanAxis axis) {
    switch (axis) {
        case ScanAxis::control_detuning: return pt.Delta;
        case ScanAxis::control_rabi: return pt.G;
        default: return pt.delta;
    }
}

struct Row {
    const SusceptibilityPoint* pt;
    const ScanResult* result;
};

std::vector<Row> collect_rows(const std::vector<const ScanResult*>& results) {
    std::vector<Row> rows;
    for (const ScanResult* r : results)
        for (const auto& pt : r->points) rows.push_back({&pt, r});
    return rows;
}

}  // namespace

std::string format9(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

static void write_header_lines(std::ostream& out, const OutputHeader& header,
                               const std::vector<const ScanResult*>& results,
                               const char* prefix) {
    const ScanSpec& spec = results.front()->spec;
    const SystemParams& p = spec.base;
    out << prefix << " command: " << header.command << "\n";
    out << prefix << " B_over_gamma: " << format9(p.B) << "\n";
    out << prefix << " B_prime_over_gamma: " << format9(p.B_prime) << "\n";
    out << prefix << " Delta_over_gamma: " << format9(p.Delta) << "\n";
    out << prefix << " delta_over_gamma: " << format9(p.delta) << "\n";
    out << prefix << " G_over_gamma: " << format9(std::abs(p.G)) << "\n";
    out << prefix << " gamma1_over_gamma: " << format9(p.gamma1) << "\n";
    out << prefix << " gamma2_over_gamma: " << format9(p.gamma2) << "\n";
    out << prefix << " axis: " << axis_name(spec.axis) << " lo: " << format9(spec.lo)
        << " hi: " << format9(spec.hi) << " points: " << spec.count << "\n";
    for (const ScanResult* r : results) {
        out << prefix << " engine: " << engine_name(r->spec.engine);
        if (r->spec.engine == Engine::timedomain)
            out << " probe_amplitude: " << format9(r->spec.integration.probe_amplitude)
                << " t_end: " << format9(r->spec.integration.t_end)
                << " dt: " << format9(r->spec.integration.dt)
                << " demod_window: " << format9(r->spec.integration.demod_window);
        out << "\n";
        for (const auto& s : r->skipped)
            out << prefix << " skipped: " << format9(s.axis_value) << " (" << s.reason << ")\n";
    }
    if (header.scale_A_MHz)
        out << prefix << " scale_A_MHz: " << format9(*header.scale_A_MHz)
            << " (axis_MHz = axis * A/12)\n";
}

void write_scan_csv(std::ostream& out, const OutputHeader& header,
                    const std::vector<const ScanResult*>& results) {
    write_header_lines(out, header, results, "#");
    out << "delta_over_gamma,Delta_over_gamma,G_over_gamma,re_chi_minus,im_chi_minus,"
           "re_chi_plus,im_chi_plus,re_term_coh_pp,im_term_coh_pp,re_term_coh_mm,"
           "im_term_coh_mm,re_term_pop,im_term_pop,engine";
    if (header.scale_A_MHz) out << ",axis_MHz";
    out << "\n";
    for (const Row& row : collect_rows(results)) {
        const auto& pt = *row.pt;
        const ResponseTerms terms = pt.terms.value_or(
            ResponseTerms{{kNaN, kNaN}, {kNaN, kNaN}, {kNaN, kNaN}});
        out << format9(pt.delta) << "," << format9(pt.Delta) << "," << format9(pt.G) << ","
            << format9(pt.chi_minus.real()) << "," << format9(pt.chi_minus.imag()) << ","
            << format9(pt.chi_plus.real()) << "," << format9(pt.chi_plus.imag()) << ","
            << format9(terms.coh_pp.real()) << "," << format9(terms.coh_pp.imag()) << ","
            << format9(terms.coh_mm.real()) << "," << format9(terms.coh_mm.imag()) << ","
            << format9(terms.pop.real()) << "," << format9(terms.pop.imag()) << ","
            << engine_name(row.result->spec.engine);
        if (header.scale_A_MHz)
            out << ","
                << format9(axis_value(pt, row.result->spec.axis) * (*header.scale_A_MHz) / 12.0);
        out << "\n";
    }
}

void write_scan_json(std::ostream& out, const OutputHeader& header,
                     const std::vector<const ScanResult*>& results) {
    using json = nlohmann::ordered_json;
    const ScanSpec& spec = results.front()->spec;
    const SystemParams& p = spec.base;

    json doc;
    doc["command"] = header.command;
    json params;
    params["B_over_gamma"] = format9(p.B);
    params["B_prime_over_gamma"] = format9(p.B_prime);
    params["Delta_over_gamma"] = format9(p.Delta);
    params["delta_over_gamma"] = format9(p.delta);
    params["G_over_gamma"] = format9(std::abs(p.G));
    params["gamma1_over_gamma"] = format9(p.gamma1);
    params["gamma2_over_gamma"] = format9(p.gamma2);
    doc["params"] = params;
    json axis;
    axis["name"] = axis_name(spec.axis);
    axis["lo"] = format9(spec.lo);
    axis["hi"] = format9(spec.hi);
    axis["points"] = spec.count;
    doc["axis"] = axis;
    if (header.scale_A_MHz) doc["scale_A_MHz"] = format9(*header.scale_A_MHz);

    json skipped = json::array();
    for (const ScanResult* r : results)
        for (const auto& s : r->skipped) {
            json rec;
            rec["axis_value"] = format9(s.axis_value);
            rec["engine"] = engine_name(r->spec.engine);
            rec["reason"] = s.reason;
            skipped.push_back(rec);
        }
    doc["skipped"] = skipped;

    json rows = json::array();
    for (const Row& row : collect_rows(results)) {
        const auto& pt = *row.pt;
        const ResponseTerms terms = pt.terms.value_or(
            ResponseTerms{{kNaN, kNaN}, {kNaN, kNaN}, {kNaN, kNaN}});
        json rec;
        rec["delta_over_gamma"] = format9(pt.delta);
        rec["Delta_over_gamma"] = format9(pt.Delta);
        rec["G_over_gamma"] = format9(pt.G);
        rec["re_chi_minus"] = format9(pt.chi_minus.real());
        rec["im_chi_minus"] = format9(pt.chi_minus.imag());
        rec["re_chi_plus"] = format9(pt.chi_plus.real());
        rec["im_chi_plus"] = format9(pt.chi_plus.imag());
        rec["re_term_coh_pp"] = format9(terms.coh_pp.real());
        rec["im_term_coh_pp"] = format9(terms.coh_pp.imag());
        rec["re_term_coh_mm"] = format9(terms.coh_mm.real());
        rec["im_term_coh_mm"] = format9(terms.coh_mm.imag());
        rec["re_term_pop"] = format9(terms.pop.real());
        rec["im_term_pop"] = format9(terms.pop.imag());
        rec["engine"] = engine_name(row.result->spec.engine);
        if (header.scale_A_MHz)
            rec["axis_MHz"] =
                format9(axis_value(pt, row.result->spec.axis) * (*header.scale_A_MHz) / 12.0);
        rows.push_back(rec);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
}

}  // namespace crosstalk
