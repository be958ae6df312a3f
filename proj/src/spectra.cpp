#include "crosstalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "crosstalk/bloch.hpp"

namespace crosstalk {

namespace {
constexpr double kOmega12Tol = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::analytic: return "analytic";
        case Engine::bloch: return "bloch";
        case Engine::timedomain: return "timedomain";
        case Engine::lambda_reference: return "lambda";
    }
    return "?";
}

const char* axis_name(ScanAxis a) {
    switch (a) {
        case ScanAxis::probe_detuning: return "delta";
        case ScanAxis::control_detuning: return "Delta";
        case ScanAxis::control_rabi: return "G";
        case ScanAxis::locked_two_photon: return "locked_delta_equals_Delta";
    }
    return "?";
}

SystemParams apply_axis(const SystemParams& base, ScanAxis axis, double value) {
    SystemParams p = base;
    switch (axis) {
        case ScanAxis::probe_detuning: p.delta = value; break;
        case ScanAxis::control_detuning: p.Delta = value; break;
        case ScanAxis::control_rabi: p.G = Complex{value, 0.0}; break;
        case ScanAxis::locked_two_photon: p.delta = p.Delta = value; break;
    }
    return p;
}

SusceptibilityPoint evaluate_point(const SystemParams& p, Engine engine,
                                   const IntegrationConfig& integration) {
    SusceptibilityPoint pt;
    pt.delta = p.delta;
    pt.Delta = p.Delta;
    pt.G = std::abs(p.G);
    switch (engine) {
        case Engine::analytic: {
            const FirstOrderResponse r = first_order(p);
            pt.chi_minus = r.rho_ep_gm;
            pt.chi_plus = r.rho_em_gp;
            pt.terms = r.terms;
            break;
        }
        case Engine::bloch: {
            const FirstOrderResponse r = sideband_response(p);
            pt.chi_minus = r.rho_ep_gm;
            pt.chi_plus = r.rho_em_gp;
            pt.terms = r.terms;
            break;
        }
        case Engine::timedomain: {
            const Trajectory traj = integrate(p, integration);
            const FirstOrderResponse r = demodulate(traj, p, integration);
            pt.chi_minus = r.rho_ep_gm;
            pt.chi_plus = r.rho_em_gp;
            break;
        }
        case Engine::lambda_reference: {
            pt.chi_minus = lambda_system(p);
            pt.chi_plus = Complex{kNaN, kNaN};
            break;
        }
    }
    return pt;
}

ScanResult scan(const ScanSpec& spec) {
    if (!(spec.lo < spec.hi)) throw ParameterError("scan: range must satisfy lo < hi");
    if (spec.count < 2) throw ParameterError("scan: need at least 2 points");
    validate(spec.base);

    ScanResult result;
    result.spec = spec;
    result.points.reserve(static_cast<size_t>(spec.count));
    const double step = (spec.hi - spec.lo) / static_cast<double>(spec.count - 1);
    for (int i = 0; i < spec.count; ++i) {
        const double v = spec.lo + step * static_cast<double>(i);
        const SystemParams p = apply_axis(spec.base, spec.axis, v);
        const double w12 = p.delta - p.Delta + 2.0 * p.B_prime;
        if (std::abs(w12) < kOmega12Tol) {
            result.skipped.push_back({v, "omega12 == 0: sideband ansatz undefined, point dropped"});
            continue;
        }
        try {
            result.points.push_back(evaluate_point(p, spec.engine, spec.integration));
        } catch (const ParameterError& e) {
            result.skipped.push_back({v, e.what()});
        } catch (const EngineError& e) {
            result.skipped.push_back({v, e.what()});
        }
    }
    return result;
}

ScanResult lambda_reference_scan(ScanSpec spec) {
    spec.engine = Engine::lambda_reference;
    return scan(spec);
}

namespace {

// Bisection refinement of a sign change of f on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
    for (int it = 0; it < 120 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void dedupe_sorted(std::vector<double>& v, double tol) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [tol](double a, double b) { return std::abs(a - b) <= tol; }),
            v.end());
}

}  // namespace

FeatureReport detect_features(const ScanResult& result, double gain_tol,
                              double transparency_tol) {
    FeatureReport report;
    const ScanSpec& spec = result.spec;
    const auto& pts = result.points;

    const auto chi_at = [&spec](double v) {
        return evaluate_point(apply_axis(spec.base, spec.axis, v), spec.engine, spec.integration)
            .chi_minus;
    };
    const auto im_at = [&chi_at](double v) { return chi_at(v).imag(); };
    const auto re_at = [&chi_at](double v) { return chi_at(v).real(); };
    const auto axis_of = [&spec](const SusceptibilityPoint& pt) {
        switch (spec.axis) {
            case ScanAxis::control_detuning: return pt.Delta;
            case ScanAxis::control_rabi: return pt.G;
            default: return pt.delta;
        }
    };

    if (!pts.empty()) {
        const double span = axis_of(pts.back()) - axis_of(pts.front());
        const double merge_tol = std::max(1e-9, 1e-7 * std::abs(span));

        // transparency points: |Im| below tolerance, crossings refined
        for (size_t i = 0; i < pts.size(); ++i) {
            const double im = pts[i].chi_minus.imag();
            if (std::abs(im) < transparency_tol)
                report.transparency_points.push_back(axis_of(pts[i]));
            if (i + 1 < pts.size()) {
                const double im_next = pts[i + 1].chi_minus.imag();
                if (im != 0.0 && im_next != 0.0 && (im > 0.0) != (im_next > 0.0)) {
                    const double z = bisect(im_at, axis_of(pts[i]), axis_of(pts[i + 1]), im);
                    if (std::abs(im_at(z)) < transparency_tol)
                        report.transparency_points.push_back(z);
                }
            }
        }
        dedupe_sorted(report.transparency_points, merge_tol);

        // gain intervals: maximal runs with Im < -tol, edges refined to Im == -tol
        const auto shifted = [&im_at, gain_tol](double v) { return im_at(v) + gain_tol; };
        size_t i = 0;
        while (i < pts.size()) {
            if (pts[i].chi_minus.imag() < -gain_tol) {
                size_t j = i;
                while (j + 1 < pts.size() && pts[j + 1].chi_minus.imag() < -gain_tol) ++j;
                GainInterval gi{axis_of(pts[i]), axis_of(pts[j])};
                if (i > 0)
                    gi.lo = bisect(shifted, axis_of(pts[i - 1]), axis_of(pts[i]),
                                   shifted(axis_of(pts[i - 1])));
                if (j + 1 < pts.size())
                    gi.hi = bisect(shifted, axis_of(pts[j]), axis_of(pts[j + 1]),
                                   shifted(axis_of(pts[j])));
                report.gain_intervals.push_back(gi);
                i = j + 1;
            } else {
                ++i;
            }
        }

        // dispersion zeros: Re crossings refined until |Re| < 1e-8
        for (size_t k = 0; k < pts.size(); ++k) {
            const double re = pts[k].chi_minus.real();
            if (std::abs(re) < 1e-14) {
                report.dispersion_zeros.push_back(axis_of(pts[k]));
                continue;
            }
            if (k + 1 < pts.size()) {
                const double re_next = pts[k + 1].chi_minus.real();
                if (std::abs(re_next) >= 1e-14 && (re > 0.0) != (re_next > 0.0)) {
                    const double z = bisect(re_at, axis_of(pts[k]), axis_of(pts[k + 1]), re);
                    if (std::abs(re_at(z)) < 1e-8) report.dispersion_zeros.push_back(z);
                }
            }
        }
        dedupe_sorted(report.dispersion_zeros, merge_tol);
    }

    // predicted markers from the closed forms
    if (spec.base.B_prime != spec.base.B)
        report.predicted_delta_zero = delta_zero(spec.base);
    const CardanoRoots cr = cardano_roots(spec.base);
    for (const Complex& r : cr.roots)
        if (std::abs(r.imag()) < 1e-9)
            report.predicted_lambda_zeros.push_back(spec.base.Delta + r.real());
    dedupe_sorted(report.predicted_lambda_zeros, 1e-9);
    return report;
}

}  // namespace crosstalk
