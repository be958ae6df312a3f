// Acceptance suite: runs every agreed criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "crosstalk/bloch.hpp"
#include "crosstalk/spectra.hpp"
#include "crosstalk/timedomain.hpp"
#include "test_helpers.hpp"

using namespace crosstalk;
using testutil::ParamSampler;
using testutil::rel_err;

namespace {

int g_failures = 0;

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

void report(int criterion, const std::string& description, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                description.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

ScanSpec fig2_grid(Engine engine) {
    ScanSpec spec;
    spec.axis = ScanAxis::probe_detuning;
    spec.lo = -10.0;
    spec.hi = 20.0;
    spec.count = 601;
    spec.base = testutil::fig2_params();
    spec.engine = engine;
    return spec;
}

void criterion_1_delta0() {
    Timer timer;
    ScanSpec spec;
    spec.axis = ScanAxis::locked_two_photon;
    spec.lo = -10.0;
    spec.hi = 15.0;
    spec.count = 501;
    spec.base = testutil::fig2_params();  // B = 2, B' = 6, Gamma = 3
    const FeatureReport report_ = detect_features(scan(spec));
    double best = 1e300;
    for (double z : report_.dispersion_zeros) best = std::min(best, std::abs(z - 10.25));
    const double elapsed = timer.seconds();
    report(1, "locked-scan dispersion zero at 10.25",
           best <= 1e-6 && elapsed < 1.0,
           fmt("|err| = %.2e, %.2f s", best, elapsed));
}

void criterion_2_anchor_value() {
    const Complex target{-4.0 / 51.0, 0.0};
    const SystemParams p = testutil::fig2_params();

    Timer t_analytic;
    const double err_analytic = std::abs(first_order(p).rho_ep_gm - target);
    const double s_analytic = t_analytic.seconds();

    Timer t_bloch;
    const double err_bloch = std::abs(sideband_response(p).rho_ep_gm - target);
    const double s_bloch = t_bloch.seconds();

    Timer t_td;
    const IntegrationConfig cfg = IntegrationConfig::defaults_for(p);
    const double err_td = std::abs(demodulate(integrate(p, cfg), p, cfg).rho_ep_gm - target);
    const double s_td = t_td.seconds();

    report(2, "chi_-(delta=Delta=4) = -4/51 from all three engines",
           err_analytic <= 1e-12 && s_analytic < 1.0 && err_bloch <= 1e-9 && s_bloch < 1.0 &&
               err_td <= 1e-3 && s_td < 30.0,
           fmt("analytic %.1e, floquet %.1e", err_analytic, err_bloch) +
               fmt(", timedomain %.1e in %.1f s", err_td, s_td));
}

void criterion_3_transparency() {
    ParamSampler sampler;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SystemParams p = sampler.draw_two_photon_locked();
        worst = std::max(worst, std::abs(first_order(p).rho_ep_gm.imag()));
    }
    report(3, "transparency at the two-photon resonance delta = Delta = B'-B",
           worst < 1e-10, fmt("max |Im chi| = %.2e over 100 draws", worst));
}

void criterion_4_gain_without_inversion() {
    Timer timer;
    const ScanResult result = scan(fig2_grid(Engine::analytic));
    const FeatureReport features = detect_features(result, /*gain_tol=*/1e-6);
    bool has_gain = false;
    for (const GainInterval& gi : features.gain_intervals)
        if (gi.lo > testutil::fig2_params().Delta) has_gain = true;

    bool no_inversion = true;
    for (const auto& pt : result.points) {
        SystemParams p = testutil::fig2_params();
        p.delta = pt.delta;
        const ZerothOrderState z = zeroth_order(p);
        const double max_e = std::max(z.pop_e_plus, z.pop_e_minus);
        if (!(z.pop_g_plus > max_e && z.pop_g_minus > max_e)) no_inversion = false;
    }
    const double elapsed = timer.seconds();
    report(4, "gain window above Delta with no population inversion",
           has_gain && no_inversion && elapsed < 2.0,
           fmt("gain interval found = %.0f, no inversion = %.0f", has_gain ? 1.0 : 0.0,
               no_inversion ? 1.0 : 0.0) +
               fmt(", %.2f s", elapsed));
}

void criterion_5_lambda_contrast() {
    const ScanResult result = lambda_reference_scan(fig2_grid(Engine::analytic));
    double min_im = 1e300;
    int maxima = 0;
    for (size_t i = 0; i < result.points.size(); ++i) {
        const double im = result.points[i].chi_minus.imag();
        min_im = std::min(min_im, im);
        if (i > 0 && i + 1 < result.points.size() &&
            im > result.points[i - 1].chi_minus.imag() &&
            im > result.points[i + 1].chi_minus.imag())
            ++maxima;
    }
    report(5, "lambda reference: no gain, Autler-Townes doublet",
           min_im >= -1e-12 && maxima == 2,
           fmt("min Im = %.2e, local maxima = %.0f", min_im, double(maxima)));
}

void criterion_6_oracle_equivalence() {
    Timer t_pairs;
    ParamSampler sampler;
    double worst_ab = 0.0;
    for (int i = 0; i < 500; ++i) {
        const SystemParams p = sampler.draw_omega12_bounded();
        const FirstOrderResponse closed = first_order(p);
        const FirstOrderResponse numeric = sideband_response(p);
        worst_ab = std::max({worst_ab, rel_err(closed.rho_ep_gm, numeric.rho_ep_gm),
                             rel_err(closed.rho_em_gp, numeric.rho_em_gp)});
    }
    const double s_pairs = t_pairs.seconds();

    Timer t_td;
    ScanSpec td_spec = fig2_grid(Engine::timedomain);
    td_spec.count = 21;
    td_spec.integration = IntegrationConfig::defaults_for(td_spec.base);
    const ScanResult td = scan(td_spec);
    ScanSpec ana_spec = fig2_grid(Engine::analytic);
    ana_spec.count = 21;
    const ScanResult ana = scan(ana_spec);
    double worst_td = 0.0;
    for (size_t i = 0; i < td.points.size(); ++i)
        worst_td = std::max(worst_td, rel_err(ana.points[i].chi_minus, td.points[i].chi_minus));
    const double s_td = t_td.seconds();

    report(6, "three-way oracle equivalence",
           worst_ab <= 1e-9 && s_pairs < 10.0 && worst_td <= 1e-3 && s_td < 600.0,
           fmt("analytic-floquet %.2e in %.1f s", worst_ab, s_pairs) +
               fmt(", timedomain-analytic %.2e in %.0f s", worst_td, s_td));
}

void criterion_7_steady_state() {
    ParamSampler sampler;
    double worst_match = 0.0, worst_herm = 0.0, worst_trace = 0.0, worst_eig = 0.0;
    const auto examine = [&](const SystemParams& p) {
        const DensityMatrix rho = steady_state_zeroth(p);
        const ZerothOrderState z = zeroth_order(p);
        worst_match = std::max(
            {worst_match, std::abs(rho(level_e_plus, level_e_plus) - z.pop_e_plus),
             std::abs(rho(level_e_minus, level_e_minus) - z.pop_e_minus),
             std::abs(rho(level_g_plus, level_g_plus) - z.pop_g_plus),
             std::abs(rho(level_g_minus, level_g_minus) - z.pop_g_minus),
             std::abs(rho(level_g_plus, level_e_plus) - z.coh_g_plus_e_plus),
             std::abs(rho(level_g_minus, level_e_minus) - z.coh_g_minus_e_minus)});
        worst_herm = std::max(worst_herm, hermiticity_defect(rho));
        worst_trace = std::max(worst_trace, std::abs(rho.trace() - Complex{1.0, 0.0}));
        worst_eig = std::max(worst_eig, -min_eigenvalue(rho));
    };
    for (int i = 0; i < 200; ++i) examine(sampler.draw());
    for (int i = 0; i <= 100; ++i) {  // locked scan sweeps the control detuning
        SystemParams p = testutil::fig2_params();
        p.delta = p.Delta = -10.0 + 0.25 * i;
        examine(p);
    }
    report(7, "null-space steady state matches closed forms, physical on all scans",
           worst_match < 1e-10 && worst_herm < 1e-12 && worst_trace < 1e-12 &&
               worst_eig < 1e-10,
           fmt("match %.1e, herm %.1e", worst_match, worst_herm) +
               fmt(", trace %.1e, eig %.1e", worst_trace, worst_eig));
}

void criterion_8_cardano() {
    ParamSampler sampler;
    double worst_residual = 0.0, worst_re = 0.0;
    bool ok = true;
    const auto examine = [&](const SystemParams& p) {
        const CardanoRoots cr = cardano_roots(p);
        for (const Complex& r : cr.roots) {
            const Complex res = ((r + p.Delta) * r + cr.a1) * r + cr.a0;
            worst_residual = std::max(worst_residual, std::abs(res));
            if (std::abs(r.imag()) >= 1e-9) continue;
            // bisection refinement of the predicted dispersion zero
            const auto re_of = [&](double d) {
                SystemParams q = p;
                q.delta = d;
                return lambda_system(q).real();
            };
            double lo = p.Delta + r.real() - 1e-3, hi = p.Delta + r.real() + 1e-3;
            double flo = re_of(lo);
            if ((flo > 0) == (re_of(hi) > 0)) {
                ok = false;  // no sign change where a zero was predicted
                continue;
            }
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = re_of(mid);
                if ((fm > 0) == (flo > 0)) lo = mid, flo = fm;
                else hi = mid;
            }
            worst_re = std::max(worst_re, std::abs(re_of(0.5 * (lo + hi))));
        }
    };
    examine(testutil::fig2_params());
    for (int i = 0; i < 50; ++i) examine(sampler.draw());
    report(8, "cardano roots satisfy the cubic and mark lambda dispersion zeros",
           ok && worst_residual < 1e-9 && worst_re < 1e-8,
           fmt("max residual %.1e, max |Re chi| at refined zeros %.1e", worst_residual,
               worst_re));
}

void criterion_9_rabi_scan_negative() {
    bool all_negative = true;
    double worst = -1e300;
    for (int k = 1; k <= 50; ++k) {
        SystemParams p = testutil::fig2_params();  // delta = Delta = B'-B
        p.G = Complex{3.0 * k / 50.0, 0.0};
        const double re = first_order(p).rho_ep_gm.real();
        worst = std::max(worst, re);
        if (!(re < 0.0)) all_negative = false;
    }
    report(9, "Re chi_- < 0 for all G in (0, 3] at delta = Delta = B'-B",
           all_negative, fmt("max Re chi_- = %.6f", worst));
}

void criterion_10_decomposition() {
    const ScanResult result = scan(fig2_grid(Engine::analytic));
    double worst_closure = 0.0;
    bool dominance = true;
    for (const auto& pt : result.points) {
        const Complex sum = pt.terms->coh_pp + pt.terms->coh_mm + pt.terms->pop;
        worst_closure = std::max(worst_closure, rel_err(pt.chi_minus, sum));
        if (pt.chi_minus.imag() < -1e-9) {
            if (!(pt.terms->coh_pp.imag() < 0.0 &&
                  std::abs(pt.terms->coh_pp.imag()) > pt.terms->pop.imag()))
                dominance = false;
        }
    }
    report(10, "term decomposition closes and the coherence term dominates the gain",
           worst_closure < 1e-12 && dominance,
           fmt("max closure error %.1e, dominance = %.0f", worst_closure,
               dominance ? 1.0 : 0.0));
}

}  // namespace

int main() {
    criterion_1_delta0();
    criterion_2_anchor_value();
    criterion_3_transparency();
    criterion_4_gain_without_inversion();
    criterion_5_lambda_contrast();
    criterion_6_oracle_equivalence();
    criterion_7_steady_state();
    criterion_8_cardano();
    criterion_9_rabi_scan_negative();
    criterion_10_decomposition();
    std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
