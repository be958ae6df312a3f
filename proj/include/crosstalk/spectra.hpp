#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosstalk/analytic.hpp"
#include "crosstalk/model.hpp"
#include "crosstalk/timedomain.hpp"

namespace crosstalk {

enum class Engine { analytic, bloch, timedomain, lambda_reference };

enum class ScanAxis { probe_detuning, control_detuning, control_rabi, locked_two_photon };

const char* engine_name(Engine e);
const char* axis_name(ScanAxis a);

// chi_- and chi_+ in units of N|d_{e+g-}|^2 / (hbar gamma): numerically equal
// to rho'(-1)_{e+g-} and rho'(+1)_{e-g+}. chi_plus and terms are NaN/empty
// where the engine cannot produce them (lambda reference, time domain).
struct SusceptibilityPoint {
    double delta;
    double Delta;
    double G;
    Complex chi_minus;
    Complex chi_plus;
    std::optional<ResponseTerms> terms;
};

struct ScanSpec {
    ScanAxis axis = ScanAxis::probe_detuning;
    double lo = -10.0;
    double hi = 20.0;
    int count = 601;
    SystemParams base;  // fixed values of the non-scanned parameters
    Engine engine = Engine::analytic;
    IntegrationConfig integration;  // used by the timedomain engine
};

// Points where omega12 == 0 are dropped with a warning record rather than
// interpolated; per-point engine errors are flagged the same way.
struct SkippedPoint {
    double axis_value;
    std::string reason;
};

struct ScanResult {
    ScanSpec spec;
    std::vector<SusceptibilityPoint> points;
    std::vector<SkippedPoint> skipped;
};

struct GainInterval {
    double lo;
    double hi;
};

struct FeatureReport {
    std::vector<double> transparency_points;  // |Im chi_-| < transparency tol
    std::vector<GainInterval> gain_intervals;  // maximal intervals Im chi_- < -tol
    std::vector<double> dispersion_zeros;      // Re chi_- crossings, bisection-refined
    std::optional<double> predicted_delta_zero;  // closed form, when B' != B
    std::vector<double> predicted_lambda_zeros;  // Delta + real Cardano roots
};

SystemParams apply_axis(const SystemParams& base, ScanAxis axis, double value);

SusceptibilityPoint evaluate_point(const SystemParams& params, Engine engine,
                                   const IntegrationConfig& integration = {});

ScanResult scan(const ScanSpec& spec);

// Same scan driven by the Case-I Lambda response.
ScanResult lambda_reference_scan(ScanSpec spec);

// Feature positions are refined by bisection on the scan's own engine;
// dispersion zeros are refined until |Re chi_-| < 1e-8.
FeatureReport detect_features(const ScanResult& result, double gain_tol = 1e-9,
                              double transparency_tol = 1e-8);

}  // namespace crosstalk
