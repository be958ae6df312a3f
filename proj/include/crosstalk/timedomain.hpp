#pragma once

#include <iosfwd>
#include <vector>

#include "crosstalk/analytic.hpp"
#include "crosstalk/model.hpp"

namespace crosstalk {

// Fixed-step integration of the full non-autonomous equation set with a
// small but finite probe g- = g+ = probe_amplitude, starting from |g-><g-|.
struct IntegrationConfig {
    double probe_amplitude = 1e-3;  // epsilon, in units of gamma
    double t_end = 2000.0;          // units of 1/gamma
    double dt = 2e-3;               // requested step; snapped to divide the
                                    // demodulation period exactly
    double demod_window = 0.25;     // final fraction averaged, snapped to
                                    // whole 2*pi/w12 periods

    // dt small enough for the fastest decay channel at these parameters.
    static IntegrationConfig defaults_for(const SystemParams& params);
};

struct Trajectory {
    std::vector<double> t;
    std::vector<DensityMatrix> rho;
    double dt = 0.0;             // actual step after period snapping
    int steps_per_period = 0;    // dt * steps_per_period == 2*pi/|w12|
    int store_stride = 0;        // steps between stored samples
    int samples_per_period = 0;  // steps_per_period / store_stride
};

// Hand transcription of the equation set with the explicit e^{-+i w12 t}
// probe factors retained. Independent of the assembled Liouvillian blocks.
DensityMatrix time_derivative(const SystemParams& params, Complex g_minus, Complex g_plus,
                              double t, const DensityMatrix& rho);

// Classical fixed-step 4th-order integration. Throws ResonantDegeneracyError
// when w12 == 0, ParameterError on config violations, NonConvergenceError if
// the trace drifts beyond 1e-7.
Trajectory integrate(const SystemParams& params, const IntegrationConfig& cfg);

// Projects rho_{e+g-}(t) and rho_{e-g+}(t) onto e^{-i w12 t} over the
// snapped window and divides by the probe amplitude. Throws
// NonConvergenceError if the two half-window estimates disagree beyond the
// claimed tolerance max(1e-3, 10 epsilon) relative.
FirstOrderResponse demodulate(const Trajectory& traj, const SystemParams& params,
                              const IntegrationConfig& cfg);

// Debug dump: t followed by the 16 components as re/im pairs.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace crosstalk
