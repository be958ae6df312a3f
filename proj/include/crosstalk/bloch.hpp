#pragma once

#include "crosstalk/analytic.hpp"
#include "crosstalk/model.hpp"

namespace crosstalk {

// The equation set as linear operators on the 16-component density vector,
// split by the time dependence of the coefficient:
//   d/dt vec(rho) = [ L0 + g- e^{-i w12 t} V_minus + g+ e^{-i w12 t} V_plus
//                        + g-* e^{+i w12 t} V_minus_conj
//                        + g+* e^{+i w12 t} V_plus_conj ] vec(rho)
// The g+g+ row of every block is the trace relation (minus the sum of the
// other population rows).
struct LiouvillianBlocks {
    Matrix16 L0;
    Matrix16 V_minus;
    Matrix16 V_plus;
    Matrix16 V_minus_conj;
    Matrix16 V_plus_conj;
};

LiouvillianBlocks assemble(const SystemParams& params);

// Full time-dependent derivative evaluated through the blocks. Used by the
// transcription-consistency tests against the independent time-domain RHS.
DensityMatrix evaluate_derivative(const LiouvillianBlocks& blocks, const SystemParams& params,
                                  Complex g_minus, Complex g_plus, double t,
                                  const DensityMatrix& rho);

// Control-only steady state by SVD null-space extraction, trace-normalized.
// Throws DegenerateSteadyStateError when the numerical null space has
// dimension > 1 (second singular value below 1e-8 relative).
DensityMatrix steady_state_zeroth(const SystemParams& params);

// Sideband amplitudes at e^{-i w12 t}: solves (L0 + i w12 I) x = -V rho0 for
// the g- and g+ drives and extracts rho'(-1)_{e+g-} and rho'(+1)_{e-g+}.
// The three-term split of the sigma- response is obtained by solving the
// g- system once per drive row (population row e+g-, coherence rows g+g-
// and e+e-). Throws ResonantDegeneracyError when w12 == 0.
FirstOrderResponse sideband_response(const SystemParams& params);

}  // namespace crosstalk
