#pragma once

#include <array>
#include <optional>

#include "crosstalk/model.hpp"

namespace crosstalk {

// Control-only steady state in closed form.
struct ZerothOrderState {
    double pop_e_plus;   // xy/Q
    double pop_e_minus;  // xy/Q
    double pop_g_plus;   // x(gamma1+gamma2+y)/Q
    double pop_g_minus;  // y(gamma1+gamma2+x)/Q
    Complex coh_g_plus_e_plus;    // -i x G* (gamma1+gamma2) / (c Q)
    Complex coh_g_minus_e_minus;  // -i y G* (gamma1+gamma2) / (d Q)
};

// The three additive contributions to rho'(-1)_{e+g-}, in the order the
// closed form lists them: the rho_{g+e+} coherence term, the rho_{g-e-}
// coherence term, and the population-difference term.
struct ResponseTerms {
    Complex coh_pp;
    Complex coh_mm;
    Complex pop;
};

// Weak-probe sideband amplitudes. chi_- and chi_+ in normalized units are
// numerically equal to rho_ep_gm and rho_em_gp. `terms` is populated by the
// engines that can decompose the sigma- response (analytic and the linear
// sideband solve); the time-domain demodulator leaves it empty.
struct FirstOrderResponse {
    Complex rho_ep_gm;  // rho'(-1)_{e+g-}, drives chi_-
    Complex rho_em_gp;  // rho'(+1)_{e-g+}, drives chi_+
    std::optional<ResponseTerms> terms;
};

// Roots of the cubic in D = delta - Delta locating the zero crossings of
// Re(chi) for the single-Lambda reference system:
//   D^3 + Delta D^2 + a1 D + a0 = 0,
//   a1 = Gamma_gg^2 - |G|^2,  a0 = Delta Gamma_gg^2.
// Solved by the classical A+- construction with the two cube-root branches
// paired so their product is -Qc, then polished by Newton iterations.
struct CardanoRoots {
    double a0, a1;
    double Qc, Rc;                 // cubic invariants (3a1-Delta^2)/9, ...
    Complex A_plus, A_minus;
    std::array<Complex, 3> roots;  // root 1 = -Delta/3 + A_plus, then the pair
};

ZerothOrderState zeroth_order(const SystemParams& params);

FirstOrderResponse first_order(const SystemParams& params);

// Case-I probe response of the single Lambda subsystem {g-, e+, g+} with all
// population pumped into g-:
//   -i {i(delta-Delta) - Gamma_gg} /
//      [{i(delta-Delta) - Gamma_gg}(i delta - Gamma) + |G|^2]
Complex lambda_system(const SystemParams& params);

// Closed form of rho'(-1)_{e+g-} at delta = Delta = B'-B (the operation
// enforces both detunings): -(B'-B) / (2 {Gamma^2 + (B'-B)^2 + 2|G|^2}).
// Real, i.e. nonzero dispersion with zero absorption.
Complex two_photon_reduction(const SystemParams& params);

// Detuning where Re(chi_-) crosses zero on the locked delta = Delta line:
// delta0 = {2(B'-B)^2 + Gamma^2} / (B'-B). Throws DegenerateSplittingError
// when B' == B.
double delta_zero(const SystemParams& params);

CardanoRoots cardano_roots(const SystemParams& params);

}  // namespace crosstalk
