#pragma once

#include "crosstalk/types.hpp"

namespace crosstalk {

// All physical inputs, in units of gamma. The excited sublevels e+/e- are
// split by 2B, the ground sublevels g+/g- by 2B'. A pi-polarized control
// field of Rabi half-amplitude G drives e+<->g+ and e-<->g-; the sigma-/+
// components of the probe drive e+<->g- and e-<->g+.
struct SystemParams {
    double B = 2.0;        // excited-state half-splitting
    double B_prime = 6.0;  // ground-state half-splitting
    double Delta = 4.0;    // control detuning w2 - w_{e+g+}
    double delta = 4.0;    // probe detuning w1 - w_{e+g-}
    Complex G{0.5, 0.0};   // control Rabi half-amplitude
    double gamma1 = 4.0;   // cross decay rate g+<-e- and g-<-e+
    double gamma2 = 2.0;   // direct decay rate g+<-e+ and g-<-e-
};

struct DerivedRates {
    double Gamma;     // optical coherence dephasing (gamma1+gamma2)/2
    double Gamma_ee;  // excited coherence dephasing gamma1+gamma2
    double Gamma_gg;  // ground coherence dephasing, identically 0
    double omega12;   // probe-control frequency difference delta-Delta+2B'
};

struct SaturationFactors {
    Complex c;  // i*Delta + Gamma
    Complex d;  // -i*(-Delta - 2B + 2B') + Gamma
    double x;   // 2|G|^2 Gamma / |d|^2
    double y;   // 2|G|^2 Gamma / |c|^2
    double Q;   // (x+y)(gamma1+gamma2) + 4xy
};

struct SidebandCoefficients {
    Complex a_plus, a_minus;  // -i w12 +- 2iB  + Gamma_ee
    Complex b_plus, b_minus;  // -i w12 +- 2iB' + Gamma_gg
    Complex p_plus, p_minus;  // -i w12 +- i(Delta+2B)  + Gamma
    Complex q_plus, q_minus;  // -i w12 +- i(-Delta+2B') + Gamma
    Complex M1;  // a+ b+ p+ q+ + |G|^2 (p+ + q+)(a+ + b+)
    Complex M2;  // a- b- p- q- + |G|^2 (p- + q-)(a- + b-)
};

struct Derived {
    DerivedRates rates;
    SaturationFactors sat;
    SidebandCoefficients side;
};

// Throws ParameterError on G == 0, non-positive decay rates, or non-finite
// fields. G == 0 is rejected rather than special-cased: the control-only
// steady state is not unique there and x, y, Q degenerate to 0/0.
void validate(const SystemParams& params);

Derived derive(const SystemParams& params);

}  // namespace crosstalk
