#include "crosstalk/model.hpp"

#include <cmath>

namespace crosstalk {

namespace {
bool finite(double v) { return std::isfinite(v); }
}  // namespace

void validate(const SystemParams& p) {
    if (!finite(p.B) || !finite(p.B_prime) || !finite(p.Delta) || !finite(p.delta) ||
        !finite(p.G.real()) || !finite(p.G.imag()) || !finite(p.gamma1) || !finite(p.gamma2))
        throw ParameterError("system parameters must be finite");
    if (!(p.gamma1 > 0.0)) throw ParameterError("gamma1 must be > 0");
    if (!(p.gamma2 > 0.0)) throw ParameterError("gamma2 must be > 0");
    if (!(std::abs(p.G) > 0.0))
        throw ParameterError("G must be nonzero: the control-only steady state is not unique at G = 0");
}

Derived derive(const SystemParams& p) {
    validate(p);
    constexpr Complex I{0.0, 1.0};

    Derived out;
    auto& r = out.rates;
    r.Gamma = 0.5 * (p.gamma1 + p.gamma2);
    r.Gamma_ee = p.gamma1 + p.gamma2;
    r.Gamma_gg = 0.0;
    r.omega12 = p.delta - p.Delta + 2.0 * p.B_prime;

    auto& s = out.sat;
    s.c = I * p.Delta + r.Gamma;
    s.d = -I * (-p.Delta - 2.0 * p.B + 2.0 * p.B_prime) + r.Gamma;
    const double G2 = std::norm(p.G);
    s.x = 2.0 * G2 * r.Gamma / std::norm(s.d);
    s.y = 2.0 * G2 * r.Gamma / std::norm(s.c);
    s.Q = (s.x + s.y) * (p.gamma1 + p.gamma2) + 4.0 * s.x * s.y;

    auto& k = out.side;
    const double w = r.omega12;
    k.a_plus = -I * w + 2.0 * I * p.B + r.Gamma_ee;
    k.a_minus = -I * w - 2.0 * I * p.B + r.Gamma_ee;
    k.b_plus = -I * w + 2.0 * I * p.B_prime + r.Gamma_gg;
    k.b_minus = -I * w - 2.0 * I * p.B_prime + r.Gamma_gg;
    k.p_plus = -I * w + I * (p.Delta + 2.0 * p.B) + r.Gamma;
    k.p_minus = -I * w - I * (p.Delta + 2.0 * p.B) + r.Gamma;
    k.q_plus = -I * w + I * (-p.Delta + 2.0 * p.B_prime) + r.Gamma;
    k.q_minus = -I * w - I * (-p.Delta + 2.0 * p.B_prime) + r.Gamma;
    k.M1 = k.a_plus * k.b_plus * k.p_plus * k.q_plus +
           G2 * (k.p_plus + k.q_plus) * (k.a_plus + k.b_plus);
    k.M2 = k.a_minus * k.b_minus * k.p_minus * k.q_minus +
           G2 * (k.p_minus + k.q_minus) * (k.a_minus + k.b_minus);
    return out;
}

}  // namespace crosstalk
