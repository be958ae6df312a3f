#include "crosstalk/analytic.hpp"

#include <cmath>

namespace crosstalk {

namespace {
constexpr Complex I{0.0, 1.0};
constexpr double kSingularTol = 1e-14;  // on |M1|, |M2| in gamma^4 units
}  // namespace

ZerothOrderState zeroth_order(const SystemParams& p) {
    const Derived dv = derive(p);
    const auto& s = dv.sat;
    const double g12 = p.gamma1 + p.gamma2;

    ZerothOrderState z;
    z.pop_e_plus = s.x * s.y / s.Q;
    z.pop_e_minus = s.x * s.y / s.Q;
    z.pop_g_minus = s.y * (g12 + s.x) / s.Q;
    z.pop_g_plus = s.x * (g12 + s.y) / s.Q;
    z.coh_g_plus_e_plus = -I * s.x * std::conj(p.G) * g12 / (s.c * s.Q);
    z.coh_g_minus_e_minus = -I * s.y * std::conj(p.G) * g12 / (s.d * s.Q);
    return z;
}

FirstOrderResponse first_order(const SystemParams& p) {
    const Derived dv = derive(p);
    const auto& k = dv.side;
    if (std::abs(k.M1) < kSingularTol)
        throw SingularDenominatorError("first_order: |M1| below tolerance");
    if (std::abs(k.M2) < kSingularTol)
        throw SingularDenominatorError("first_order: |M2| below tolerance");

    const ZerothOrderState z = zeroth_order(p);
    const double G2 = std::norm(p.G);

    ResponseTerms t;
    t.coh_pp = p.G * k.a_plus * k.p_plus * z.coh_g_plus_e_plus / k.M1;
    t.coh_mm = p.G * k.b_plus * k.p_plus * z.coh_g_minus_e_minus / k.M1;
    t.pop = I * (k.a_plus * k.b_plus * k.p_plus + G2 * (k.a_plus + k.b_plus)) *
            (z.pop_g_minus - z.pop_e_plus) / k.M1;

    FirstOrderResponse r;
    r.rho_ep_gm = t.coh_pp + t.coh_mm + t.pop;
    r.rho_em_gp = (p.G * k.b_minus * k.q_minus * z.coh_g_plus_e_plus +
                   p.G * k.a_minus * k.q_minus * z.coh_g_minus_e_minus +
                   I * (k.a_minus * k.b_minus * k.q_minus + G2 * (k.a_minus + k.b_minus)) *
                       (z.pop_g_plus - z.pop_e_minus)) /
                  k.M2;
    r.terms = t;
    return r;
}

Complex lambda_system(const SystemParams& p) {
    const Derived dv = derive(p);
    const Complex raman = I * (p.delta - p.Delta) - dv.rates.Gamma_gg;
    const Complex den = raman * (I * p.delta - dv.rates.Gamma) + std::norm(p.G);
    if (std::abs(den) < kSingularTol)
        throw SingularDenominatorError("lambda_system: denominator below tolerance");
    return -I * raman / den;
}

Complex two_photon_reduction(const SystemParams& p) {
    SystemParams q = p;
    q.delta = q.Delta = p.B_prime - p.B;  // enforced two-photon resonance
    const Derived dv = derive(q);
    const double w = q.B_prime - q.B;
    const double Gamma = dv.rates.Gamma;
    return Complex{-w / (2.0 * (Gamma * Gamma + w * w + 2.0 * std::norm(q.G))), 0.0};
}

double delta_zero(const SystemParams& p) {
    const Derived dv = derive(p);
    const double w = p.B_prime - p.B;
    if (w == 0.0)
        throw DegenerateSplittingError("delta_zero: B' == B (isotropic medium, no crossing)");
    const double Gamma = dv.rates.Gamma;
    return (2.0 * w * w + Gamma * Gamma) / w;
}

CardanoRoots cardano_roots(const SystemParams& p) {
    const Derived dv = derive(p);
    const double Ggg = dv.rates.Gamma_gg;
    const double G2 = std::norm(p.G);
    const double D = p.Delta;

    CardanoRoots out;
    out.a1 = Ggg * Ggg - G2;
    out.a0 = D * Ggg * Ggg;
    out.Qc = (3.0 * out.a1 - D * D) / 9.0;
    out.Rc = (9.0 * D * out.a1 - 27.0 * out.a0 - 2.0 * D * D * D) / 54.0;

    const Complex disc = Complex{out.Qc * out.Qc * out.Qc + out.Rc * out.Rc, 0.0};
    const Complex s = std::sqrt(disc);
    const Complex u = std::pow(Complex{out.Rc, 0.0} + s, 1.0 / 3.0);
    // Pair the second branch so that u*v = -Qc; fall back to the direct cube
    // root when u vanishes (then Qc = 0 as well).
    const Complex v = std::abs(u) > 1e-100 ? -out.Qc / u
                                           : std::pow(Complex{out.Rc, 0.0} - s, 1.0 / 3.0);
    out.A_plus = u + v;
    out.A_minus = u - v;

    const double half_sqrt3 = 0.5 * std::sqrt(3.0);
    out.roots[0] = -D / 3.0 + out.A_plus;
    out.roots[1] = -D / 3.0 - 0.5 * out.A_plus + I * half_sqrt3 * out.A_minus;
    out.roots[2] = -D / 3.0 - 0.5 * out.A_plus - I * half_sqrt3 * out.A_minus;

    const auto f = [&](Complex r) { return ((r + D) * r + out.a1) * r + out.a0; };
    const auto fp = [&](Complex r) { return (3.0 * r + 2.0 * D) * r + out.a1; };
    for (auto& r : out.roots)
        for (int it = 0; it < 3; ++it) {
            const Complex slope = fp(r);
            if (std::abs(slope) < 1e-300) break;
            r -= f(r) / slope;
        }

    const double scale = std::max({1.0, std::abs(D), std::sqrt(std::abs(out.a1))});
    for (const auto& r : out.roots)
        if (std::abs(f(r)) > 1e-9 * scale * scale * scale)
            throw EngineError("cardano_roots: substitution residual above tolerance");
    return out;
}

}  // namespace crosstalk
