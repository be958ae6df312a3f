#include "crosstalk/bloch.hpp"

#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace crosstalk {

namespace {

constexpr Complex I{0.0, 1.0};
constexpr int EP = level_e_plus;
constexpr int EM = level_e_minus;
constexpr int GP = level_g_plus;
constexpr int GM = level_g_minus;

enum Block : int { kL0 = 0, kVm, kVp, kVmC, kVpC };

struct Builder {
    Matrix16* blocks[5];

    // Adds coeff * rho_{src} to the equation of motion of rho_{tgt}, plus the
    // hermitian-conjugate equation for off-diagonal targets. Conjugation maps
    // the e^{-i w12 t} probe blocks onto their e^{+i w12 t} partners.
    void add(Block blk, std::pair<int, int> tgt, Complex coeff, std::pair<int, int> src) {
        static constexpr Block conj_of[5] = {kL0, kVmC, kVpC, kVm, kVp};
        (*blocks[blk])(vec_index(tgt.first, tgt.second), vec_index(src.first, src.second)) += coeff;
        if (tgt.first != tgt.second)
            (*blocks[conj_of[blk]])(vec_index(tgt.second, tgt.first),
                                    vec_index(src.second, src.first)) += std::conj(coeff);
    }
};

}  // namespace

LiouvillianBlocks assemble(const SystemParams& p) {
    const Derived dv = derive(p);
    const double Gam = dv.rates.Gamma;
    const double Gee = dv.rates.Gamma_ee;
    const double Ggg = dv.rates.Gamma_gg;
    const double B = p.B, Bp = p.B_prime, D = p.Delta;
    const double g1 = p.gamma1, g2 = p.gamma2;
    const Complex G = p.G, Gc = std::conj(p.G);

    LiouvillianBlocks out;
    out.L0.setZero();
    out.V_minus.setZero();
    out.V_plus.setZero();
    out.V_minus_conj.setZero();
    out.V_plus_conj.setZero();
    Builder b{{&out.L0, &out.V_minus, &out.V_plus, &out.V_minus_conj, &out.V_plus_conj}};

    // rho_{e+g-}
    b.add(kL0, {EP, GM}, -(I * (-D + 2 * Bp) + Gam), {EP, GM});
    b.add(kL0, {EP, GM}, I * G, {GP, GM});
    b.add(kL0, {EP, GM}, -I * G, {EP, EM});
    b.add(kVm, {EP, GM}, I, {GM, GM});
    b.add(kVm, {EP, GM}, -I, {EP, EP});
    // rho_{e-g+}
    b.add(kL0, {EM, GP}, -(I * (-D - 2 * B) + Gam), {EM, GP});
    b.add(kL0, {EM, GP}, I * G, {GM, GP});
    b.add(kL0, {EM, GP}, -I * G, {EM, EP});
    b.add(kVp, {EM, GP}, I, {GP, GP});
    b.add(kVp, {EM, GP}, -I, {EM, EM});
    // rho_{e+g+}
    b.add(kL0, {EP, GP}, -(-I * D + Gam), {EP, GP});
    b.add(kL0, {EP, GP}, I * G, {GP, GP});
    b.add(kL0, {EP, GP}, -I * G, {EP, EP});
    b.add(kVm, {EP, GP}, I, {GM, GP});
    b.add(kVp, {EP, GP}, -I, {EP, EM});
    // rho_{e-g-}
    b.add(kL0, {EM, GM}, -(I * (-D - 2 * B + 2 * Bp) + Gam), {EM, GM});
    b.add(kL0, {EM, GM}, I * G, {GM, GM});
    b.add(kL0, {EM, GM}, -I * G, {EM, EM});
    b.add(kVp, {EM, GM}, I, {GP, GM});
    b.add(kVm, {EM, GM}, -I, {EM, EP});
    // rho_{g+g-}
    b.add(kL0, {GP, GM}, -(2.0 * I * Bp + Ggg), {GP, GM});
    b.add(kL0, {GP, GM}, I * Gc, {EP, GM});
    b.add(kL0, {GP, GM}, -I * G, {GP, EM});
    b.add(kVpC, {GP, GM}, I, {EM, GM});
    b.add(kVm, {GP, GM}, -I, {GP, EP});
    // rho_{e+e-}
    b.add(kL0, {EP, EM}, -(2.0 * I * B + Gee), {EP, EM});
    b.add(kL0, {EP, EM}, -I * Gc, {EP, GM});
    b.add(kL0, {EP, EM}, I * G, {GP, EM});
    b.add(kVpC, {EP, EM}, -I, {EP, GP});
    b.add(kVm, {EP, EM}, I, {GM, EM});
    // rho_{g-g-}
    b.add(kL0, {GM, GM}, Complex{g2, 0.0}, {EM, EM});
    b.add(kL0, {GM, GM}, Complex{g1, 0.0}, {EP, EP});
    b.add(kL0, {GM, GM}, I * Gc, {EM, GM});
    b.add(kL0, {GM, GM}, -I * G, {GM, EM});
    b.add(kVmC, {GM, GM}, I, {EP, GM});
    b.add(kVm, {GM, GM}, -I, {GM, EP});
    // rho_{e-e-}
    b.add(kL0, {EM, EM}, Complex{-(g1 + g2), 0.0}, {EM, EM});
    b.add(kL0, {EM, EM}, I * G, {GM, EM});
    b.add(kL0, {EM, EM}, -I * Gc, {EM, GM});
    b.add(kVp, {EM, EM}, I, {GP, EM});
    b.add(kVpC, {EM, EM}, -I, {EM, GP});
    // rho_{e+e+}
    b.add(kL0, {EP, EP}, Complex{-(g1 + g2), 0.0}, {EP, EP});
    b.add(kL0, {EP, EP}, I * G, {GP, EP});
    b.add(kL0, {EP, EP}, -I * Gc, {EP, GP});
    b.add(kVm, {EP, EP}, I, {GM, EP});
    b.add(kVmC, {EP, EP}, -I, {EP, GM});

    // trace relation closes the g+g+ row
    for (Matrix16* m : {&out.L0, &out.V_minus, &out.V_plus, &out.V_minus_conj, &out.V_plus_conj})
        m->row(vec_index(GP, GP)) =
            -(m->row(vec_index(EP, EP)) + m->row(vec_index(EM, EM)) + m->row(vec_index(GM, GM)));
    return out;
}

DensityMatrix evaluate_derivative(const LiouvillianBlocks& blocks, const SystemParams& p,
                                  Complex g_minus, Complex g_plus, double t,
                                  const DensityMatrix& rho) {
    const double w12 = derive(p).rates.omega12;
    const Complex down = std::polar(1.0, -w12 * t);
    const Complex up = std::conj(down);
    const Vector16 v = vec(rho);
    Vector16 dv = blocks.L0 * v;
    dv += (g_minus * down) * (blocks.V_minus * v);
    dv += (g_plus * down) * (blocks.V_plus * v);
    dv += (std::conj(g_minus) * up) * (blocks.V_minus_conj * v);
    dv += (std::conj(g_plus) * up) * (blocks.V_plus_conj * v);
    return unvec(dv);
}

DensityMatrix steady_state_zeroth(const SystemParams& p) {
    const LiouvillianBlocks blocks = assemble(p);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(blocks.L0, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(14) < 1e-8 * sv(0))
        throw DegenerateSteadyStateError(
            "steady_state_zeroth: null space dimension > 1 (singular-value gap collapsed)");
    Vector16 null_vec = svd.matrixV().col(15);
    DensityMatrix rho = unvec(null_vec);
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-12)
        throw DegenerateSteadyStateError("steady_state_zeroth: traceless null vector");
    rho /= tr;
    return rho;
}

FirstOrderResponse sideband_response(const SystemParams& p) {
    const Derived dv = derive(p);
    const double w12 = dv.rates.omega12;
    if (std::abs(w12) < 1e-12)
        throw ResonantDegeneracyError(
            "sideband_response: omega12 == 0, sidebands merge with the DC harmonic");

    const LiouvillianBlocks blocks = assemble(p);
    const DensityMatrix rho0 = steady_state_zeroth(p);
    const Vector16 r0 = vec(rho0);

    Matrix16 shifted = blocks.L0;
    shifted.diagonal().array() += I * w12;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(shifted);
    if (!lu.isInvertible())
        throw SingularDenominatorError("sideband_response: shifted system singular");

    const Vector16 drive_m = blocks.V_minus * r0;
    const Vector16 drive_p = blocks.V_plus * r0;

    FirstOrderResponse resp;
    resp.rho_ep_gm = Complex{lu.solve(Eigen::VectorXcd(-drive_m))(vec_index(EP, GM))};
    resp.rho_em_gp = Complex{lu.solve(Eigen::VectorXcd(-drive_p))(vec_index(EM, GP))};

    const auto solve_row = [&](int row) {
        Eigen::VectorXcd masked = Eigen::VectorXcd::Zero(16);
        masked(row) = -drive_m(row);
        return Complex{lu.solve(masked)(vec_index(EP, GM))};
    };
    ResponseTerms terms;
    terms.coh_pp = solve_row(vec_index(GP, GM));
    terms.coh_mm = solve_row(vec_index(EP, EM));
    terms.pop = solve_row(vec_index(EP, GM));
    resp.terms = terms;
    return resp;
}

}  // namespace crosstalk
