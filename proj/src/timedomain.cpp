#include "crosstalk/timedomain.hpp"

#include <cmath>
#include <ostream>

#include "crosstalk/io.hpp"

namespace crosstalk {

namespace {
constexpr Complex I{0.0, 1.0};
constexpr int EP = level_e_plus;
constexpr int EM = level_e_minus;
constexpr int GP = level_g_plus;
constexpr int GM = level_g_minus;
}  // namespace

IntegrationConfig IntegrationConfig::defaults_for(const SystemParams& params) {
    IntegrationConfig cfg;
    const double max_rate = std::max(params.gamma1, params.gamma2);
    cfg.dt = std::min(cfg.dt, 0.009 / max_rate);
    return cfg;
}

DensityMatrix time_derivative(const SystemParams& p, Complex g_minus, Complex g_plus, double t,
                              const DensityMatrix& r) {
    const Derived dv = derive(p);
    const double Gam = dv.rates.Gamma;
    const double Gee = dv.rates.Gamma_ee;
    const double Ggg = dv.rates.Gamma_gg;
    const double B = p.B, Bp = p.B_prime, D = p.Delta;
    const double g1 = p.gamma1, g2 = p.gamma2;
    const Complex G = p.G, Gc = std::conj(p.G);
    const Complex down = std::polar(1.0, -dv.rates.omega12 * t);
    const Complex gm = g_minus * down, gp = g_plus * down;
    const Complex gmc = std::conj(gm), gpc = std::conj(gp);

    DensityMatrix d;
    d(EP, GM) = -(I * (-D + 2 * Bp) + Gam) * r(EP, GM) +
                I * (gm * (r(GM, GM) - r(EP, EP)) + G * r(GP, GM) - G * r(EP, EM));
    d(EM, GP) = -(I * (-D - 2 * B) + Gam) * r(EM, GP) +
                I * (gp * (r(GP, GP) - r(EM, EM)) + G * r(GM, GP) - G * r(EM, EP));
    d(EP, GP) = -(-I * D + Gam) * r(EP, GP) +
                I * (G * (r(GP, GP) - r(EP, EP)) + gm * r(GM, GP) - gp * r(EP, EM));
    d(EM, GM) = -(I * (-D - 2 * B + 2 * Bp) + Gam) * r(EM, GM) +
                I * (gp * r(GP, GM) - gm * r(EM, EP) + G * (r(GM, GM) - r(EM, EM)));
    d(GP, GM) = -(2.0 * I * Bp + Ggg) * r(GP, GM) +
                I * (Gc * r(EP, GM) - G * r(GP, EM) + gpc * r(EM, GM) - gm * r(GP, EP));
    d(EP, EM) = -(2.0 * I * B + Gee) * r(EP, EM) -
                I * (Gc * r(EP, GM) - G * r(GP, EM) + gpc * r(EP, GP) - gm * r(GM, EM));
    const Complex pump_gm = gmc * r(EP, GM) + Gc * r(EM, GM);
    const Complex pump_em = gp * r(GP, EM) + G * r(GM, EM);
    const Complex pump_ep = gm * r(GM, EP) + G * r(GP, EP);
    d(GM, GM) = g2 * r(EM, EM) + g1 * r(EP, EP) + I * pump_gm - I * std::conj(pump_gm);
    d(EM, EM) = -(g1 + g2) * r(EM, EM) + I * pump_em - I * std::conj(pump_em);
    d(EP, EP) = -(g1 + g2) * r(EP, EP) + I * pump_ep - I * std::conj(pump_ep);
    d(GP, GP) = -(d(EP, EP) + d(EM, EM) + d(GM, GM));
    d(GM, EP) = std::conj(d(EP, GM));
    d(GP, EM) = std::conj(d(EM, GP));
    d(GP, EP) = std::conj(d(EP, GP));
    d(GM, EM) = std::conj(d(EM, GM));
    d(GM, GP) = std::conj(d(GP, GM));
    d(EM, EP) = std::conj(d(EP, EM));
    return d;
}

Trajectory integrate(const SystemParams& p, const IntegrationConfig& cfg) {
    const Derived dv = derive(p);
    const double w12 = dv.rates.omega12;
    if (std::abs(w12) < 1e-12)
        throw ResonantDegeneracyError("integrate: omega12 == 0, sideband ansatz undefined");
    if (!(cfg.probe_amplitude >= 0.0) || !std::isfinite(cfg.probe_amplitude))
        throw ParameterError("integrate: probe_amplitude must be >= 0");
    if (!(cfg.t_end > 0.0) || !(cfg.dt > 0.0))
        throw ParameterError("integrate: t_end and dt must be > 0");
    if (!(cfg.dt < 0.01 / std::max(p.gamma1, p.gamma2)))
        throw ParameterError("integrate: dt must be < 0.01 / max decay rate");
    if (!(cfg.demod_window > 0.0) || !(cfg.demod_window <= 1.0))
        throw ParameterError("integrate: demod_window must be in (0, 1]");

    const double period = 2.0 * M_PI / std::abs(w12);
    // Snap dt so the sample grid aligns with whole demodulation periods; a
    // multiple of 8 steps per period keeps 8 stored samples per period after
    // striding, which makes the discrete harmonic projections exact.
    long m = static_cast<long>(std::ceil(period / cfg.dt));
    m += (8 - m % 8) % 8;
    const double dt = period / static_cast<double>(m);
    const long stride = m / 8;
    const long nsteps = static_cast<long>(std::ceil(cfg.t_end / dt));

    Trajectory traj;
    traj.dt = dt;
    traj.steps_per_period = static_cast<int>(m);
    traj.store_stride = static_cast<int>(stride);
    traj.samples_per_period = 8;
    traj.t.reserve(static_cast<size_t>(nsteps / stride) + 1);
    traj.rho.reserve(static_cast<size_t>(nsteps / stride) + 1);

    const Complex eps{cfg.probe_amplitude, 0.0};
    DensityMatrix rho = DensityMatrix::Zero();
    rho(GM, GM) = 1.0;
    for (long n = 0; n < nsteps; ++n) {
        const double t = static_cast<double>(n) * dt;
        const DensityMatrix k1 = time_derivative(p, eps, eps, t, rho);
        const DensityMatrix k2 = time_derivative(p, eps, eps, t + 0.5 * dt,
                                                 DensityMatrix(rho + (0.5 * dt) * k1));
        const DensityMatrix k3 = time_derivative(p, eps, eps, t + 0.5 * dt,
                                                 DensityMatrix(rho + (0.5 * dt) * k2));
        const DensityMatrix k4 =
            time_derivative(p, eps, eps, t + dt, DensityMatrix(rho + dt * k3));
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((n + 1) % stride == 0) {
            const double ts = static_cast<double>(n + 1) * dt;
            if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-7)
                throw NonConvergenceError("integrate: trace drift exceeds 1e-7, step rejected");
            traj.t.push_back(ts);
            traj.rho.push_back(rho);
        }
    }
    return traj;
}

namespace {

Complex project_window(const Trajectory& traj, double w12, int row, int col, size_t begin,
                       size_t count) {
    Complex acc{0.0, 0.0};
    for (size_t k = begin; k < begin + count; ++k)
        acc += traj.rho[k](row, col) * std::polar(1.0, w12 * traj.t[k]);
    return acc / static_cast<double>(count);
}

}  // namespace

FirstOrderResponse demodulate(const Trajectory& traj, const SystemParams& p,
                              const IntegrationConfig& cfg) {
    if (!(cfg.probe_amplitude > 0.0))
        throw ParameterError("demodulate: probe_amplitude must be > 0");
    const double w12 = derive(p).rates.omega12;
    const int spp = traj.samples_per_period;
    const size_t total = traj.rho.size();
    const size_t target = static_cast<size_t>(cfg.demod_window * static_cast<double>(total));
    const size_t periods = target / static_cast<size_t>(spp);
    if (periods < 2)
        throw NonConvergenceError("demodulate: window shorter than two demodulation periods");
    const size_t count = periods * static_cast<size_t>(spp);
    const size_t begin = total - count;

    const double eps = cfg.probe_amplitude;
    FirstOrderResponse resp;
    resp.rho_ep_gm = project_window(traj, w12, EP, GM, begin, count) / eps;
    resp.rho_em_gp = project_window(traj, w12, EM, GP, begin, count) / eps;

    // Two half-window estimates must agree to the claimed tolerance, else the
    // transients have not decayed.
    const size_t half_periods = periods / 2;
    const size_t half = half_periods * static_cast<size_t>(spp);
    const Complex first = project_window(traj, w12, EP, GM, begin, half) / eps;
    const Complex second = project_window(traj, w12, EP, GM, begin + half, half) / eps;
    const double tol = std::max(1e-3, 10.0 * eps);
    const double scale = std::max(std::abs(resp.rho_ep_gm), 1e-3);
    if (std::abs(first - second) > tol * scale)
        throw NonConvergenceError(
            "demodulate: half-window estimates disagree beyond tolerance (transients not decayed)");
    return resp;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    out << "t";
    const char* names[4] = {"ep", "em", "gp", "gm"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out << ",re_" << names[i] << names[j] << ",im_" << names[i] << names[j];
    out << "\n";
    for (size_t k = 0; k < traj.t.size(); ++k) {
        out << format9(traj.t[k]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                out << "," << format9(traj.rho[k](i, j).real()) << ","
                    << format9(traj.rho[k](i, j).imag());
        out << "\n";
    }
}

}  // namespace crosstalk
