#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "crosstalk/model.hpp"
#include "crosstalk/types.hpp"

namespace testutil {

inline crosstalk::SystemParams fig2_params() {
    return crosstalk::SystemParams{};  // defaults are the standard figure set
}

inline double rel_err(crosstalk::Complex a, crosstalk::Complex b) {
    return std::abs(a - b) / std::max(std::abs(a), 1e-300);
}

// Parameter draws over the documented property-test ranges.
struct ParamSampler {
    std::mt19937_64 rng{20260810ull};

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    crosstalk::SystemParams draw() {
        crosstalk::SystemParams p;
        p.B = uniform(0.5, 10.0);
        p.B_prime = uniform(0.5, 10.0);
        p.Delta = uniform(-15.0, 15.0);
        p.delta = uniform(-15.0, 15.0);
        p.G = crosstalk::Complex{uniform(0.1, 5.0), 0.0};
        p.gamma1 = uniform(0.5, 6.0);
        p.gamma2 = uniform(0.5, 6.0);
        return p;
    }

    crosstalk::SystemParams draw_omega12_bounded(double min_abs = 0.01) {
        for (;;) {
            crosstalk::SystemParams p = draw();
            if (std::abs(p.delta - p.Delta + 2.0 * p.B_prime) >= min_abs) return p;
        }
    }

    // Random parameters on the two-photon-resonance line delta = Delta = B'-B.
    crosstalk::SystemParams draw_two_photon_locked() {
        crosstalk::SystemParams p = draw();
        p.delta = p.Delta = p.B_prime - p.B;
        return p;
    }

    crosstalk::DensityMatrix random_density() {
        crosstalk::DensityMatrix a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                a(i, j) = crosstalk::Complex{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
        crosstalk::DensityMatrix rho = a * a.adjoint();
        rho /= rho.trace();
        return rho;
    }
};

}  // namespace testutil
