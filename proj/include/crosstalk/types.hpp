#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace crosstalk {

using Complex = std::complex<double>;
using DensityMatrix = Eigen::Matrix4cd;
using Vector16 = Eigen::Vector<Complex, 16>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

// Basis order used everywhere, including the 16-component vectorization.
enum Level : int {
    level_e_plus = 0,
    level_e_minus = 1,
    level_g_plus = 2,
    level_g_minus = 3,
};

// Row-major vectorization over (e+, e-, g+, g-) x (e+, e-, g+, g-).
constexpr int vec_index(int row, int col) { return 4 * row + col; }

inline Vector16 vec(const DensityMatrix& rho) {
    Vector16 v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[vec_index(i, j)] = rho(i, j);
    return v;
}

inline DensityMatrix unvec(const Vector16& v) {
    DensityMatrix rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = v[vec_index(i, j)];
    return rho;
}

inline double hermiticity_defect(const DensityMatrix& rho) {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

// Smallest eigenvalue of the hermitian part of rho.
inline double min_eigenvalue(const DensityMatrix& rho) {
    DensityMatrix h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(h);
    return es.eigenvalues().minCoeff();
}

// Invalid physical inputs (decay rates, Rabi amplitude, scan ranges, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for runtime failures inside an engine.
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// |M1| or |M2| (or a closed-form denominator) below tolerance.
class SingularDenominatorError : public EngineError {
public:
    using EngineError::EngineError;
};

// Control-only generator has a null space of dimension > 1.
class DegenerateSteadyStateError : public EngineError {
public:
    using EngineError::EngineError;
};

// omega12 == 0: the sidebands merge with the DC harmonic.
class ResonantDegeneracyError : public EngineError {
public:
    using EngineError::EngineError;
};

// delta_zero at B' == B.
class DegenerateSplittingError : public EngineError {
public:
    using EngineError::EngineError;
};

// Demodulation window estimates disagree, or trace drift during integration.
class NonConvergenceError : public EngineError {
public:
    using EngineError::EngineError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crosstalk
