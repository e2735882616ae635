#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "aptqfi/system.hpp"

namespace aptqfi {

using Matrix2c = Eigen::Matrix2cd;

/// 2x2 non-Hermitian mode matrix of the coupled-mode equations,
/// d/dt (a, b)^T = -i H (a, b)^T + (E, 0)^T, in angular-frequency units.
struct EffectiveHamiltonian {
    Matrix2c entries;

    Complex trace() const { return entries.trace(); }
    Complex determinant() const { return entries.determinant(); }
};

enum class Phase { Unbroken, Broken, ExceptionalPoint };

/// Spectrum of the mode matrix plus its symmetry-phase classification.
struct SpectralInfo {
    std::pair<Complex, Complex> eigenvalues;
    Phase phase = Phase::Unbroken;
    double splitting = 0.0;  ///< |lambda_+ - lambda_-|
};

/// Assembles the mode matrix for the given parameters.
///
/// Base case: [[delta - i*gamma, -i*Gamma], [-i*Gamma, -delta - i*gamma]]
/// with gamma = kappa + Gamma. A nonzero mismatch s replaces the (delta,
/// -delta) diagonal pair by (0, -s); a nonzero dispersive coupling g turns
/// the off-diagonals into g - i*Gamma.
EffectiveHamiltonian build_hamiltonian(const SystemParams& params);

/// Closed-form eigenvalues of the 2x2 matrix and phase classification.
///
/// The quadratic discriminant (tr/2)^2 - det equals delta^2 - Gamma^2 for the
/// unperturbed matrix. ExceptionalPoint when |disc| < ep_tol * |H12*H21|
/// (i.e. ep_tol relative to Gamma^2 in the standard form); otherwise Unbroken
/// when the splitting is predominantly real, Broken when imaginary.
SpectralInfo spectrum(const EffectiveHamiltonian& H, double ep_tol = 1e-10);

/// True iff sigma_x H* sigma_x = -H holds entrywise within tol, the
/// anticommutation {PT, H} = 0 of the anti-PT condition.
bool check_anti_pt(const EffectiveHamiltonian& H, double tol = 1e-12);

/// True iff both eigenvalues have strictly negative imaginary part, so every
/// homogeneous solution decays and a steady state exists.
bool is_dynamically_stable(const EffectiveHamiltonian& H);

}  // namespace aptqfi
