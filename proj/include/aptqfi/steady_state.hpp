#pragma once

#include "aptqfi/hamiltonian.hpp"
#include "aptqfi/system.hpp"

namespace aptqfi {

/// Long-time field amplitudes of the two modes.
struct ModeAmplitudes {
    Complex alpha0;  ///< mode a
    Complex beta0;   ///< mode b
};

/// Relative determinant floor below which the response is treated as
/// singular: |det H| < kSingularTol * Gamma^2.
inline constexpr double kSingularTol = 1e-12;

/// Steady state (alpha0, beta0) = -i H^{-1} (E, 0)^T by adjugate inversion.
///
/// det_scale should be Gamma^2 for the standard unit convention; the
/// singularity threshold is kSingularTol * det_scale.
///
/// Throws Unstable when the matrix has a non-decaying eigenvalue (the formal
/// inverse exists but no steady state does) and SingularResponse when
/// |det H| is below threshold.
ModeAmplitudes steady_state_solve(const EffectiveHamiltonian& H, Complex drive,
                                  double det_scale = 1.0);

/// Convenience overload: builds the mode matrix from params and scales the
/// singularity threshold by gamma_collective^2.
ModeAmplitudes steady_state_solve(const SystemParams& params);

/// Unperturbed closed form:
///   alpha0 = -(gamma - i*delta) E / (Gamma^2 - delta^2 - gamma^2)
///   beta0  =              Gamma E / (Gamma^2 - delta^2 - gamma^2)
/// Requires s = g = 0.
ModeAmplitudes closed_form_base(const SystemParams& params);

/// Detuning-mismatch closed form:
///   alpha0 = -(gamma - i*s) E / (Gamma^2 + i*s*gamma - gamma^2)
///   beta0  =           Gamma E / (Gamma^2 + i*s*gamma - gamma^2)
/// Requires g = 0.
ModeAmplitudes closed_form_mismatch(const SystemParams& params);

/// Dispersive-coupling closed form: the base expressions with
/// Gamma -> Gamma + i*g. Requires s = 0.
ModeAmplitudes closed_form_dispersive(const SystemParams& params);

}  // namespace aptqfi
