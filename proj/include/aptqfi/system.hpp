#pragma once

#include <complex>
#include <stdexcept>

namespace aptqfi {

using Complex = std::complex<double>;

/// Physical rates and perturbations of the dissipatively coupled two-mode
/// system. All rates are expressed in units of the collective rate
/// (gamma_collective = 1 by default); hbar = 1 throughout.
struct SystemParams {
    double delta = 0.0;             ///< frequency detuning of mode a (mode b carries -delta)
    double kappa = 0.0;             ///< intrinsic damping of each mode, >= 0
    double gamma_collective = 1.0;  ///< collective (shared-reservoir) rate, > 0
    Complex drive = {1.0, 0.0};     ///< Rabi amplitude of the laser driving mode a
    double mismatch_s = 0.0;        ///< detuning mismatch: diagonals become (0, -s)
    double dispersive_g = 0.0;      ///< coherent coupling: off-diagonals become g - i*Gamma

    /// Total damping per mode. Always >= gamma_collective since kappa >= 0.
    double gamma_total() const { return kappa + gamma_collective; }

    /// Dimensionless excess damping xi = (gamma - Gamma)/Gamma = kappa/Gamma.
    double xi() const { return kappa / gamma_collective; }

    /// The paper's perturbation scenarios use one of (s, g) at a time; the
    /// combined case is accepted but closed forms no longer apply.
    bool has_combined_perturbations() const {
        return mismatch_s != 0.0 && dispersive_g != 0.0;
    }

    void validate() const {
        if (kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
        if (gamma_collective <= 0.0)
            throw std::invalid_argument("gamma_collective must be > 0");
    }
};

}  // namespace aptqfi
