#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "aptqfi/fock.hpp"
#include "aptqfi/system.hpp"

namespace aptqfi {

/// Sampled solution of the 2x2 mean-value ODE
/// d/dt (<a>, <b>)^T = -i H (<a>, <b>)^T + (E, 0)^T from the vacuum.
struct MeanTrajectory {
    std::vector<double> times;                        ///< units 1/Gamma
    std::vector<std::pair<Complex, Complex>> means;   ///< (<a>(t), <b>(t))
};

/// Called after every accepted integrator step.
using StepObserver = std::function<void(double t, const FockDensityMatrix& rho)>;

/// Integrates the zero-temperature master equation
///   d rho/dt = -i [H_c, rho] + kappa D(a) rho + kappa D(b) rho + 2 Gamma D(c) rho,
/// with D(o) rho = 2 o rho o^dag - o^dag o rho - rho o^dag o and
/// c = (a + b)/sqrt(2), in the truncated Fock space of rho0. The coherent
/// part H_c carries the detunings (or the mismatch/dispersive replacements)
/// and the drive i(E a^dag - E^* a); the anti-Hermitian part of the mode
/// matrix emerges from the dissipators.
///
/// Dormand-Prince 5(4) with PI step control; local error <= tol per step.
/// The generator is applied through operator products, never as a dense
/// superoperator. Throws TruncationTooSmall when the population in the top
/// two Fock levels of either mode exceeds 1e-8, StepFailure when the
/// controller stalls.
FockDensityMatrix evolve_master_equation(const FockDensityMatrix& rho0,
                                         const SystemParams& params, double t_end,
                                         double tol = 1e-10,
                                         const StepObserver& observer = {});

/// Samples the mean-value ODE at `steps` equispaced times spanning [0, t_end],
/// propagated by the exact matrix exponential of the augmented system (well
/// defined even at singular or unstable parameters).
MeanTrajectory evolve_means(const SystemParams& params, double t_end, int steps);

/// Time horizon after which the steady state is converged to tol_ss,
/// ln(1/tol_ss)/(gamma - Gamma); kappa is the slowest relaxation rate.
double default_t_end(const SystemParams& params, double tol_ss = 1e-10);

/// (tr(rho a), tr(rho b)).
std::pair<Complex, Complex> mode_means(const FockDensityMatrix& rho);

/// <alpha, beta| rho |alpha, beta> against the renormalized truncated
/// coherent vector; 1 for rho = |alpha, beta><alpha, beta|.
double fidelity_with_coherent(const FockDensityMatrix& rho, Complex alpha,
                              Complex beta);

/// max(||(a - alpha) rho||_F, ||(b - beta) rho||_F); zero exactly when rho
/// is the coherent steady state with those amplitudes.
double annihilation_residual(const FockDensityMatrix& rho, Complex alpha,
                             Complex beta);

/// Husimi Q(mu, nu) = <mu, nu| rho |mu, nu> / pi^2, evaluated with the raw
/// (non-renormalized) truncated probe so that the full-plane integral is
/// exactly tr(rho) = 1.
double husimi_q(const FockDensityMatrix& rho, Complex mu, Complex nu);

}  // namespace aptqfi
