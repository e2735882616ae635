#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aptqfi/fock.hpp"
#include "aptqfi/sensitivity.hpp"

namespace aptqfi {

/// Quantum Fisher information and the Cramer-Rao bound it implies.
struct QfiReport {
    double fisher_info = 0.0;  ///< F_Q >= 0, units 1/eps^2
    double cr_bound = 0.0;     ///< delta eps = 1/sqrt(F_Q); +inf when F_Q = 0
    double d_alpha_mag = 0.0;
    double d_beta_mag = 0.0;
    Parameter parameter = Parameter::MismatchS;
};

/// F_Q = 4 |d alpha0/d eps|^2 + 4 |d beta0/d eps|^2. Vanishing derivatives
/// carry zero information: the bound is reported as +infinity.
QfiReport qfi_closed_form(const SensitivityPair& sens);

/// Convenience: analytic sensitivity followed by the closed form.
QfiReport qfi_for(const SystemParams& params, Parameter p);

/// A parameterized family of normalized pure states on the truncated space.
using StateFamily = std::function<VectorXc(double)>;

/// The steady-state family eps -> |alpha0(eps), beta0(eps)> at fixed cutoffs.
StateFamily steady_state_family(const SystemParams& params, Parameter p,
                                FockCutoffs cutoffs);

/// Generic SLD-based QFI for a state family.
///
/// Builds rho(eps), forms the central difference d rho, solves the SLD
/// equation in the eigenbasis of rho (L_jk = 2 (d rho)_jk / (p_j + p_k),
/// dropping components with p_j + p_k below eigensum_threshold) and returns
/// trace(rho L^2). fd_step <= 0 selects cbrt(eps_machine) * max(|eps|, 1).
double qfi_sld_from_family(const StateFamily& psi_at, double eps, double fd_step,
                           double eigensum_threshold = 1e-12);

/// Pure-state overlap QFI, 4 (<d psi|d psi> - |<psi|d psi>|^2), with the
/// derivative vector from central differences. Independent of the SLD route.
double qfi_overlap_from_family(const StateFamily& psi_at, double eps,
                               double fd_step);

/// SLD oracle on the physical steady state. fd_step <= 0 selects the
/// default central-difference step for the named parameter.
double qfi_sld_oracle(const SystemParams& params, Parameter p, FockCutoffs cutoffs,
                      double fd_step = 0.0);

/// Pure-state-overlap oracle on the physical steady state.
double qfi_pure_state_oracle(const SystemParams& params, Parameter p,
                             FockCutoffs cutoffs, double fd_step = 0.0);

/// The three-part SLD split for a coherent state in polar form,
/// L = L1 + L2 + L3 with
///   L1 = -2 (|a| d|a| + |b| d|b|)                  (a scalar),
///   L2 = 2 (d ln|a|) n_a + 2 (d ln|b|) n_b,
///   L3 = 2i (d theta_1) [n_a, rho] + 2i (d theta_2) [n_b, rho].
/// Diagnostic only; the polar form breaks down at vanishing amplitude, so
/// assembly requires both magnitudes > 1e-9.
struct SldDecomposition {
    double l1_scalar = 0.0;
    std::pair<double, double> l2_number_weights;
    std::pair<double, double> l3_phase_weights;
    MatrixXc matrix;
};

SldDecomposition sld_decomposition(const SystemParams& params, Parameter p,
                                   FockCutoffs cutoffs);

/// One point of a Cramer-Rao sweep.
struct SweepRow {
    double xi = 0.0;
    double epsilon = 0.0;
    double fisher_info = 0.0;
    double cr_bound = 0.0;
    std::string error;  ///< empty on success; "singular" or "unstable" otherwise

    bool ok() const { return error.empty(); }
};

/// Evaluates the closed-form bound over xi values (kappa = xi * Gamma) and
/// parameter values, in xi-major order. Failed points carry an error marker
/// instead of aborting the sweep.
std::vector<SweepRow> sweep_bound(const SystemParams& base, Parameter p,
                                  const std::vector<double>& xi_values,
                                  const std::vector<double>& epsilon_grid);

}  // namespace aptqfi
