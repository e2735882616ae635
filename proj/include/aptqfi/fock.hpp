#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "aptqfi/system.hpp"

namespace aptqfi {

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;
using SparseXc = Eigen::SparseMatrix<Complex>;

/// Truncation limits of the two-mode Fock space; mode a keeps levels
/// 0..n_a, mode b keeps 0..n_b.
struct FockCutoffs {
    int n_a = 0;
    int n_b = 0;

    int dim() const { return (n_a + 1) * (n_b + 1); }
    /// Row-major composite index of |n_a, n_b>.
    int index(int na, int nb) const { return na * (n_b + 1) + nb; }

    bool operator==(const FockCutoffs&) const = default;
};

/// Smallest adequate truncation for a coherent amplitude: the Poisson tail
/// bound |amp|^2 + 10|amp| + 10, capped at 40 per mode.
int coherent_cutoff(double amplitude_magnitude);
FockCutoffs default_cutoffs(Complex alpha, Complex beta);

/// Truncated two-mode density operator.
struct FockDensityMatrix {
    FockCutoffs cutoffs;
    MatrixXc entries;

    static FockDensityMatrix vacuum(FockCutoffs cutoffs);
    /// |alpha, beta><alpha, beta| from the truncated coherent vector.
    static FockDensityMatrix coherent(Complex alpha, Complex beta,
                                      FockCutoffs cutoffs);

    double trace_error() const;       ///< |tr rho - 1|
    double hermiticity_error() const; ///< max |rho - rho^dagger|
    double min_eigenvalue() const;
    /// Total population in the top two Fock levels of either mode, the
    /// truncation-leakage monitor.
    double boundary_population() const;
};

/// Normalized truncated two-mode coherent state with Poisson amplitudes
/// e^{-(|a|^2+|b|^2)/2} a^{n_a} b^{n_b} / sqrt(n_a! n_b!).
///
/// Throws TruncationTooSmall when the untruncated-norm deficit of the raw
/// vector exceeds 1e-12.
VectorXc coherent_state(Complex alpha, Complex beta, FockCutoffs cutoffs);

/// The raw projection of |alpha, beta> onto the truncated space: exact
/// Poisson coefficients, no renormalization, no adequacy check. Norm < 1.
VectorXc coherent_projection(Complex alpha, Complex beta, FockCutoffs cutoffs);

/// Annihilation operators on the truncated space.
SparseXc annihilation_a(FockCutoffs cutoffs);
SparseXc annihilation_b(FockCutoffs cutoffs);

}  // namespace aptqfi
