#include "aptqfi/fock.hpp"

#include <cmath>
#include <vector>

#include "aptqfi/errors.hpp"

namespace aptqfi {

namespace {
constexpr double kNormDeficitTol = 1e-12;

/// Poisson-weighted single-mode coherent amplitudes, unnormalized tail kept.
std::vector<Complex> mode_amplitudes(Complex amp, int cutoff) {
    std::vector<Complex> c(cutoff + 1);
    c[0] = std::exp(-0.5 * std::norm(amp));
    for (int n = 1; n <= cutoff; ++n) c[n] = c[n - 1] * amp / std::sqrt(double(n));
    return c;
}
}  // namespace

int coherent_cutoff(double amplitude_magnitude) {
    const double m = std::abs(amplitude_magnitude);
    const int n = int(std::ceil(m * m + 10.0 * m + 10.0));
    return std::min(n, 40);
}

FockCutoffs default_cutoffs(Complex alpha, Complex beta) {
    return {coherent_cutoff(std::abs(alpha)), coherent_cutoff(std::abs(beta))};
}

VectorXc coherent_projection(Complex alpha, Complex beta, FockCutoffs cutoffs) {
    const auto ca = mode_amplitudes(alpha, cutoffs.n_a);
    const auto cb = mode_amplitudes(beta, cutoffs.n_b);

    VectorXc psi(cutoffs.dim());
    for (int na = 0; na <= cutoffs.n_a; ++na)
        for (int nb = 0; nb <= cutoffs.n_b; ++nb)
            psi(cutoffs.index(na, nb)) = ca[na] * cb[nb];
    return psi;
}

VectorXc coherent_state(Complex alpha, Complex beta, FockCutoffs cutoffs) {
    VectorXc psi = coherent_projection(alpha, beta, cutoffs);
    const double norm2 = psi.squaredNorm();
    if (1.0 - norm2 > kNormDeficitTol)
        throw TruncationTooSmall("coherent state loses more than 1e-12 norm at cutoffs (" +
                                 std::to_string(cutoffs.n_a) + ", " +
                                 std::to_string(cutoffs.n_b) + ")");
    return psi / std::sqrt(norm2);
}

SparseXc annihilation_a(FockCutoffs cutoffs) {
    SparseXc a(cutoffs.dim(), cutoffs.dim());
    std::vector<Eigen::Triplet<Complex>> t;
    t.reserve(cutoffs.dim());
    for (int na = 1; na <= cutoffs.n_a; ++na)
        for (int nb = 0; nb <= cutoffs.n_b; ++nb)
            t.emplace_back(cutoffs.index(na - 1, nb), cutoffs.index(na, nb),
                           std::sqrt(double(na)));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

SparseXc annihilation_b(FockCutoffs cutoffs) {
    SparseXc b(cutoffs.dim(), cutoffs.dim());
    std::vector<Eigen::Triplet<Complex>> t;
    t.reserve(cutoffs.dim());
    for (int na = 0; na <= cutoffs.n_a; ++na)
        for (int nb = 1; nb <= cutoffs.n_b; ++nb)
            t.emplace_back(cutoffs.index(na, nb - 1), cutoffs.index(na, nb),
                           std::sqrt(double(nb)));
    b.setFromTriplets(t.begin(), t.end());
    return b;
}

FockDensityMatrix FockDensityMatrix::vacuum(FockCutoffs cutoffs) {
    MatrixXc rho = MatrixXc::Zero(cutoffs.dim(), cutoffs.dim());
    rho(0, 0) = 1.0;
    return {cutoffs, std::move(rho)};
}

FockDensityMatrix FockDensityMatrix::coherent(Complex alpha, Complex beta,
                                              FockCutoffs cutoffs) {
    const VectorXc psi = coherent_state(alpha, beta, cutoffs);
    return {cutoffs, psi * psi.adjoint()};
}

double FockDensityMatrix::trace_error() const {
    return std::abs(entries.trace() - Complex{1.0, 0.0});
}

double FockDensityMatrix::hermiticity_error() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double FockDensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(
        0.5 * (entries + entries.adjoint()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double FockDensityMatrix::boundary_population() const {
    double pop = 0.0;
    for (int na = 0; na <= cutoffs.n_a; ++na)
        for (int nb = 0; nb <= cutoffs.n_b; ++nb)
            if (na >= cutoffs.n_a - 1 || nb >= cutoffs.n_b - 1)
                pop += entries(cutoffs.index(na, nb), cutoffs.index(na, nb)).real();
    return pop;
}

}  // namespace aptqfi
