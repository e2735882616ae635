#include "aptqfi/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "aptqfi/errors.hpp"
#include "aptqfi/hamiltonian.hpp"

namespace aptqfi {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kLeakageTol = 1e-8;

/// Precomputed operators of the Lindblad generator at fixed cutoffs.
class Generator {
public:
    Generator(const SystemParams& params, FockCutoffs cutoffs)
        : kappa_(params.kappa), two_gamma_(2.0 * params.gamma_collective) {
        const SparseXc a = annihilation_a(cutoffs);
        const SparseXc b = annihilation_b(cutoffs);
        a_ = a;
        b_ = b;
        a_dag_ = a.adjoint();
        b_dag_ = b.adjoint();
        c_ = (a + b) / std::sqrt(2.0);
        c_dag_ = c_.adjoint();
        n_a_ = (a_dag_ * a).pruned();
        n_b_ = (b_dag_ * b).pruned();
        cc_ = (c_dag_ * c_).pruned();

        // Coherent part: detunings (or their mismatch/dispersive
        // replacements) plus the drive. The damping lives in the dissipators.
        const Matrix2c h = build_hamiltonian(params).entries;
        const Complex drive = params.drive;
        h_c_ = h(0, 0).real() * n_a_ + h(1, 1).real() * n_b_;
        if (h(0, 1).real() != 0.0)
            h_c_ += h(0, 1).real() * SparseXc(a_dag_ * b + b_dag_ * a);
        h_c_ += kI * drive * a_dag_ - kI * std::conj(drive) * a_;
    }

    MatrixXc apply(const MatrixXc& rho) const {
        MatrixXc out = -kI * (h_c_ * rho - rho * h_c_);
        if (kappa_ != 0.0) {
            out += kappa_ * (2.0 * ((a_ * rho) * a_dag_) - n_a_ * rho - rho * n_a_);
            out += kappa_ * (2.0 * ((b_ * rho) * b_dag_) - n_b_ * rho - rho * n_b_);
        }
        out += two_gamma_ * (2.0 * ((c_ * rho) * c_dag_) - cc_ * rho - rho * cc_);
        return out;
    }

private:
    double kappa_;
    double two_gamma_;
    SparseXc a_, b_, a_dag_, b_dag_, c_, c_dag_, n_a_, n_b_, cc_, h_c_;
};

}  // namespace

FockDensityMatrix evolve_master_equation(const FockDensityMatrix& rho0,
                                         const SystemParams& params, double t_end,
                                         double tol,
                                         const StepObserver& observer) {
    params.validate();
    if (tol <= 0.0) throw std::invalid_argument("tol must be > 0");
    if (t_end < 0.0) throw std::invalid_argument("t_end must be >= 0");

    const Generator gen(params, rho0.cutoffs);

    // Dormand-Prince 5(4) coefficients.
    static const double A[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static const double E[7] = {71.0 / 57600,     0.0,
                                -71.0 / 16695,    71.0 / 1920,
                                -17253.0 / 339200, 22.0 / 525,
                                -1.0 / 40};

    FockDensityMatrix state = rho0;
    double t = 0.0;
    double dt = std::min(t_end > 0.0 ? t_end : 1.0, 0.1);
    const double dt_min = std::max(t_end, 1.0) * 1e-14;
    double err_prev = 1.0;

    MatrixXc k[7];
    k[0] = gen.apply(state.entries);

    std::size_t rejections_in_a_row = 0;
    while (t < t_end) {
        dt = std::min(dt, t_end - t);

        for (int stage = 1; stage < 7; ++stage) {
            MatrixXc y = state.entries;
            for (int j = 0; j < stage; ++j)
                if (A[stage][j] != 0.0) y += dt * A[stage][j] * k[j];
            k[stage] = gen.apply(y);
        }
        // Stage 7 evaluates at the 5th-order solution (FSAL).
        MatrixXc y5 = state.entries;
        for (int j = 0; j < 6; ++j)
            if (A[6][j] != 0.0) y5 += dt * A[6][j] * k[j];

        MatrixXc err_mat = MatrixXc::Zero(y5.rows(), y5.cols());
        for (int j = 0; j < 7; ++j)
            if (E[j] != 0.0) err_mat += dt * E[j] * k[j];
        const double err = std::max(err_mat.cwiseAbs().maxCoeff() / tol, 1e-10);

        if (err <= 1.0) {
            t += dt;
            state.entries = 0.5 * (y5 + y5.adjoint().eval());
            if (state.boundary_population() > kLeakageTol)
                throw TruncationTooSmall(
                    "population reached the Fock cutoff boundary; enlarge cutoffs");
            if (observer) observer(t, state);
            k[0] = gen.apply(state.entries);
            const double fac =
                0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            dt *= std::clamp(fac, 0.2, 5.0);
            err_prev = err;
            rejections_in_a_row = 0;
        } else {
            dt *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            if (++rejections_in_a_row > 30 || dt < dt_min)
                throw StepFailure("step controller cannot meet the local tolerance");
        }
    }
    return state;
}

namespace {

/// exp(M) for a small matrix by scaling-and-squaring with a Taylor kernel.
Eigen::Matrix3cd exp_small(Eigen::Matrix3cd m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = int(std::ceil(std::log2(norm / 0.5)));
        m /= std::pow(2.0, squarings);
    }
    Eigen::Matrix3cd result = Eigen::Matrix3cd::Identity();
    Eigen::Matrix3cd term = Eigen::Matrix3cd::Identity();
    for (int n = 1; n <= 32; ++n) {
        term = (term * m / double(n)).eval();
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20) break;
    }
    for (int i = 0; i < squarings; ++i) result = (result * result).eval();
    return result;
}

}  // namespace

MeanTrajectory evolve_means(const SystemParams& params, double t_end, int steps) {
    params.validate();
    if (steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (t_end <= 0.0) throw std::invalid_argument("t_end must be > 0");

    // Augmented linear system d/dt (x, 1) = [[-iH, d], [0, 0]] (x, 1): one
    // matrix exponential per sample interval, exact for any H.
    const Matrix2c h = build_hamiltonian(params).entries;
    Eigen::Matrix3cd aug = Eigen::Matrix3cd::Zero();
    aug.topLeftCorner<2, 2>() = -kI * h;
    aug(0, 2) = params.drive;

    const double dt = t_end / (steps - 1);
    const Eigen::Matrix3cd propagator = exp_small(aug * dt);

    MeanTrajectory traj;
    traj.times.reserve(steps);
    traj.means.reserve(steps);
    Eigen::Vector3cd y{0.0, 0.0, 1.0};
    for (int i = 0; i < steps; ++i) {
        traj.times.push_back(i * dt);
        traj.means.emplace_back(y(0), y(1));
        y = propagator * y;
    }
    return traj;
}

double default_t_end(const SystemParams& params, double tol_ss) {
    params.validate();
    if (params.kappa <= 0.0)
        throw std::invalid_argument(
            "no finite relaxation horizon at kappa = 0 (gamma = Gamma)");
    if (tol_ss <= 0.0 || tol_ss >= 1.0)
        throw std::invalid_argument("tol_ss must be in (0, 1)");
    return std::log(1.0 / tol_ss) / params.kappa;
}

std::pair<Complex, Complex> mode_means(const FockDensityMatrix& rho) {
    const SparseXc a = annihilation_a(rho.cutoffs);
    const SparseXc b = annihilation_b(rho.cutoffs);
    return {(a * rho.entries).trace(), (b * rho.entries).trace()};
}

double fidelity_with_coherent(const FockDensityMatrix& rho, Complex alpha,
                              Complex beta) {
    const VectorXc psi = coherent_state(alpha, beta, rho.cutoffs);
    return (psi.adjoint() * rho.entries * psi).value().real();
}

double annihilation_residual(const FockDensityMatrix& rho, Complex alpha,
                             Complex beta) {
    const SparseXc a = annihilation_a(rho.cutoffs);
    const SparseXc b = annihilation_b(rho.cutoffs);
    const double res_a = (a * rho.entries - alpha * rho.entries).norm();
    const double res_b = (b * rho.entries - beta * rho.entries).norm();
    return std::max(res_a, res_b);
}

double husimi_q(const FockDensityMatrix& rho, Complex mu, Complex nu) {
    const VectorXc probe = coherent_projection(mu, nu, rho.cutoffs);
    constexpr double pi = 3.14159265358979323846;
    return (probe.adjoint() * rho.entries * probe).value().real() / (pi * pi);
}

}  // namespace aptqfi
