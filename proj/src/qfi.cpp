#include "aptqfi/qfi.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aptqfi/errors.hpp"

namespace aptqfi {

namespace {
constexpr Complex kI{0.0, 1.0};

double family_fd_step(double eps, double fd_step) {
    if (fd_step > 0.0) return fd_step;
    return std::cbrt(DBL_EPSILON) * std::max(std::abs(eps), 1.0);
}
}  // namespace

QfiReport qfi_closed_form(const SensitivityPair& sens) {
    QfiReport report;
    report.parameter = sens.parameter;
    report.d_alpha_mag = std::abs(sens.d_alpha);
    report.d_beta_mag = std::abs(sens.d_beta);
    report.fisher_info =
        4.0 * (std::norm(sens.d_alpha) + std::norm(sens.d_beta));
    report.cr_bound = report.fisher_info > 0.0
                          ? 1.0 / std::sqrt(report.fisher_info)
                          : std::numeric_limits<double>::infinity();
    return report;
}

QfiReport qfi_for(const SystemParams& params, Parameter p) {
    return qfi_closed_form(analytic_sensitivity(params, p));
}

StateFamily steady_state_family(const SystemParams& params, Parameter p,
                                FockCutoffs cutoffs) {
    return [params, p, cutoffs](double eps) {
        const ModeAmplitudes x = steady_state_solve(with_parameter(params, p, eps));
        return coherent_state(x.alpha0, x.beta0, cutoffs);
    };
}

double qfi_sld_from_family(const StateFamily& psi_at, double eps, double fd_step,
                           double eigensum_threshold) {
    const double h = family_fd_step(eps, fd_step);
    const VectorXc psi = psi_at(eps);
    const VectorXc psi_hi = psi_at(eps + h);
    const VectorXc psi_lo = psi_at(eps - h);

    const MatrixXc rho = psi * psi.adjoint();
    const MatrixXc drho =
        (psi_hi * psi_hi.adjoint() - psi_lo * psi_lo.adjoint()) / (2.0 * h);

    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(rho);
    const Eigen::VectorXd p = solver.eigenvalues();
    const MatrixXc m = solver.eigenvectors().adjoint() * drho * solver.eigenvectors();

    // trace(rho L^2) with L_jk = 2 m_jk / (p_j + p_k); sums below threshold
    // belong to the kernel and do not contribute.
    double fisher = 0.0;
    const int d = int(p.size());
    for (int j = 0; j < d; ++j) {
        if (p(j) <= 0.0) continue;
        for (int k = 0; k < d; ++k) {
            const double sum = p(j) + p(k);
            if (sum < eigensum_threshold) continue;
            fisher += 4.0 * p(j) * std::norm(m(j, k)) / (sum * sum);
        }
    }
    return fisher;
}

double qfi_overlap_from_family(const StateFamily& psi_at, double eps,
                               double fd_step) {
    const double h = family_fd_step(eps, fd_step);
    const VectorXc psi = psi_at(eps);
    const VectorXc dpsi = (psi_at(eps + h) - psi_at(eps - h)) / (2.0 * h);
    const Complex overlap = psi.dot(dpsi);
    return 4.0 * (dpsi.squaredNorm() - std::norm(overlap));
}

double qfi_sld_oracle(const SystemParams& params, Parameter p, FockCutoffs cutoffs,
                      double fd_step) {
    const double h = fd_step > 0.0 ? fd_step : default_fd_step(params, p);
    return qfi_sld_from_family(steady_state_family(params, p, cutoffs),
                               parameter_value(params, p), h);
}

double qfi_pure_state_oracle(const SystemParams& params, Parameter p,
                             FockCutoffs cutoffs, double fd_step) {
    const double h = fd_step > 0.0 ? fd_step : default_fd_step(params, p);
    return qfi_overlap_from_family(steady_state_family(params, p, cutoffs),
                                   parameter_value(params, p), h);
}

SldDecomposition sld_decomposition(const SystemParams& params, Parameter p,
                                   FockCutoffs cutoffs) {
    const ModeAmplitudes x = steady_state_solve(params);
    const SensitivityPair sens = analytic_sensitivity(params, p);

    const double ra = std::abs(x.alpha0);
    const double rb = std::abs(x.beta0);
    if (ra <= 1e-9 || rb <= 1e-9)
        throw std::domain_error(
            "polar SLD decomposition undefined at vanishing amplitude");

    // d|a| = Re(conj(a) da)/|a|, d theta = Im(conj(a) da)/|a|^2
    const double dra = (std::conj(x.alpha0) * sens.d_alpha).real() / ra;
    const double drb = (std::conj(x.beta0) * sens.d_beta).real() / rb;
    const double dth1 = (std::conj(x.alpha0) * sens.d_alpha).imag() / (ra * ra);
    const double dth2 = (std::conj(x.beta0) * sens.d_beta).imag() / (rb * rb);

    SldDecomposition out;
    out.l1_scalar = -2.0 * (ra * dra + rb * drb);
    out.l2_number_weights = {2.0 * dra / ra, 2.0 * drb / rb};
    out.l3_phase_weights = {dth1, dth2};

    const int dim = cutoffs.dim();
    const MatrixXc rho =
        FockDensityMatrix::coherent(x.alpha0, x.beta0, cutoffs).entries;

    Eigen::VectorXd na(dim), nb(dim);
    for (int ia = 0; ia <= cutoffs.n_a; ++ia)
        for (int ib = 0; ib <= cutoffs.n_b; ++ib) {
            na(cutoffs.index(ia, ib)) = ia;
            nb(cutoffs.index(ia, ib)) = ib;
        }

    const Eigen::VectorXd diag = Eigen::VectorXd::Constant(dim, out.l1_scalar) +
                                 out.l2_number_weights.first * na +
                                 out.l2_number_weights.second * nb;
    MatrixXc l = diag.cast<Complex>().asDiagonal();
    // [n, rho]_ij = (n_i - n_j) rho_ij for diagonal n
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            l(i, j) += 2.0 * kI *
                       (dth1 * (na(i) - na(j)) + dth2 * (nb(i) - nb(j))) * rho(i, j);
    out.matrix = std::move(l);
    return out;
}

std::vector<SweepRow> sweep_bound(const SystemParams& base, Parameter p,
                                  const std::vector<double>& xi_values,
                                  const std::vector<double>& epsilon_grid) {
    std::vector<SweepRow> rows;
    rows.reserve(xi_values.size() * epsilon_grid.size());
    for (double xi : xi_values) {
        SystemParams at_xi = base;
        at_xi.kappa = xi * base.gamma_collective;
        for (double eps : epsilon_grid) {
            SweepRow row;
            row.xi = xi;
            row.epsilon = eps;
            try {
                const QfiReport r = qfi_for(with_parameter(at_xi, p, eps), p);
                row.fisher_info = r.fisher_info;
                row.cr_bound = r.cr_bound;
            } catch (const SingularResponse&) {
                row.error = "singular";
            } catch (const Unstable&) {
                row.error = "unstable";
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace aptqfi
