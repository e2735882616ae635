#include "aptqfi/sensitivity.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "aptqfi/errors.hpp"

namespace aptqfi {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex square(Complex z) { return z * z; }

/// dH/d eps on the branch build_hamiltonian selects for params.
Matrix2c hamiltonian_derivative(const SystemParams& params, Parameter p,
                                GammaConvention conv) {
    Matrix2c d = Matrix2c::Zero();
    switch (p) {
        case Parameter::MismatchS:
            d(1, 1) = -1.0;
            break;
        case Parameter::DispersiveG:
            d(0, 1) = 1.0;
            d(1, 0) = 1.0;
            break;
        case Parameter::Delta:
            if (params.mismatch_s == 0.0) {
                d(0, 0) = 1.0;
                d(1, 1) = -1.0;
            }  // mismatch branch carries no detuning
            break;
        case Parameter::Gamma:
            d(0, 0) = -kI;
            d(1, 1) = -kI;
            break;
        case Parameter::GammaCollective:
            d(0, 1) = -kI;
            d(1, 0) = -kI;
            if (conv == GammaConvention::TotalTracksCollective) {
                d(0, 0) = -kI;
                d(1, 1) = -kI;
            }
            break;
        case Parameter::DriveReal:
            throw std::logic_error("drive does not enter the mode matrix");
    }
    return d;
}

}  // namespace

std::string parameter_name(Parameter p) {
    switch (p) {
        case Parameter::MismatchS: return "mismatch_s";
        case Parameter::DispersiveG: return "dispersive_g";
        case Parameter::Delta: return "delta";
        case Parameter::Gamma: return "gamma";
        case Parameter::GammaCollective: return "gamma_collective";
        case Parameter::DriveReal: return "drive";
    }
    return "unknown";
}

Parameter parameter_from_name(const std::string& name) {
    if (name == "mismatch_s") return Parameter::MismatchS;
    if (name == "dispersive_g") return Parameter::DispersiveG;
    if (name == "delta") return Parameter::Delta;
    if (name == "gamma") return Parameter::Gamma;
    if (name == "gamma_collective") return Parameter::GammaCollective;
    if (name == "drive") return Parameter::DriveReal;
    throw std::invalid_argument("unknown parameter name: " + name);
}

double parameter_value(const SystemParams& params, Parameter p) {
    switch (p) {
        case Parameter::MismatchS: return params.mismatch_s;
        case Parameter::DispersiveG: return params.dispersive_g;
        case Parameter::Delta: return params.delta;
        case Parameter::Gamma: return params.gamma_total();
        case Parameter::GammaCollective: return params.gamma_collective;
        case Parameter::DriveReal: return std::abs(params.drive);
    }
    return 0.0;
}

SystemParams with_parameter(const SystemParams& params, Parameter p, double value,
                            GammaConvention conv) {
    SystemParams out = params;
    switch (p) {
        case Parameter::MismatchS:
            out.mismatch_s = value;
            out.delta = 0.0;
            break;
        case Parameter::DispersiveG:
            out.dispersive_g = value;
            break;
        case Parameter::Delta:
            out.delta = value;
            break;
        case Parameter::Gamma:
            out.kappa = value - params.gamma_collective;
            break;
        case Parameter::GammaCollective:
            out.gamma_collective = value;
            if (conv == GammaConvention::TotalFixed)
                out.kappa = params.gamma_total() - value;
            break;
        case Parameter::DriveReal:
            out.drive = params.drive + (value - parameter_value(params, p));
            break;
    }
    return out;
}

SensitivityPair analytic_sensitivity(const SystemParams& params, Parameter p,
                                     GammaConvention conv) {
    params.validate();
    const double gamma = params.gamma_total();
    const double cap = params.gamma_collective;
    const Complex drive = params.drive;

    if (p == Parameter::MismatchS && params.dispersive_g == 0.0) {
        const SystemParams at = with_parameter(params, p, params.mismatch_s);
        steady_state_solve(at);  // surfaces Unstable / SingularResponse
        const Complex denom{cap * cap - gamma * gamma, params.mismatch_s * gamma};
        return {kI * cap * cap * drive / square(denom),
                -kI * cap * gamma * drive / square(denom), p};
    }
    if (p == Parameter::DispersiveG && params.mismatch_s == 0.0) {
        steady_state_solve(params);  // surfaces Unstable / SingularResponse
        const Complex capg{cap, params.dispersive_g};
        const Complex denom =
            capg * capg - params.delta * params.delta - gamma * gamma;
        return {2.0 * kI * capg * Complex{gamma, -params.delta} * drive / square(denom),
                -kI * (capg * capg + params.delta * params.delta + gamma * gamma) *
                    drive / square(denom),
                p};
    }

    // General path: x solves H x = -i (E, 0)^T, so dx = -H^{-1} (dH/d eps) x.
    const SystemParams at =
        p == Parameter::MismatchS ? with_parameter(params, p, params.mismatch_s)
                                  : params;
    const EffectiveHamiltonian H = build_hamiltonian(at);
    const Complex det = H.determinant();

    if (p == Parameter::DriveReal) {
        const ModeAmplitudes unit = steady_state_solve(H, Complex{1.0, 0.0},
                                                       cap * cap);
        return {unit.alpha0, unit.beta0, p};
    }

    const ModeAmplitudes x = steady_state_solve(H, drive, cap * cap);
    const Matrix2c dH = hamiltonian_derivative(at, p, conv);
    const Eigen::Vector2cd rhs = dH * Eigen::Vector2cd(x.alpha0, x.beta0);
    const Matrix2c& h = H.entries;
    // -H^{-1} rhs by the adjugate
    const Complex da = -(h(1, 1) * rhs(0) - h(0, 1) * rhs(1)) / det;
    const Complex db = -(-h(1, 0) * rhs(0) + h(0, 0) * rhs(1)) / det;
    return {da, db, p};
}

double default_fd_step(const SystemParams& params, Parameter p) {
    const double scale =
        std::max(std::abs(parameter_value(params, p)), params.gamma_collective);
    return scale * std::cbrt(DBL_EPSILON);
}

SensitivityPair fd_sensitivity(const SystemParams& params, Parameter p,
                               double step, GammaConvention conv) {
    const double h = step > 0.0 ? step : default_fd_step(params, p);
    const double center = parameter_value(params, p);
    const ModeAmplitudes hi =
        steady_state_solve(with_parameter(params, p, center + h, conv));
    const ModeAmplitudes lo =
        steady_state_solve(with_parameter(params, p, center - h, conv));
    return {(hi.alpha0 - lo.alpha0) / (2.0 * h), (hi.beta0 - lo.beta0) / (2.0 * h),
            p};
}

ScalingExponents scaling_exponent(const SystemParams& params, Parameter p,
                                  const std::vector<double>& grid) {
    std::vector<double> lx, la, lb;
    for (double eps : grid) {
        if (eps <= 0.0) continue;
        try {
            const SensitivityPair s =
                analytic_sensitivity(with_parameter(params, p, eps), p);
            lx.push_back(std::log(eps));
            la.push_back(std::log(std::abs(s.d_alpha)));
            lb.push_back(std::log(std::abs(s.d_beta)));
        } catch (const SingularResponse&) {
        } catch (const Unstable&) {
        }
    }
    const std::size_t n = lx.size();
    if (n < 4)
        throw InsufficientGrid("scaling fit needs at least 4 usable grid points");

    double mx = 0, ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += lx[i]; ma += la[i]; mb += lb[i]; }
    mx /= n; ma /= n; mb /= n;
    double sxx = 0, sxa = 0, sxb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxa += (lx[i] - mx) * (la[i] - ma);
        sxb += (lx[i] - mx) * (lb[i] - mb);
    }
    return {sxa / sxx, sxb / sxx};
}

}  // namespace aptqfi
