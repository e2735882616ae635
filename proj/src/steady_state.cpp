#include "aptqfi/steady_state.hpp"

#include <cmath>

#include "aptqfi/errors.hpp"

namespace aptqfi {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_stable(const EffectiveHamiltonian& H) {
    if (!is_dynamically_stable(H))
        throw Unstable("no steady state: a mode-matrix eigenvalue does not decay");
}

Complex checked_denominator(Complex denom, double scale, const char* what) {
    if (std::abs(denom) < kSingularTol * scale) throw SingularResponse(what);
    return denom;
}
}  // namespace

ModeAmplitudes steady_state_solve(const EffectiveHamiltonian& H, Complex drive,
                                  double det_scale) {
    require_stable(H);
    const Matrix2c& h = H.entries;
    const Complex det = checked_denominator(
        H.determinant(), det_scale, "singular response: det of mode matrix is zero");
    // -i H^{-1} (E, 0)^T via the adjugate, exact at this fixed size.
    return ModeAmplitudes{-kI * h(1, 1) * drive / det, kI * h(1, 0) * drive / det};
}

ModeAmplitudes steady_state_solve(const SystemParams& params) {
    const double g2 = params.gamma_collective * params.gamma_collective;
    return steady_state_solve(build_hamiltonian(params), params.drive, g2);
}

ModeAmplitudes closed_form_base(const SystemParams& params) {
    params.validate();
    if (params.mismatch_s != 0.0 || params.dispersive_g != 0.0)
        throw std::invalid_argument("closed_form_base requires s = g = 0");
    const double gamma = params.gamma_total();
    const double cap = params.gamma_collective;
    require_stable(build_hamiltonian(params));
    const Complex denom = checked_denominator(
        Complex{cap * cap - params.delta * params.delta - gamma * gamma, 0.0},
        cap * cap, "singular response: Gamma^2 - delta^2 - gamma^2 is zero");
    return ModeAmplitudes{-Complex{gamma, -params.delta} * params.drive / denom,
                          cap * params.drive / denom};
}

ModeAmplitudes closed_form_mismatch(const SystemParams& params) {
    params.validate();
    if (params.dispersive_g != 0.0)
        throw std::invalid_argument("closed_form_mismatch requires g = 0");
    const double gamma = params.gamma_total();
    const double cap = params.gamma_collective;
    const double s = params.mismatch_s;
    SystemParams p = params;
    p.delta = 0.0;
    require_stable(build_hamiltonian(p));
    const Complex denom = checked_denominator(
        Complex{cap * cap - gamma * gamma, s * gamma}, cap * cap,
        "singular response: Gamma^2 + i*s*gamma - gamma^2 is zero");
    return ModeAmplitudes{-Complex{gamma, -s} * params.drive / denom,
                          cap * params.drive / denom};
}

ModeAmplitudes closed_form_dispersive(const SystemParams& params) {
    params.validate();
    if (params.mismatch_s != 0.0)
        throw std::invalid_argument("closed_form_dispersive requires s = 0");
    const double gamma = params.gamma_total();
    const Complex cap{params.gamma_collective, params.dispersive_g};
    SystemParams p = params;
    p.mismatch_s = 0.0;
    require_stable(build_hamiltonian(p));
    const Complex denom = checked_denominator(
        cap * cap - params.delta * params.delta - gamma * gamma,
        params.gamma_collective * params.gamma_collective,
        "singular response: (Gamma+ig)^2 - delta^2 - gamma^2 is zero");
    return ModeAmplitudes{-Complex{gamma, -params.delta} * params.drive / denom,
                          cap * params.drive / denom};
}

}  // namespace aptqfi
