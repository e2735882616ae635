#include "aptqfi/hamiltonian.hpp"

#include <cmath>

namespace aptqfi {

namespace {
constexpr Complex kI{0.0, 1.0};
}

EffectiveHamiltonian build_hamiltonian(const SystemParams& params) {
    params.validate();
    const double gamma = params.gamma_total();
    const double cap_gamma = params.gamma_collective;

    Matrix2c h;
    if (params.mismatch_s != 0.0) {
        // Mismatch scenario: one detuning zero, the other offset by -s.
        h(0, 0) = -kI * gamma;
        h(1, 1) = Complex{-params.mismatch_s, -gamma};
    } else {
        h(0, 0) = Complex{params.delta, -gamma};
        h(1, 1) = Complex{-params.delta, -gamma};
    }

    const Complex off = params.dispersive_g != 0.0
                            ? Complex{params.dispersive_g, -cap_gamma}
                            : -kI * cap_gamma;
    h(0, 1) = off;
    h(1, 0) = off;
    return EffectiveHamiltonian{h};
}

SpectralInfo spectrum(const EffectiveHamiltonian& H, double ep_tol) {
    const Matrix2c& h = H.entries;
    const Complex mean = 0.5 * (h(0, 0) + h(1, 1));
    const Complex disc = 0.25 * (h(0, 0) - h(1, 1)) * (h(0, 0) - h(1, 1)) +
                         h(0, 1) * h(1, 0);
    const Complex root = std::sqrt(disc);

    SpectralInfo info;
    info.eigenvalues = {mean + root, mean - root};
    info.splitting = 2.0 * std::abs(root);

    // ep_tol is relative to the squared coupling |H12*H21| (= Gamma^2 for the
    // standard parametrization), since exact coalescence is measure-zero.
    const double scale = std::abs(h(0, 1) * h(1, 0));
    if (std::abs(disc) < ep_tol * scale) {
        info.phase = Phase::ExceptionalPoint;
    } else if (std::abs(root.real()) >= std::abs(root.imag())) {
        info.phase = Phase::Unbroken;
    } else {
        info.phase = Phase::Broken;
    }
    return info;
}

bool check_anti_pt(const EffectiveHamiltonian& H, double tol) {
    const Matrix2c& h = H.entries;
    Matrix2c swapped;  // sigma_x conj(H) sigma_x
    swapped(0, 0) = std::conj(h(1, 1));
    swapped(0, 1) = std::conj(h(1, 0));
    swapped(1, 0) = std::conj(h(0, 1));
    swapped(1, 1) = std::conj(h(0, 0));
    return (swapped + h).cwiseAbs().maxCoeff() < tol;
}

bool is_dynamically_stable(const EffectiveHamiltonian& H) {
    const SpectralInfo info = spectrum(H);
    return info.eigenvalues.first.imag() < 0.0 &&
           info.eigenvalues.second.imag() < 0.0;
}

}  // namespace aptqfi
