#include "cavityms/msgate.hpp"

#include <cmath>
#include <stdexcept>

namespace cavityms {

namespace {
void require_delta(double delta) {
    if (delta == 0.0) throw std::invalid_argument("trajectory undefined for delta = 0");
}
}  // namespace

cx MsTrajectory::alpha_t(double t) const {
    require_delta(delta);
    return ii * (g_eff / delta) * (1.0 - std::exp(ii * delta * t));
}

double MsTrajectory::beta_t(double t) const {
    require_delta(delta);
    double r = g_eff / delta;
    return r * r * (delta * t - std::sin(delta * t));
}

MsTrajectory MsTrajectory::for_loops(int m, double g_eff, int sign_delta) {
    if (m < 1) throw std::invalid_argument("for_loops: m must be >= 1");
    if (g_eff == 0.0) throw std::invalid_argument("for_loops: g_eff must be nonzero");
    double mag = 2.0 * std::sqrt(double(m)) * std::abs(g_eff);
    return {std::abs(g_eff), sign_delta >= 0 ? mag : -mag};
}

ComplexOperator u_ms(const MsTrajectory& traj, double t, const HilbertLayout& layout) {
    require_delta(traj.delta);
    cx alpha = traj.alpha_t(t);
    double beta = traj.beta_t(t);

    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;
    Matrix sx = collective_spin(layout, 'x').mat;
    Matrix disp_gen = (alpha * a.adjoint() + std::conj(alpha) * a) * sx;
    // factor order is part of the contract: displacement first, phase second
    Matrix u = expm_hermitian(disp_gen, 1.0) * expm_hermitian(sx * sx, -beta);
    return {layout, std::move(u)};
}

Eigen::Matrix4cd ideal_atomic_unitary(double beta) {
    Matrix sx1{{0.0, 0.5}, {0.5, 0.0}};
    Matrix id2 = Matrix::Identity(2, 2);
    Matrix sx = kron(sx1, id2) + kron(id2, sx1);
    return expm_hermitian(sx * sx, -beta);
}

Eigen::Matrix4cd ideal_gate_map(int sign_delta) {
    return ideal_atomic_unitary(sign_delta >= 0 ? 0.5 * pi : -0.5 * pi);
}

}  // namespace cavityms
