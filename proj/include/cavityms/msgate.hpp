#pragma once

#include "cavityms/qops.hpp"

namespace cavityms {

// Closed-form gate kinematics: the cavity field traces a circle in phase space
// of radius g_eff/|delta| while the collective spin picks up a geometric phase.
struct MsTrajectory {
    double g_eff = 0.0;
    double delta = 0.0;

    double tau() const { return 2.0 * pi / std::abs(delta); }
    double gate_time() const { return pi * std::abs(delta) / (2.0 * g_eff * g_eff); }
    // number of closed loops per gate, integer when delta = 2 sqrt(m) g_eff
    double loops() const { return (delta / (2.0 * g_eff)) * (delta / (2.0 * g_eff)); }
    double area() const { return pi * (g_eff / delta) * (g_eff / delta); }

    cx alpha_t(double t) const;
    double beta_t(double t) const;

    static MsTrajectory for_loops(int m, double g_eff, int sign_delta = 1);
};

// exp(-i(alpha a^dag + alpha^* a) S_x) * exp(i beta S_x^2) at time t
ComplexOperator u_ms(const MsTrajectory& traj, double t, const HilbertLayout& layout);

// e^{i beta S_x^2} restricted to two qubits (no photon factor)
Eigen::Matrix4cd ideal_atomic_unitary(double beta);

// the target entangler, beta = sign(delta) * pi/2
Eigen::Matrix4cd ideal_gate_map(int sign_delta);

}  // namespace cavityms
